#pragma once

// Alternating k-forms on the 7-dimensional space p, with PiScalar coefficients
// on the basis e^{i1} ^ ... ^ e^{ik}, i1 < ... < ik.

#include "berger/pi_scalar.hpp"
#include "berger/tangent_vector.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger {

class AltForm {
public:
    using Mask = std::uint8_t;  // bit (i-1) set <=> index i present

    explicit AltForm(int degree) : degree_(degree) {
        if (degree < 0 || degree > 7) throw std::invalid_argument("AltForm: degree must be in 0..7");
    }

    /// Sign that sorts `indices` (1-based), or 0 when an index repeats.
    static int sort_sign(std::vector<int>& indices) {
        int sign = 1;
        for (std::size_t i = 0; i < indices.size(); ++i)
            for (std::size_t j = 0; j + 1 < indices.size() - i; ++j)
                if (indices[j] > indices[j + 1]) {
                    std::swap(indices[j], indices[j + 1]);
                    sign = -sign;
                }
        for (std::size_t i = 1; i < indices.size(); ++i)
            if (indices[i] == indices[i - 1]) return 0;
        return sign;
    }

    /// Adds c * e^{i1} ^ ... ^ e^{ik} for indices in any order.
    AltForm& add(std::vector<int> indices, const PiScalar& c) {
        if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("AltForm: wrong number of indices");
        for (int i : indices)
            if (i < 1 || i > 7) throw std::out_of_range("AltForm: index must be in 1..7");
        const int s = sort_sign(indices);
        if (s == 0) return *this;
        const Mask m = mask_of(indices);
        set(m, coeff_mask(m) + (s > 0 ? c : -c));
        return *this;
    }

    static AltForm constant(const PiScalar& c) {
        AltForm f(0);
        f.set(0, c);
        return f;
    }

    /// The top-degree form e^1 ^ ... ^ e^7.
    static AltForm volume() { return AltForm(7).add({1, 2, 3, 4, 5, 6, 7}, PiScalar(1)); }

    int degree() const { return degree_; }
    const std::map<Mask, PiScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Value on (e_{i1}, ..., e_{ik}); indices in any order.
    PiScalar evaluate(std::vector<int> indices) const {
        if (static_cast<int>(indices.size()) != degree_) throw std::invalid_argument("AltForm: wrong number of arguments");
        const int s = sort_sign(indices);
        if (s == 0) return {};
        const PiScalar c = coeff_mask(mask_of(indices));
        return s > 0 ? c : -c;
    }

    /// Value on arbitrary tangent vectors by multilinear expansion.
    PiScalar evaluate(const std::vector<TangentVector>& args) const {
        if (static_cast<int>(args.size()) != degree_) throw std::invalid_argument("AltForm: wrong number of arguments");
        PiScalar total;
        std::vector<int> idx(degree_);
        std::function<void(int, SqrtField)> rec = [&](int slot, SqrtField weight) {
            if (slot == degree_) {
                total += PiScalar(weight) * evaluate(idx);
                return;
            }
            for (int i = 1; i <= 7; ++i) {
                const SqrtField& x = args[slot][i];
                if (x.is_zero()) continue;
                idx[slot] = i;
                rec(slot + 1, weight * x);
            }
        };
        rec(0, SqrtField(1));
        return total;
    }

    /// Coefficient on the sorted basis element with these (sorted) indices.
    PiScalar coeff(const std::vector<int>& sorted_indices) const { return evaluate(sorted_indices); }

    friend AltForm operator+(AltForm a, const AltForm& b) {
        a.require_degree(b.degree_);
        for (const auto& [m, c] : b.terms_) a.set(m, a.coeff_mask(m) + c);
        return a;
    }
    friend AltForm operator-(const AltForm& a, const AltForm& b) { return a + (-b); }
    AltForm operator-() const { return PiScalar(-1) * *this; }

    friend AltForm operator*(const PiScalar& s, const AltForm& f) {
        AltForm out(f.degree_);
        for (const auto& [m, c] : f.terms_) out.set(m, s * c);
        return out;
    }

    friend bool operator==(const AltForm& a, const AltForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Exterior product.
    friend AltForm wedge(const AltForm& a, const AltForm& b) {
        if (a.degree_ + b.degree_ > 7) throw std::invalid_argument("AltForm: wedge exceeds top degree");
        AltForm out(a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                if (ma & mb) continue;
                // shuffle sign: pairs (i in a, j in b) with i > j
                int inversions = 0;
                for (int j = 0; j < 7; ++j)
                    if (mb & (1u << j)) inversions += std::popcount(static_cast<unsigned>(ma >> (j + 1)));
                const PiScalar prod = ca * cb;
                const Mask m = static_cast<Mask>(ma | mb);
                out.set(m, out.coeff_mask(m) + (inversions % 2 ? -prod : prod));
            }
        return out;
    }

    static std::vector<int> indices_of(Mask m) {
        std::vector<int> out;
        for (int i = 0; i < 7; ++i)
            if (m & (1u << i)) out.push_back(i + 1);
        return out;
    }

    /// "c e^1^e^2 + ..." in increasing basis order.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<std::vector<int>, PiScalar>> ordered;
        for (const auto& [m, c] : terms_) ordered.emplace_back(indices_of(m), c);
        std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::string out;
        for (const auto& [idx, c] : ordered) {
            if (!out.empty()) out += " + ";
            out += "(" + c.to_string() + ") ";
            for (std::size_t k = 0; k < idx.size(); ++k) out += (k ? "^e" : "e") + std::to_string(idx[k]);
        }
        return out;
    }

private:
    static Mask mask_of(const std::vector<int>& indices) {
        Mask m = 0;
        for (int i : indices) m |= static_cast<Mask>(1u << (i - 1));
        return m;
    }
    PiScalar coeff_mask(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? PiScalar{} : it->second;
    }
    void set(Mask m, PiScalar c) {
        if (c.is_zero())
            terms_.erase(m);
        else
            terms_[m] = std::move(c);
    }
    void require_degree(int d) const {
        if (d != degree_) throw std::invalid_argument("AltForm: degree mismatch");
    }

    int degree_;
    std::map<Mask, PiScalar> terms_;
};

}  // namespace berger
