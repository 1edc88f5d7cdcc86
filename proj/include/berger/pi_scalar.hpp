#pragma once

// Finite sums  sum_k x_k * pi^k  with x_k in SqrtField.

#include "berger/sqrt_field.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace berger {

class PiScalar {
public:
    PiScalar() = default;
    PiScalar(SqrtField x) { set(0, std::move(x)); }  // NOLINT: field elements embed
    PiScalar(Rational r) : PiScalar(SqrtField(std::move(r))) {}  // NOLINT
    template <std::integral I>
    PiScalar(I n) : PiScalar(SqrtField(n)) {}  // NOLINT

    /// x * pi^k
    static PiScalar monomial(SqrtField x, int k) {
        PiScalar out;
        out.set(k, std::move(x));
        return out;
    }

    const std::map<int, SqrtField>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    SqrtField coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? SqrtField{} : it->second;
    }

    /// The pi^0 part; throws if any other power is present.
    SqrtField to_field() const {
        for (const auto& [k, x] : terms_)
            if (k != 0) throw std::domain_error("PiScalar: value is not free of pi");
        return coeff(0);
    }

    PiScalar operator-() const {
        PiScalar out;
        for (const auto& [k, x] : terms_) out.terms_.emplace(k, -x);
        return out;
    }

    friend PiScalar operator+(PiScalar a, const PiScalar& b) {
        for (const auto& [k, x] : b.terms_) a.set(k, a.coeff(k) + x);
        return a;
    }
    friend PiScalar operator-(const PiScalar& a, const PiScalar& b) { return a + (-b); }
    PiScalar& operator+=(const PiScalar& o) { return *this = *this + o; }
    PiScalar& operator-=(const PiScalar& o) { return *this = *this - o; }

    friend PiScalar operator*(const PiScalar& a, const PiScalar& b) {
        PiScalar out;
        for (const auto& [ka, xa] : a.terms_)
            for (const auto& [kb, xb] : b.terms_) out.set(ka + kb, out.coeff(ka + kb) + xa * xb);
        return out;
    }
    PiScalar& operator*=(const PiScalar& o) { return *this = *this * o; }

    /// Inverse of a single-term value x * pi^k.
    PiScalar inverse() const {
        if (terms_.size() != 1) throw std::domain_error("PiScalar: only monomials are invertible");
        const auto& [k, x] = *terms_.begin();
        return monomial(x.inverse(), -k);
    }
    friend PiScalar operator/(const PiScalar& a, const PiScalar& b) { return a * b.inverse(); }

    friend bool operator==(const PiScalar& a, const PiScalar& b) { return a.terms_ == b.terms_; }

    /// "x" for pure field values, otherwise "(x) * pi^k + ..." ascending in k.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [k, x] : terms_) {
            if (!first) out += " + ";
            first = false;
            if (k == 0) {
                out += x.to_string();
                continue;
            }
            const bool simple = x.terms().size() == 1;
            out += simple ? x.to_string() : "(" + x.to_string() + ")";
            out += " * pi^" + std::to_string(k);
        }
        return out;
    }

private:
    void set(int k, SqrtField x) {
        if (x.is_zero())
            terms_.erase(k);
        else
            terms_[k] = std::move(x);
    }

    std::map<int, SqrtField> terms_;  // no zero entries
};

inline bool is_zero(const PiScalar& x) { return x.is_zero(); }

inline PiScalar pi_power(int k) { return PiScalar::monomial(SqrtField(1), k); }

}  // namespace berger
