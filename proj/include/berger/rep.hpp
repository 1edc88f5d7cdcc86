#pragma once

// Finite-dimensional representations of the rank <= 2 algebras A1, B2, G2:
// Weyl dimension, Freudenthal multiplicities, Brauer-Klimyk tensor products
// and restriction to sl2 subalgebras. Weights are Dynkin labels (coordinates
// in the fundamental-weight basis).

#include "berger/matrix.hpp"
#include "berger/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger {

using DynkinWeight = std::vector<int>;

class RootSystem {
public:
    enum class Type { A1, B2, G2 };

    static RootSystem A1() { return RootSystem(Type::A1, "A1", Matrix<Rational>(1, 1, {2})); }
    /// alpha1 = e1 - e2 (long), alpha2 = e2 (short).
    static RootSystem B2() { return RootSystem(Type::B2, "B2", Matrix<Rational>(2, 2, {2, -1, -1, 1})); }
    /// alpha1 long, alpha2 short; (1,0) is the adjoint, (0,1) the 7-dimensional representation.
    static RootSystem G2() { return RootSystem(Type::G2, "G2", Matrix<Rational>(2, 2, {6, -3, -3, 2})); }

    Type type() const { return type_; }
    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    const Matrix<Rational>& cartan() const { return cartan_; }

    /// Dynkin labels of the simple root alpha_i (row i of the Cartan matrix).
    DynkinWeight simple_root(int i) const {
        DynkinWeight w(rank_);
        for (int j = 0; j < rank_; ++j) w[j] = cartan_(i, j).numerator().get_si();
        return w;
    }

    /// Coordinates in the simple-root basis.
    std::vector<Rational> root_coordinates(const DynkinWeight& w) const {
        std::vector<Rational> out(rank_);
        for (int j = 0; j < rank_; ++j)
            for (int i = 0; i < rank_; ++i) out[j] += Rational(w[i]) * cartan_inverse_(i, j);
        return out;
    }

    Rational inner(const DynkinWeight& a, const DynkinWeight& b) const {
        const auto x = root_coordinates(a), y = root_coordinates(b);
        Rational s;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) s += x[i] * gram_(i, j) * y[j];
        return s;
    }

    /// Sum of simple-root coordinates.
    Rational height(const DynkinWeight& w) const {
        Rational h;
        for (const auto& c : root_coordinates(w)) h += c;
        return h;
    }

    DynkinWeight rho() const { return DynkinWeight(rank_, 1); }

    const std::vector<DynkinWeight>& positive_roots() const { return positive_roots_; }

    /// Weyl group elements as integer matrices acting on Dynkin labels (row vectors).
    const std::vector<Matrix<Rational>>& weyl_group() const { return weyl_; }

    DynkinWeight reflect(const DynkinWeight& w, int i) const {
        DynkinWeight out = w;
        const DynkinWeight a = simple_root(i);
        for (int j = 0; j < rank_; ++j) out[j] -= w[i] * a[j];
        return out;
    }

    static bool is_dominant(const DynkinWeight& w) {
        return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
    }

    /// Dominant Weyl conjugate and the parity (+1/-1) of the reflections used.
    std::pair<DynkinWeight, int> dominant_conjugate(DynkinWeight w) const {
        int sign = 1;
        for (bool changed = true; changed;) {
            changed = false;
            for (int i = 0; i < rank_; ++i)
                if (w[i] < 0) {
                    w = reflect(w, i);
                    sign = -sign;
                    changed = true;
                }
        }
        return {w, sign};
    }

    /// lambda - mu is a non-negative integral combination of simple roots.
    bool dominates(const DynkinWeight& lambda, const DynkinWeight& mu) const {
        DynkinWeight d(rank_);
        for (int i = 0; i < rank_; ++i) d[i] = lambda[i] - mu[i];
        for (const auto& c : root_coordinates(d))
            if (c < 0 || !c.is_integer()) return false;
        return true;
    }

private:
    RootSystem(Type type, std::string name, Matrix<Rational> gram)
        : type_(type), name_(std::move(name)), rank_(static_cast<int>(gram.rows())), gram_(std::move(gram)) {
        cartan_ = Matrix<Rational>(rank_, rank_);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j) cartan_(i, j) = Rational(2) * gram_(i, j) / gram_(j, j);
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (!cartan_(i, j).is_integer()) throw std::logic_error("RootSystem: non-integral Cartan matrix");
        cartan_inverse_ = inverse(cartan_);
        build_weyl_group();
        build_positive_roots();
    }

    static Matrix<Rational> inverse(const Matrix<Rational>& m) {
        if (m.rows() == 1) return Matrix<Rational>(1, 1, {m(0, 0).inverse()});
        const Rational det = m.determinant();
        return det.inverse() * Matrix<Rational>(2, 2, {m(1, 1), -m(0, 1), -m(1, 0), m(0, 0)});
    }

    Matrix<Rational> reflection_matrix(int i) const {
        Matrix<Rational> s(rank_, rank_);
        for (int r = 0; r < rank_; ++r) {
            DynkinWeight e(rank_);
            e[r] = 1;
            const DynkinWeight img = reflect(e, i);
            for (int c = 0; c < rank_; ++c) s(r, c) = img[c];
        }
        return s;
    }

    void build_weyl_group() {
        weyl_ = {Matrix<Rational>::identity(rank_)};
        for (std::size_t n = 0; n < weyl_.size(); ++n)
            for (int i = 0; i < rank_; ++i) {
                const Matrix<Rational> g = weyl_[n] * reflection_matrix(i);
                if (std::find(weyl_.begin(), weyl_.end(), g) == weyl_.end()) weyl_.push_back(g);
            }
    }

    void build_positive_roots() {
        std::set<DynkinWeight> roots;
        for (int i = 0; i < rank_; ++i) {
            const DynkinWeight a = simple_root(i);
            for (const auto& g : weyl_) {
                DynkinWeight img(rank_);
                for (int c = 0; c < rank_; ++c)
                    for (int r = 0; r < rank_; ++r) img[c] += a[r] * g(r, c).numerator().get_si();
                if (height(img) > 0) roots.insert(img);
            }
        }
        positive_roots_.assign(roots.begin(), roots.end());
    }

    Type type_;
    std::string name_;
    int rank_;
    Matrix<Rational> gram_;
    Matrix<Rational> cartan_;
    Matrix<Rational> cartan_inverse_;
    std::vector<Matrix<Rational>> weyl_;
    std::vector<DynkinWeight> positive_roots_;
};

struct HighestWeight {
    RootSystem system;
    DynkinWeight labels;

    HighestWeight(RootSystem rs, DynkinWeight w) : system(std::move(rs)), labels(std::move(w)) {
        if (static_cast<int>(labels.size()) != system.rank())
            throw std::invalid_argument("HighestWeight: expected " + std::to_string(system.rank()) + " labels");
        if (!RootSystem::is_dominant(labels)) throw std::invalid_argument("HighestWeight: weight is not dominant");
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + std::to_string(labels[i]);
        return s + ")";
    }
};

using WeightMultiset = std::map<DynkinWeight, long>;

inline long weyl_dimension(const HighestWeight& hw) {
    const RootSystem& rs = hw.system;
    DynkinWeight shifted = hw.labels;
    for (auto& x : shifted) x += 1;
    Rational d(1);
    for (const auto& a : rs.positive_roots()) d *= rs.inner(shifted, a) / rs.inner(rs.rho(), a);
    if (!d.is_integer()) throw std::logic_error("weyl_dimension: non-integral result");
    return d.numerator().get_si();
}

/// Weight multiplicities by Freudenthal's recursion.
inline WeightMultiset freudenthal(const HighestWeight& hw) {
    const RootSystem& rs = hw.system;
    const int n = rs.rank();
    const DynkinWeight& lambda = hw.labels;
    auto add = [n](DynkinWeight a, const DynkinWeight& b, int k) {
        for (int i = 0; i < n; ++i) a[i] += k * b[i];
        return a;
    };
    DynkinWeight lr = add(lambda, rs.rho(), 1);
    const Rational top = rs.inner(lr, lr);

    // weights by depth below lambda
    std::vector<std::vector<DynkinWeight>> layers{{lambda}};
    std::set<DynkinWeight> seen{lambda};
    while (!layers.back().empty()) {
        std::vector<DynkinWeight> next;
        for (const auto& mu : layers.back())
            for (int i = 0; i < n; ++i) {
                const DynkinWeight nu = add(mu, rs.simple_root(i), -1);
                if (seen.count(nu)) continue;
                if (!rs.dominates(lambda, rs.dominant_conjugate(nu).first)) continue;
                seen.insert(nu);
                next.push_back(nu);
            }
        layers.push_back(std::move(next));
    }

    WeightMultiset mult{{lambda, 1}};
    auto get = [&mult](const DynkinWeight& w) {
        auto it = mult.find(w);
        return it == mult.end() ? 0L : it->second;
    };
    for (std::size_t depth = 1; depth < layers.size(); ++depth)
        for (const auto& mu : layers[depth]) {
            Rational rhs;
            for (const auto& a : rs.positive_roots())
                for (int k = 1;; ++k) {
                    const DynkinWeight up = add(mu, a, k);
                    const long m = get(up);
                    if (m == 0 && !seen.count(up)) break;
                    rhs += Rational(2 * m) * rs.inner(up, a);
                }
            const DynkinWeight mr = add(mu, rs.rho(), 1);
            const Rational value = rhs / (top - rs.inner(mr, mr));
            if (!value.is_integer() || value < 0) throw std::logic_error("freudenthal: non-integral multiplicity");
            if (!value.is_zero()) mult[mu] = value.numerator().get_si();
        }
    return mult;
}

inline long total_mass(const WeightMultiset& w) {
    return std::accumulate(w.begin(), w.end(), 0L, [](long s, const auto& kv) { return s + kv.second; });
}

struct Component {
    HighestWeight hw;
    long multiplicity;
};

/// Brauer-Klimyk: V(a) (x) V(b) = sum over weights mu of V(b) of sign(w) V(w.(a + mu)).
inline std::vector<Component> klimyk_tensor(const HighestWeight& a, const HighestWeight& b) {
    if (a.system.type() != b.system.type()) throw std::invalid_argument("klimyk_tensor: mismatched root systems");
    const RootSystem& rs = a.system;
    const int n = rs.rank();
    std::map<DynkinWeight, long> acc;
    for (const auto& [mu, m] : freudenthal(b)) {
        DynkinWeight v(n);
        for (int i = 0; i < n; ++i) v[i] = a.labels[i] + mu[i] + 1;
        const auto [dom, sign] = rs.dominant_conjugate(v);
        if (std::any_of(dom.begin(), dom.end(), [](int x) { return x == 0; })) continue;
        DynkinWeight hw(n);
        for (int i = 0; i < n; ++i) hw[i] = dom[i] - 1;
        acc[hw] += sign * m;
    }
    std::vector<Component> out;
    for (const auto& [hw, m] : acc) {
        if (m < 0) throw std::logic_error("klimyk_tensor: negative multiplicity");
        if (m > 0) out.push_back({HighestWeight(rs, hw), m});
    }
    const long total = std::accumulate(out.begin(), out.end(), 0L, [](long s, const Component& c) {
        return s + c.multiplicity * weyl_dimension(c.hw);
    });
    if (total != weyl_dimension(a) * weyl_dimension(b)) throw std::logic_error("klimyk_tensor: dimension mismatch");
    return out;
}

/// Decomposes a multiset of sl2 levels into irreducibles kappa_k by peeling
/// the string of the current top level; result sorted ascending.
inline std::vector<int> peel_sl2_strings(std::map<int, long> levels) {
    std::vector<int> out;
    while (!levels.empty()) {
        const int top = levels.rbegin()->first;
        if (top < 0) throw std::logic_error("peel_sl2_strings: level function is not symmetric");
        for (int l = -top; l <= top; ++l) {
            auto it = levels.find(l);
            if (it == levels.end() || it->second <= 0) throw std::logic_error("peel_sl2_strings: broken sl2 string");
            if (--it->second == 0) levels.erase(it);
        }
        out.push_back(top);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Restriction of a G2 representation to the principal SO(3); weight mu goes
/// to its height, which sends the 7-dimensional representation to kappa_3.
inline std::vector<int> branch_principal_sl2(const HighestWeight& hw) {
    if (hw.system.type() != RootSystem::Type::G2) throw std::invalid_argument("branch_principal_sl2: need a G2 weight");
    std::map<int, long> levels;
    for (const auto& [mu, m] : freudenthal(hw)) {
        const Rational h = hw.system.height(mu);
        if (!h.is_integer()) throw std::logic_error("branch_principal_sl2: fractional level");
        levels[static_cast<int>(h.numerator().get_si())] += m;
    }
    return peel_sl2_strings(std::move(levels));
}

/// gamma_(p,q) of SO(5), p >= q >= 0 in the orthonormal coordinates of e12*, e34*.
inline HighestWeight so5_highest_weight(int p, int q) {
    if (q < 0 || p < q) throw std::invalid_argument("so5_highest_weight: need p >= q >= 0");
    return HighestWeight(RootSystem::B2(), {p - q, 2 * q});
}

/// Restriction of gamma_(p,q) to the irreducible SO(3): a weight with orthonormal
/// coordinates (a, b) has level 2a + b.
inline std::vector<int> branch_so5_to_so3(int p, int q) {
    std::map<int, long> levels;
    for (const auto& [mu, m] : freudenthal(so5_highest_weight(p, q))) {
        // Dynkin (m1, m2) -> orthonormal (m1 + m2/2, m2/2)
        const Rational a = Rational(mu[0]) + Rational(mu[1], 2);
        const Rational b = Rational(mu[1], 2);
        const Rational level = Rational(2) * a + b;
        if (!level.is_integer()) throw std::logic_error("branch_so5_to_so3: fractional level");
        levels[static_cast<int>(level.numerator().get_si())] += m;
    }
    return peel_sl2_strings(std::move(levels));
}

inline HighestWeight kappa(int k) { return HighestWeight(RootSystem::A1(), {2 * k}); }

/// H-content of S (x) S computed two ways, as sorted kappa lists.
struct SpinorSquareDecomposition {
    std::vector<int> via_clebsch_gordan;  // (kappa_0 + kappa_3)^(x)2
    std::vector<int> via_g2;              // branch the G2 summands of (R + I)^(x)2
};

inline SpinorSquareDecomposition spinor_square_decomposition() {
    SpinorSquareDecomposition d;
    for (int a : {0, 3})
        for (int b : {0, 3})
            for (const auto& c : klimyk_tensor(kappa(a), kappa(b)))
                for (long m = 0; m < c.multiplicity; ++m) d.via_clebsch_gordan.push_back(c.hw.labels[0] / 2);

    const RootSystem g2 = RootSystem::G2();
    const HighestWeight one(g2, {0, 0}), seven(g2, {0, 1});
    for (const auto* a : {&one, &seven})
        for (const auto* b : {&one, &seven})
            for (const auto& c : klimyk_tensor(*a, *b))
                for (long m = 0; m < c.multiplicity; ++m)
                    for (int k : branch_principal_sl2(c.hw)) d.via_g2.push_back(k);
    std::sort(d.via_clebsch_gordan.begin(), d.via_clebsch_gordan.end());
    std::sort(d.via_g2.begin(), d.via_g2.end());
    return d;
}

/// Distinct G2 summands of I (x) I share no H-type.
inline bool g2_summands_have_disjoint_h_content() {
    const RootSystem g2 = RootSystem::G2();
    const HighestWeight seven(g2, {0, 1});
    std::vector<std::set<int>> contents;
    for (const auto& c : klimyk_tensor(seven, seven)) {
        const auto ks = branch_principal_sl2(c.hw);
        contents.emplace_back(ks.begin(), ks.end());
    }
    for (std::size_t i = 0; i < contents.size(); ++i)
        for (std::size_t j = i + 1; j < contents.size(); ++j)
            for (int k : contents[i])
                if (contents[j].count(k)) return false;
    return true;
}

}  // namespace berger
