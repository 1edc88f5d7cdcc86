#pragma once

// Weights and Cartan elements of so(5) in the coordinates of the maximal
// torus spanned by e12, e34. The factor i is dropped everywhere: a weight
// (a, b) means i(a e12* + b e34*) and evaluates on x e12 + y e34 as ax + by.

#include "berger/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace berger {

struct CartanVector {
    Rational x, y;

    friend CartanVector operator+(const CartanVector& a, const CartanVector& b) { return {a.x + b.x, a.y + b.y}; }
    friend CartanVector operator*(const Rational& s, const CartanVector& v) { return {s * v.x, s * v.y}; }
    friend bool operator==(const CartanVector&, const CartanVector&) = default;
    std::string to_string() const { return "(" + x.to_string() + ", " + y.to_string() + ")"; }
};

struct Weight {
    Rational a, b;

    Rational operator()(const CartanVector& v) const { return a * v.x + b * v.y; }
    Rational norm2() const { return a * a + b * b; }
    Rational dot(const Weight& o) const { return a * o.a + b * o.b; }

    friend Weight operator+(const Weight& u, const Weight& v) { return {u.a + v.a, u.b + v.b}; }
    friend Weight operator-(const Weight& u, const Weight& v) { return {u.a - v.a, u.b - v.b}; }
    friend Weight operator*(const Rational& s, const Weight& w) { return {s * w.a, s * w.b}; }
    friend bool operator==(const Weight&, const Weight&) = default;
    std::string to_string() const { return "(" + a.to_string() + ", " + b.to_string() + ")"; }
};

/// Signed permutation of the two torus coordinates.
struct WeylElement {
    bool swap = false;
    int sx = 1;
    int sy = 1;

    int sign() const { return sx * sy * (swap ? -1 : 1); }

    CartanVector operator()(const CartanVector& v) const {
        const Rational& p = swap ? v.y : v.x;
        const Rational& q = swap ? v.x : v.y;
        return {Rational(sx) * p, Rational(sy) * q};
    }
    Weight operator()(const Weight& w) const {
        const CartanVector v = (*this)(CartanVector{w.a, w.b});
        return {v.x, v.y};
    }

    /// (g * h)(v) = g(h(v))
    friend WeylElement operator*(const WeylElement& g, const WeylElement& h) {
        WeylElement out;
        out.swap = g.swap != h.swap;
        out.sx = g.sx * (g.swap ? h.sy : h.sx);
        out.sy = g.sy * (g.swap ? h.sx : h.sy);
        return out;
    }
    friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// W(B2), order 8.
inline std::vector<WeylElement> weyl_group() {
    std::vector<WeylElement> w;
    for (bool swap : {false, true})
        for (int sx : {1, -1})
            for (int sy : {1, -1}) w.push_back({swap, sx, sy});
    return w;
}

inline std::vector<Weight> positive_roots() { return {{1, 1}, {1, -1}, {1, 0}, {0, 1}}; }

inline Weight rho_G() { return {Rational(3, 2), Rational(1, 2)}; }

/// iota12* as a functional on the torus: (2 e12* + e34*) / 5.
inline Weight iota12_dual() { return {Rational(2, 5), Rational(1, 5)}; }

inline Weight rho_H() { return Rational(1, 2) * iota12_dual(); }

/// kappa_k + rho_H as a functional on the torus.
inline Weight kappa_plus_rho_H(int k) { return Rational(k) * iota12_dual() + rho_H(); }

inline Weight delta() { return {1, -2}; }

/// The Cartan element E up to its positive scale 1/sqrt5.
inline CartanVector E_direction() { return {1, -2}; }

/// Generator of the Cartan subalgebra s of H, iota12 = 2 e12 + e34.
inline CartanVector iota12_vector() { return {2, 1}; }

/// Orthogonal projection of t onto s = span(iota12).
inline CartanVector restrict_to_s(const CartanVector& v) {
    return Rational(1, 5) * (Rational(2) * v.x + v.y) * iota12_vector();
}

/// The weight alpha_k on the spin coset rho_G + Z^2 with
/// alpha_k|_s = k iota12* + rho_H and 0 <= alpha_k(E) < delta(E).
inline Weight determine_alpha(int k) {
    if (k < 0) throw std::invalid_argument("determine_alpha: k must be non-negative");
    // restriction condition: alpha(iota12) = 2a + b = k + 1/2; on the coset this
    // is the line (1/2, k - 1/2) + t delta, t integral
    const Weight base{Rational(1, 2), Rational(k) - Rational(1, 2)};
    const Rational target = kappa_plus_rho_H(k)(iota12_vector());
    if (base(iota12_vector()) != target) throw std::logic_error("determine_alpha: base point off the restriction line");
    const CartanVector E = E_direction();
    const Rational dE = delta()(E);
    // smallest t with base(E) + t delta(E) >= 0
    const Rational t = -Rational((base(E) / dE).floor());  // ceil(-base(E) / dE)
    const Weight alpha = base + t * delta();
    if (alpha(E) < 0 || alpha(E) >= dE) throw std::logic_error("determine_alpha: window selection failed");
    return alpha;
}

}  // namespace berger
