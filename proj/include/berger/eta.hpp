#pragma once

// Local eta terms as Weyl sums with a removable singularity at X = 0. The
// limit is read off as the constant term of the restriction to a generic line
// X = t (u, v).

#include "berger/laurent_series.hpp"
#include "berger/rational.hpp"
#include "berger/roots.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace berger {

struct EtaTermSpec {
    Weight shift;            // alpha_k
    Weight boundary_weight;  // kappa_k + rho_H on the torus
    Rational offset;
};

inline EtaTermSpec alpha0_term() { return {determine_alpha(0), kappa_plus_rho_H(0), Rational(0)}; }
inline EtaTermSpec alpha3_term() { return {determine_alpha(3), kappa_plus_rho_H(3), Rational(0)}; }

class Direction {
public:
    Direction(Rational u, Rational v) : x_{std::move(u), std::move(v)} {
        for (const auto& w : weyl_group()) {
            const CartanVector wx = w(x_);
            for (const auto& beta : positive_roots())
                if (beta(wx).is_zero()) throw std::invalid_argument("Direction: a root vanishes on " + x_.to_string());
            if (delta()(wx).is_zero()) throw std::invalid_argument("Direction: delta vanishes on a Weyl image of " + x_.to_string());
        }
    }

    static Direction parse(const std::string& text) {
        const auto comma = text.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("Direction: expected \"u,v\"");
        return {Rational::parse(text.substr(0, comma)), Rational::parse(text.substr(comma + 1))};
    }

    const CartanVector& vector() const { return x_; }

private:
    CartanVector x_;
};

inline std::vector<Direction> default_directions() { return {Direction(5, 1), Direction(7, 2)}; }

inline constexpr int kDefaultEtaOrder = 16;

namespace detail {

/// prod_{beta in Delta+} A^(beta(x) t)
inline LaurentSeries ahat_product(const CartanVector& x, int order) {
    LaurentSeries p = LaurentSeries::constant(1, order);
    for (const auto& beta : positive_roots()) p *= ahat_series(beta(x), order);
    return p;
}

/// 1 / (c t), exact through t^order.
inline LaurentSeries inverse_linear(const Rational& c, int order) {
    return LaurentSeries::monomial(c.inverse(), -1, order);
}

}  // namespace detail

/// The full Weyl sum along X = t * dir, before taking the constant term.
/// With `signed_sum` false every sign(w) is replaced by +1.
inline LaurentSeries eta_weyl_series(const EtaTermSpec& term, const Direction& dir, int order, bool signed_sum = true) {
    if (order < 10) throw std::invalid_argument("eta: truncation order must be at least 10");
    const CartanVector& x = dir.vector();
    const Weight exponent = term.shift - Rational(1, 2) * delta();

    LaurentSeries sum = LaurentSeries::constant(0, order);
    for (const auto& w : weyl_group()) {
        const CartanVector wx = w(x);
        const CartanVector pwx = restrict_to_s(wx);
        const LaurentSeries interior = detail::ahat_product(wx, order) * ahat_series(delta()(wx), order) *
                                       LaurentSeries::monomial(exponent(wx), 1, order).exp();
        const LaurentSeries boundary =
            detail::ahat_product(pwx, order) * LaurentSeries::monomial(term.boundary_weight(pwx), 1, order).exp();
        LaurentSeries summand = detail::inverse_linear(delta()(wx), order) * (interior - boundary);
        if (signed_sum && w.sign() < 0) summand = -summand;
        sum += summand;
    }
    for (const auto& beta : positive_roots()) sum *= detail::inverse_linear(beta(x), order);
    return sum.scaled(2);
}

/// The X -> 0 limit of the Weyl sum; throws if a pole survives.
inline Rational eta_local(const EtaTermSpec& term, const Direction& dir, int order = kDefaultEtaOrder) {
    const LaurentSeries s = eta_weyl_series(term, dir, order);
    for (int k = s.lowest(); k < 0; ++k)
        if (!s.coeff(k).is_zero())
            throw std::logic_error("eta: residual pole of order " + std::to_string(-k) + " in the Weyl sum");
    return term.offset + s.coeff(0);
}

inline Rational eta_D(int order = kDefaultEtaOrder) { return eta_local(alpha0_term(), Direction(5, 1), order); }

inline Rational eta_B(int order = kDefaultEtaOrder) {
    const Direction dir(5, 1);
    return Rational(1) + eta_local(alpha0_term(), dir, order) + eta_local(alpha3_term(), dir, order);
}

}  // namespace berger
