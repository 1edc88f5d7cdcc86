#pragma once

// Truncated univariate Laurent series over Q.
//
// A series stores the coefficients of t^k for lowest() <= k <= order();
// everything above order() is unknown. Arithmetic keeps only the window that
// is determined by the operands.

#include "berger/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger {

class LaurentSeries {
public:
    LaurentSeries() : LaurentSeries(0, 0, {Rational{}}) {}

    LaurentSeries(int lowest, int order, std::vector<Rational> coeffs)
        : low_(lowest), order_(order), c_(std::move(coeffs)) {
        if (order_ < low_) throw std::invalid_argument("LaurentSeries: order below lowest exponent");
        if (c_.size() != static_cast<std::size_t>(order_ - low_ + 1))
            throw std::invalid_argument("LaurentSeries: coefficient count does not match window");
    }

    /// c * t^k, known through t^order.
    static LaurentSeries monomial(const Rational& c, int k, int order) {
        if (order < k) throw std::invalid_argument("LaurentSeries: monomial above truncation order");
        std::vector<Rational> v(order - k + 1);
        v[0] = c;
        return {k, order, std::move(v)};
    }

    static LaurentSeries constant(const Rational& c, int order) { return monomial(c, 0, order); }

    int lowest() const { return low_; }
    int order() const { return order_; }

    /// Coefficient of t^k; zero below the window, an error above it.
    Rational coeff(int k) const {
        if (k > order_) throw std::out_of_range("LaurentSeries: coefficient beyond truncation order");
        if (k < low_) return {};
        return c_[k - low_];
    }

    /// Lowest exponent with a nonzero coefficient, or order()+1 when all vanish.
    int valuation() const {
        for (int k = low_; k <= order_; ++k)
            if (!c_[k - low_].is_zero()) return k;
        return order_ + 1;
    }

    /// Drops leading zero coefficients.
    LaurentSeries normalized() const {
        const int v = valuation();
        if (v > order_) return constant_zero_at(order_);
        return {v, order_, std::vector<Rational>(c_.begin() + (v - low_), c_.end())};
    }

    LaurentSeries truncated(int order) const {
        if (order > order_) throw std::invalid_argument("LaurentSeries: cannot extend truncation order");
        if (order < low_) return constant_zero_at(order);
        return {low_, order, std::vector<Rational>(c_.begin(), c_.begin() + (order - low_ + 1))};
    }

    LaurentSeries operator-() const { return scaled(Rational(-1)); }

    LaurentSeries scaled(const Rational& s) const {
        LaurentSeries out = *this;
        for (auto& x : out.c_) x *= s;
        return out;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = std::min(a.low_, b.low_);
        const int order = std::min(a.order_, b.order_);
        if (order < low) return constant_zero_at(order);
        std::vector<Rational> v(order - low + 1);
        for (int k = low; k <= order; ++k) v[k - low] = a.coeff(k) + b.coeff(k);
        return {low, order, std::move(v)};
    }
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        const int low = a.low_ + b.low_;
        const int order = std::min(a.order_ + b.low_, b.order_ + a.low_);
        std::vector<Rational> v(order - low + 1);
        for (int i = 0; i <= a.order_ - a.low_; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (int j = 0; i + j <= order - low && j <= b.order_ - b.low_; ++j)
                if (!b.c_[j].is_zero()) v[i + j] += a.c_[i] * b.c_[j];
        }
        return {low, order, std::move(v)};
    }

    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator*=(const LaurentSeries& o) { return *this = *this * o; }

    /// 1/s. With s = t^L u(t), u(0) != 0, the result is t^-L / u(t), known
    /// through t^(order - 2L).
    LaurentSeries reciprocal() const {
        const LaurentSeries s = normalized();
        if (s.c_[0].is_zero()) throw std::domain_error("LaurentSeries: reciprocal of a series with zero leading coefficient");
        const int n = s.order_ - s.low_;  // known degrees of u: 0..n
        std::vector<Rational> r(n + 1);
        const Rational inv0 = s.c_[0].inverse();
        r[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            Rational acc;
            for (int i = 1; i <= k; ++i)
                if (!s.c_[i].is_zero()) acc += s.c_[i] * r[k - i];
            r[k] = -acc * inv0;
        }
        return {-s.low_, -s.low_ + n, std::move(r)};
    }

    /// exp(s) for s without constant or polar part.
    LaurentSeries exp() const {
        if (valuation() <= 0) throw std::domain_error("LaurentSeries: exp needs a series vanishing at t = 0");
        const int n = order_;
        std::vector<Rational> e(n + 1);
        e[0] = 1;
        // E' = s' E  =>  n E_n = sum_{k=1}^n k s_k E_{n-k}
        for (int m = 1; m <= n; ++m) {
            Rational acc;
            for (int k = std::max(1, low_); k <= m; ++k) {
                const Rational sk = coeff(k);
                if (!sk.is_zero()) acc += Rational(k) * sk * e[m - k];
            }
            e[m] = acc / Rational(m);
        }
        return {0, n, std::move(e)};
    }

    /// Substitution t -> c t.
    LaurentSeries rescaled(const Rational& c) const {
        LaurentSeries out = *this;
        for (int k = low_; k <= order_; ++k) out.c_[k - low_] *= c.pow(k);
        return out;
    }

    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
        if (a.order_ != b.order_) return false;
        for (int k = std::min(a.low_, b.low_); k <= a.order_; ++k)
            if (a.coeff(k) != b.coeff(k)) return false;
        return true;
    }

    /// "c_k t^k + ... + O(t^(order+1))"
    std::string to_string() const {
        std::string out;
        for (int k = low_; k <= order_; ++k) {
            const Rational& c = c_[k - low_];
            if (c.is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += c.to_string();
            if (k != 0) out += " t^" + std::to_string(k);
        }
        if (out.empty()) out = "0";
        return out + " + O(t^" + std::to_string(order_ + 1) + ")";
    }

private:
    static LaurentSeries constant_zero_at(int order) { return {order, order, {Rational{}}}; }

    int low_;
    int order_;
    std::vector<Rational> c_;
};

/// The series of z / (2 sinh(z/2)) at z = c t, through t^order.
inline LaurentSeries ahat_series(const Rational& c, int order) {
    if (order < 0) throw std::invalid_argument("ahat_series: negative order");
    // 2 sinh(t/2) / t = sum_k t^(2k) / (4^k (2k+1)!)
    std::vector<Rational> v(order + 1);
    for (int k = 0; 2 * k <= order; ++k)
        v[2 * k] = Rational(BigInt(1), (BigInt(1) << (2 * k)) * factorial(2 * k + 1));
    const LaurentSeries base = LaurentSeries(0, order, std::move(v)).reciprocal();
    return c.is_zero() ? LaurentSeries::constant(Rational(1), order) : base.rescaled(c);
}

}  // namespace berger
