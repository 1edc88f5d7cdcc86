#pragma once

// Exact rationals over arbitrary-precision integers.
//
// Always kept in lowest terms with a positive denominator; zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace berger {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;

    template <std::integral I>
    Rational(I n) : v_(static_cast<long>(n)) {}  // NOLINT: implicit by design of literals

    template <std::integral I, std::integral J>
    Rational(I n, J d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(static_cast<long>(n), static_cast<long>(d));
        v_.canonicalize();
    }

    Rational(const BigInt& n, const BigInt& d) {
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }

    explicit Rational(const BigInt& n) : v_(n) {}

    /// Parses "p" or "p/q".
    static Rational parse(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + text + "'");
        if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q.canonicalize();
        return from_mpq(std::move(q));
    }

    static Rational from_mpq(mpq_class q) {
        Rational r;
        r.v_ = std::move(q);
        return r;
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return from_mpq(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        return from_mpq(1 / v_);
    }

    Rational abs() const { return from_mpq(::abs(v_)); }

    Rational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Rational out(1), base = *this;
        while (e > 0) {
            if (e & 1) out *= base;
            base *= base;
            e >>= 1;
        }
        return out;
    }

    /// Largest integer <= value.
    BigInt floor() const {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    /// "p/q", or "p" when q == 1.
    std::string to_string() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    mpq_class v_{0};
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

/// Representative of x in Q/Z lying in [0, 1).
inline Rational mod_one(const Rational& x) { return x - Rational(x.floor()); }

/// Representative of x in Q/Z lying in (-1/2, 1/2].
inline Rational centered_mod_one(const Rational& x) {
    Rational r = mod_one(x);
    if (r > Rational(1, 2)) r -= 1;
    return r;
}

inline BigInt factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

}  // namespace berger
