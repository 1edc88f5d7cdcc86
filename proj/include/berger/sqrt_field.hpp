#pragma once

// The multi-quadratic field Q(sqrt2, sqrt3, sqrt5, sqrt7).
//
// An element is a sparse sum of c_r * sqrt(r) over the sixteen squarefree
// divisors r of 210. Radicands are keyed internally by a 4-bit mask over the
// primes (2, 3, 5, 7); sqrt(a) * sqrt(b) then has mask a ^ b and picks up the
// integer factor prod(primes in a & b).

#include "berger/rational.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger {

enum class Sign { negative = -1, zero = 0, positive = 1 };

namespace detail {

inline constexpr std::array<int, 4> kPrimes{2, 3, 5, 7};

constexpr int radicand_of_mask(unsigned mask) {
    int r = 1;
    for (unsigned b = 0; b < 4; ++b)
        if (mask & (1u << b)) r *= kPrimes[b];
    return r;
}

/// Mask for a squarefree divisor of 210, or -1.
constexpr int mask_of_radicand(long r) {
    if (r <= 0) return -1;
    unsigned mask = 0;
    for (unsigned b = 0; b < 4; ++b) {
        const int p = kPrimes[b];
        if (r % p == 0) {
            r /= p;
            if (r % p == 0) return -1;
            mask |= 1u << b;
        }
    }
    return r == 1 ? static_cast<int>(mask) : -1;
}

}  // namespace detail

class SqrtField {
public:
    using Term = std::pair<std::uint8_t, Rational>;  // (mask, coefficient)

    SqrtField() = default;
    SqrtField(Rational r) {  // NOLINT: rationals embed
        if (!r.is_zero()) terms_.emplace_back(std::uint8_t{0}, std::move(r));
    }
    template <std::integral I>
    SqrtField(I n) : SqrtField(Rational(n)) {}  // NOLINT

    /// The radicands admitted, ascending.
    static constexpr std::array<int, 16> radicands() {
        return {1, 2, 3, 5, 6, 7, 10, 14, 15, 21, 30, 35, 42, 70, 105, 210};
    }

    /// coeff * sqrt(radicand); radicand must be a squarefree divisor of 210.
    static SqrtField radical(long radicand, const Rational& coeff = Rational(1)) {
        const int mask = detail::mask_of_radicand(radicand);
        if (mask < 0)
            throw std::invalid_argument("SqrtField: radicand " + std::to_string(radicand) +
                                        " is not a squarefree divisor of 210");
        SqrtField out;
        if (!coeff.is_zero()) out.terms_.emplace_back(static_cast<std::uint8_t>(mask), coeff);
        return out;
    }

    /// Exact square root of a non-negative rational whose squarefree part divides 210.
    static SqrtField sqrt(const Rational& x) {
        if (x.sign() < 0) throw std::domain_error("SqrtField: square root of a negative number");
        if (x.is_zero()) return {};
        // sqrt(p/q) = sqrt(p*q) / q
        BigInt n = x.numerator() * x.denominator();
        BigInt square_part = 1;
        long radicand = 1;
        for (int p : detail::kPrimes) {
            BigInt pp = p;
            int e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), pp.get_mpz_t())) {
                n /= p;
                ++e;
            }
            for (int i = 0; i < e / 2; ++i) square_part *= p;
            if (e % 2) radicand *= p;
        }
        BigInt root;
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0)
            throw std::invalid_argument("SqrtField: square root leaves the field");
        mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
        square_part *= root;
        return radical(radicand, Rational(square_part, x.denominator()));
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0); }

    /// Coefficient of sqrt(radicand) (zero when absent).
    Rational coeff(long radicand) const {
        const int mask = detail::mask_of_radicand(radicand);
        if (mask < 0) throw std::invalid_argument("SqrtField: bad radicand");
        for (const auto& [m, c] : terms_)
            if (m == mask) return c;
        return {};
    }

    /// The rational value; throws unless the element is rational.
    Rational to_rational() const {
        if (!is_rational()) throw std::domain_error("SqrtField: element is irrational");
        return terms_.empty() ? Rational{} : terms_[0].second;
    }

    double to_double() const {
        double v = 0;
        for (const auto& [m, c] : terms_) v += c.to_double() * std::sqrt(double(detail::radicand_of_mask(m)));
        return v;
    }

    SqrtField operator-() const {
        SqrtField out = *this;
        for (auto& t : out.terms_) t.second = -t.second;
        return out;
    }

    friend SqrtField operator+(const SqrtField& a, const SqrtField& b) { return merge(a, b, false); }
    friend SqrtField operator-(const SqrtField& a, const SqrtField& b) { return merge(a, b, true); }
    SqrtField& operator+=(const SqrtField& o) { return *this = *this + o; }
    SqrtField& operator-=(const SqrtField& o) { return *this = *this - o; }

    friend SqrtField operator*(const SqrtField& a, const SqrtField& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::array<Rational, 16> acc;
        std::array<bool, 16> used{};
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                const unsigned mask = ma ^ mb;
                const int factor = detail::radicand_of_mask(ma & mb);
                Rational prod = ca * cb;
                if (factor != 1) prod *= factor;
                acc[mask] += prod;
                used[mask] = true;
            }
        }
        SqrtField out;
        for (unsigned m = 0; m < 16; ++m)
            if (used[m] && !acc[m].is_zero()) out.terms_.emplace_back(static_cast<std::uint8_t>(m), std::move(acc[m]));
        return out;
    }
    SqrtField& operator*=(const SqrtField& o) { return *this = *this * o; }

    /// Image under the field automorphism sqrt(p) -> -sqrt(p).
    SqrtField conjugate(int prime) const {
        const int mask = detail::mask_of_radicand(prime);
        if (mask <= 0 || std::popcount(static_cast<unsigned>(mask)) != 1)
            throw std::invalid_argument("SqrtField: conjugate needs one of 2, 3, 5, 7");
        SqrtField out = *this;
        for (auto& [m, c] : out.terms_)
            if (m & mask) c = -c;
        return out;
    }

    /// Multiplicative inverse by successive Galois-conjugate norms:
    /// 1/a = sigma(a) / (a * sigma(a)), where a * sigma(a) lies in a smaller field.
    SqrtField inverse() const {
        if (is_zero()) throw std::domain_error("SqrtField: division by zero");
        if (is_rational()) return SqrtField(terms_[0].second.inverse());
        unsigned present = 0;
        for (const auto& t : terms_) present |= t.first;
        for (unsigned b = 0; b < 4; ++b) {
            if (!(present & (1u << b))) continue;
            const SqrtField conj = conjugate(detail::kPrimes[b]);
            return conj * (*this * conj).inverse();
        }
        throw std::logic_error("SqrtField: unreachable");
    }

    friend SqrtField operator/(const SqrtField& a, const SqrtField& b) { return a * b.inverse(); }
    SqrtField& operator/=(const SqrtField& o) { return *this = *this / o; }

    friend bool operator==(const SqrtField& a, const SqrtField& b) { return a.terms_ == b.terms_; }

    /// Sign of the real embedding with every sqrt positive.
    ///
    /// Brackets each sqrt(r) between consecutive dyadic rationals and doubles
    /// the precision until the enclosing interval of the sum excludes zero.
    /// Terminates for nonzero input since distinct squarefree radicals are
    /// linearly independent over Q.
    Sign sign() const {
        if (is_zero()) return Sign::zero;
        if (is_rational()) return terms_[0].second.sign() < 0 ? Sign::negative : Sign::positive;
        for (unsigned bits = 16;; bits *= 2) {
            Rational lo, hi;
            const BigInt scale = BigInt(1) << bits;
            for (const auto& [m, c] : terms_) {
                Rational rlo, rhi;
                if (m == 0) {
                    rlo = rhi = Rational(1);
                } else {
                    BigInt s = BigInt(detail::radicand_of_mask(m)) * scale * scale;
                    BigInt root;
                    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
                    rlo = Rational(root, scale);
                    rhi = Rational(root + 1, scale);
                }
                if (c.sign() >= 0) {
                    lo += c * rlo;
                    hi += c * rhi;
                } else {
                    lo += c * rhi;
                    hi += c * rlo;
                }
            }
            if (lo.sign() > 0) return Sign::positive;
            if (hi.sign() < 0) return Sign::negative;
        }
    }

    friend bool operator<(const SqrtField& a, const SqrtField& b) { return (a - b).sign() == Sign::negative; }
    friend bool operator>(const SqrtField& a, const SqrtField& b) { return b < a; }
    friend bool operator<=(const SqrtField& a, const SqrtField& b) { return !(b < a); }
    friend bool operator>=(const SqrtField& a, const SqrtField& b) { return !(a < b); }

    SqrtField abs() const { return sign() == Sign::negative ? -*this : *this; }

    /// "c1 + c2*sqrt(2) - c3*sqrt(5)" with radicands ascending; "0" for zero.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<std::pair<int, Rational>> ordered;
        for (const auto& [m, c] : terms_) ordered.emplace_back(detail::radicand_of_mask(m), c);
        std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::string out;
        bool first = true;
        for (const auto& [r, c] : ordered) {
            const bool negative = c.sign() < 0;
            const Rational mag = c.abs();
            if (first) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            first = false;
            if (r == 1) {
                out += mag.to_string();
            } else {
                if (mag != Rational(1)) out += mag.to_string() + "*";
                out += "sqrt(" + std::to_string(r) + ")";
            }
        }
        return out;
    }

private:
    static SqrtField merge(const SqrtField& a, const SqrtField& b, bool subtract) {
        SqrtField out;
        out.terms_.reserve(a.terms_.size() + b.terms_.size());
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() || ib != b.terms_.end()) {
            if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
                out.terms_.push_back(*ia++);
            } else if (ia == a.terms_.end() || ib->first < ia->first) {
                out.terms_.emplace_back(ib->first, subtract ? -ib->second : ib->second);
                ++ib;
            } else {
                Rational c = subtract ? ia->second - ib->second : ia->second + ib->second;
                if (!c.is_zero()) out.terms_.emplace_back(ia->first, std::move(c));
                ++ia;
                ++ib;
            }
        }
        return out;
    }

    std::vector<Term> terms_;  // sorted by mask, no zero coefficients
};

inline bool is_zero(const SqrtField& x) { return x.is_zero(); }

inline SqrtField sqrt_of(long n) { return SqrtField::sqrt(Rational(n)); }

}  // namespace berger
