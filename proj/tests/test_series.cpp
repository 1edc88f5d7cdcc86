#include "berger/laurent_series.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <vector>

using namespace berger;

namespace {

// Bernoulli numbers from sum_{k<m} C(m+1, k) B_k = -(m+1) B_m ... (B_1 = -1/2).
std::vector<Rational> bernoulli(int n) {
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc;
        BigInt binom = 1;  // C(m+1, k)
        for (int k = 0; k < m; ++k) {
            acc += Rational(binom) * b[k];
            binom = binom * (m + 1 - k) / (k + 1);
        }
        b[m] = -acc / Rational(m + 1);
    }
    return b;
}

// z / (2 sinh(z/2)) = sum_n (2 - 2^(2n)) B_(2n) (z/2)^(2n) / (2n)!
Rational ahat_oracle(int two_n) {
    const auto b = bernoulli(two_n);
    const BigInt p = BigInt(1) << two_n;
    return Rational(BigInt(2) - p) * b[two_n] / (Rational(p) * Rational(factorial(two_n)));
}

}  // namespace

TEST(LaurentSeries, Products) {
    const LaurentSeries a(0, 6, {1, 1, 0, 0, 0, 0, 0});
    const LaurentSeries b(0, 6, {1, -1, 0, 0, 0, 0, 0});
    const LaurentSeries p = a * b;
    EXPECT_EQ(p.coeff(0), 1);
    EXPECT_EQ(p.coeff(1), 0);
    EXPECT_EQ(p.coeff(2), -1);
    EXPECT_EQ(p.order(), 6);

    const LaurentSeries inv_t = LaurentSeries::monomial(1, -1, 8);
    const LaurentSeries t = LaurentSeries::monomial(1, 1, 8);
    const LaurentSeries one = inv_t * t;
    EXPECT_EQ(one.coeff(0), 1);
    for (int k = 1; k <= one.order(); ++k) EXPECT_EQ(one.coeff(k), 0);

    const LaurentSeries c(0, 3, {1, Rational(-1, 24), 0, 0});
    EXPECT_EQ(c.scaled(2).coeff(0), 2);
    EXPECT_EQ(c.scaled(2).coeff(1), Rational(-1, 12));
}

TEST(LaurentSeries, TruncationWindow) {
    const LaurentSeries a(-2, 5, std::vector<Rational>(8, Rational(1)));
    const LaurentSeries b(1, 9, std::vector<Rational>(9, Rational(1)));
    EXPECT_EQ((a * b).order(), std::min(5 + 1, 9 - 2));
    EXPECT_EQ((a + b).order(), 5);
    EXPECT_THROW(a.coeff(6), std::out_of_range);
    EXPECT_EQ(a.coeff(-7), 0);
    EXPECT_THROW(LaurentSeries(0, 2, {1, 2}), std::invalid_argument);
}

TEST(LaurentSeries, Reciprocal) {
    const LaurentSeries three_t = LaurentSeries::monomial(3, 1, 10);
    const LaurentSeries r = three_t.reciprocal();
    EXPECT_EQ(r.lowest(), -1);
    EXPECT_EQ(r.coeff(-1), Rational(1, 3));

    // 1/(t(1+t)) = t^-1 (1 - t + t^2 - ...)
    const LaurentSeries s(1, 10, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    const LaurentSeries g = s.reciprocal();
    for (int k = -1; k <= g.order(); ++k) EXPECT_EQ(g.coeff(k), Rational((k + 1) % 2 ? -1 : 1));

    EXPECT_THROW(LaurentSeries::constant(0, 5).reciprocal(), std::domain_error);
}

TEST(LaurentSeries, ReciprocalIsInvolution) {
    const LaurentSeries s(-2, 9, {3, -1, 2, Rational(1, 7), 0, 5, 1, -2, 0, 4, 1, 1});
    const LaurentSeries back = s.reciprocal().reciprocal();
    EXPECT_EQ(back.order(), s.order());
    for (int k = -2; k <= back.order(); ++k) EXPECT_EQ(back.coeff(k), s.coeff(k));
    const LaurentSeries one = s * s.reciprocal();
    EXPECT_EQ(one.coeff(0), 1);
    for (int k = 1; k <= one.order(); ++k) EXPECT_EQ(one.coeff(k), 0);
}

TEST(LaurentSeries, Exp) {
    EXPECT_EQ(LaurentSeries::constant(0, 6).exp(), LaurentSeries::constant(1, 6));
    const Rational c(3, 2);
    const LaurentSeries e = LaurentSeries::monomial(c, 1, 10).exp();
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(e.coeff(k), c.pow(k) / Rational(factorial(k)));

    const LaurentSeries a = LaurentSeries::monomial(1, 1, 12);
    const LaurentSeries prod = a.exp() * (-a).exp();
    EXPECT_EQ(prod, LaurentSeries::constant(1, 12));

    const LaurentSeries x(1, 10, {2, 0, Rational(-1, 3), 1, 0, 0, 0, 0, 0, 7});
    const LaurentSeries y(2, 10, {Rational(5, 2), 1, 0, 0, 1, 0, 0, -1, 0});
    EXPECT_EQ((x + y).exp(), x.exp() * y.exp());

    EXPECT_THROW(LaurentSeries::constant(1, 5).exp(), std::domain_error);
    EXPECT_THROW(LaurentSeries::monomial(1, -1, 5).exp(), std::domain_error);
}

TEST(AhatSeries, AgainstBernoulliOracle) {
    const LaurentSeries a = ahat_series(1, 14);
    for (int k = 0; k <= 14; ++k) {
        if (k % 2)
            EXPECT_EQ(a.coeff(k), 0) << k;
        else
            EXPECT_EQ(a.coeff(k), ahat_oracle(k)) << k;
    }
    EXPECT_EQ(a.coeff(2), Rational(-1, 24));
    EXPECT_EQ(a.coeff(4), Rational(7, 5760));
    EXPECT_EQ(a.coeff(6), Rational(-31, 967680));
}

TEST(AhatSeries, DivisionOracle) {
    // t = A(t) * 2 sinh(t/2), with 2 sinh(t/2) = sum t^(2k+1) / (4^k (2k+1)!)
    const int n = 12;
    std::vector<Rational> sinh(n + 1);
    for (int k = 0; 2 * k + 1 <= n; ++k) sinh[2 * k + 1] = Rational(BigInt(1), (BigInt(1) << (2 * k)) * factorial(2 * k + 1));
    const LaurentSeries prod = ahat_series(1, n) * LaurentSeries(0, n, sinh);
    EXPECT_EQ(prod.coeff(1), 1);
    for (int k = 2; k <= n; ++k) EXPECT_EQ(prod.coeff(k), 0) << k;
}

TEST(AhatSeries, Scaling) {
    EXPECT_EQ(ahat_series(0, 8), LaurentSeries::constant(1, 8));
    const LaurentSeries two = ahat_series(2, 8);
    EXPECT_EQ(two.coeff(2), Rational(-1, 6));
    EXPECT_EQ(two.coeff(4), Rational(7, 360));
    const LaurentSeries neg = ahat_series(-3, 8);
    EXPECT_EQ(neg, ahat_series(3, 8));
}

TEST(LaurentSeries, Rendering) {
    const LaurentSeries s(-1, 1, {Rational(1, 3), 0, -2});
    EXPECT_EQ(s.to_string(), "1/3 t^-1 + -2 t^1 + O(t^2)");
}
