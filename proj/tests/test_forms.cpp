#include "berger/forms.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace berger;

namespace {

const SqrtField kR5 = sqrt_of(5);

PiScalar pi_monomial(SqrtField c, int k) { return PiScalar::monomial(std::move(c), k); }

// (a ^ b)(e_I) = 1/(p! q!) sum over permutations of I, by brute force.
PiScalar brute_wedge(const AltForm& a, const AltForm& b, std::vector<int> idx) {
    const int p = a.degree(), q = b.degree();
    std::vector<int> perm(idx.size());
    std::iota(perm.begin(), perm.end(), 0);
    PiScalar total;
    do {
        std::vector<int> order = perm;
        const int sgn = AltForm::sort_sign(order);
        std::vector<int> first, second;
        for (int i = 0; i < p; ++i) first.push_back(idx[perm[i]]);
        for (int i = 0; i < q; ++i) second.push_back(idx[perm[p + i]]);
        const PiScalar term = a.evaluate(first) * b.evaluate(second);
        total += sgn > 0 ? term : -term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return PiScalar(Rational(BigInt(1), factorial(p) * factorial(q))) * total;
}

AltForm basis_form(std::vector<int> idx) { return AltForm(static_cast<int>(idx.size())).add(std::move(idx), PiScalar(1)); }

}  // namespace

TEST(AltForm, SortSignAndEvaluation) {
    std::vector<int> v{4, 5, 6, 2};
    EXPECT_EQ(AltForm::sort_sign(v), -1);
    EXPECT_EQ(v, (std::vector<int>{2, 4, 5, 6}));
    std::vector<int> w{1, 3, 1};
    EXPECT_EQ(AltForm::sort_sign(w), 0);
    EXPECT_EQ(lambda4().evaluate(std::vector<int>{2, 4, 5, 6}), PiScalar(-1));
    EXPECT_EQ(lambda3().evaluate(std::vector<int>{2, 1, 4}), PiScalar(-1));
    EXPECT_THROW(lambda3().evaluate(std::vector<int>{1, 2}), std::invalid_argument);
}

TEST(AltForm, WedgeBasics) {
    EXPECT_TRUE(wedge(basis_form({1, 2}), basis_form({1, 3})).is_zero());
    EXPECT_EQ(wedge(basis_form({3}), basis_form({1, 2})), basis_form({1, 2, 3}));
    EXPECT_EQ(wedge(basis_form({2}), basis_form({1})), -basis_form({1, 2}));
    EXPECT_THROW(wedge(lambda4(), lambda4()), std::invalid_argument);
}

TEST(AltForm, WedgeAgreesWithBruteForce) {
    const std::vector<std::pair<AltForm, AltForm>> cases{
        {lambda3(), lambda4()},
        {two_form_alpha(1), two_form_alpha(2)},
        {two_form_alpha(3), lambda3()},
        {basis_form({2, 5}), two_form_alpha(1)},
    };
    for (const auto& [a, b] : cases) {
        const AltForm w = wedge(a, b);
        for (const auto& idx : detail::subsets7(a.degree() + b.degree()))
            EXPECT_EQ(w.evaluate(idx), brute_wedge(a, b, idx));
    }
}

TEST(G2Forms, Structure) {
    EXPECT_EQ(lambda3().terms().size(), 7u);
    EXPECT_EQ(lambda4().terms().size(), 7u);
    EXPECT_EQ(wedge(lambda3(), lambda4()), PiScalar(7) * AltForm::volume());
    // e^{124} pairs with e^{5673} = -e^{3567}
    EXPECT_EQ(lambda3().evaluate(std::vector<int>{1, 2, 4}), PiScalar(1));
    EXPECT_EQ(lambda4().evaluate(std::vector<int>{3, 5, 6, 7}), PiScalar(-1));
    EXPECT_EQ(wedge(basis_form({1, 2, 4}), lambda4()), AltForm::volume());
}

TEST(G2Forms, LambdaThreeIsTheOctonionForm) {
    // lambda3(e_i, e_j, e_k) = <e_i e_j, e_k>, which for [., .]_p is sqrt5 <[e_i, e_j]_p, e_k>
    const auto& sc = structure_constants();
    for (const auto& idx : detail::subsets7(3))
        EXPECT_EQ(lambda3().evaluate(idx), PiScalar(kR5 * sc.tangential(idx[0], idx[1], idx[2])));
}

TEST(Curvature, Basics) {
    const TangentVector e2 = TangentVector::basis(2), e5 = TangentVector::basis(5);
    EXPECT_TRUE(curvature(e2, e5).is_zero());
    const TangentVector v = TangentVector::basis(1) + TangentVector::basis(2);
    EXPECT_TRUE(curvature(v, v).is_zero());
    const TangentVector a = TangentVector::basis(2), b = TangentVector::basis(4);
    EXPECT_EQ(curvature(a, b), -curvature(b, a));
    // [e2, e4]_h = (1/sqrt5) f1
    EXPECT_EQ(curvature(a, b), SqrtField(-1) * SqrtField::sqrt(Rational(1, 5)) * isotropy_matrix(g_basis(8)));
}

TEST(Pontrjagin, ProportionalToLambda4) {
    const AltForm p = p1_form();
    EXPECT_EQ(proportionality(p, lambda4()), pi_monomial(SqrtField(Rational(21, 25)), -2));
    EXPECT_EQ(p.evaluate(std::vector<int>{2, 4, 5, 6}), pi_monomial(SqrtField(Rational(-21, 25)), -2));
    EXPECT_TRUE(p.evaluate(std::vector<int>{1, 2, 3, 4}).is_zero());
}

TEST(Pontrjagin, ChernWeilOracle) {
    // R = -sum_k alpha_k pi(f_k) and tr(pi(f_k) pi(f_l)) = -28/5 delta_kl, so
    // p1 = -(1/(8 pi^2)) tr(R ^ R) = (7/(10 pi^2)) sum_k alpha_k ^ alpha_k.
    AltForm sum(4);
    for (int k = 1; k <= 3; ++k) sum = sum + wedge(two_form_alpha(k), two_form_alpha(k));
    EXPECT_EQ(p1_form(), pi_monomial(SqrtField(Rational(7, 10)), -2) * sum);
}

TEST(Derivative, OnG2Forms) {
    EXPECT_EQ(proportionality(invariant_d(lambda3()), lambda4()), PiScalar(SqrtField(6) * SqrtField(Rational(1, 5)) * kR5));
    EXPECT_TRUE(invariant_d(invariant_d(lambda3())).is_zero());
    EXPECT_TRUE(invariant_d(lambda4()).is_zero());
    EXPECT_EQ(invariant_d(lambda3(), -1), -invariant_d(lambda3(), 1));
    EXPECT_THROW(invariant_d(lambda3(), 2), std::invalid_argument);
}

TEST(Invariance, Forms) {
    EXPECT_TRUE(is_h_invariant(lambda3()));
    EXPECT_TRUE(is_h_invariant(lambda4()));
    EXPECT_TRUE(is_h_invariant(p1_form()));
    EXPECT_FALSE(is_h_invariant(basis_form({1, 2})));
    EXPECT_FALSE(is_h_invariant(two_form_alpha(1)));
}

TEST(Primitive, SolvesAndIsLinear) {
    const AltForm p = p1_form();
    const AltForm h = solve_primitive(p);
    EXPECT_EQ(invariant_d(h), p);
    // h = 7/(10 sqrt5 pi^2) lambda3 = 7 sqrt5/50 pi^-2 lambda3
    EXPECT_EQ(proportionality(h, lambda3()), pi_monomial(SqrtField::radical(5, Rational(7, 50)), -2));
    EXPECT_EQ(solve_primitive(PiScalar(2) * p), PiScalar(2) * h);
    EXPECT_TRUE(solve_primitive(AltForm(4)).is_zero());
    EXPECT_THROW(solve_primitive(basis_form({1, 2, 3, 4})), std::invalid_argument);
    EXPECT_THROW(solve_primitive(lambda3()), std::invalid_argument);
}

TEST(Primitive, SignConventionFlipsThePrimitive) {
    const AltForm p = p1_form();
    EXPECT_EQ(solve_primitive(p, -1), -solve_primitive(p, 1));
    EXPECT_EQ(proportionality(solve_primitive(p, -1), lambda3()), pi_monomial(SqrtField::radical(5, Rational(-7, 50)), -2));
}

TEST(Volumes, Values) {
    EXPECT_EQ(volume_SO3(), pi_monomial(SqrtField(8), 2));
    EXPECT_EQ(volume_H(), pi_monomial(SqrtField(40) * kR5, 2));
    const SqrtField want = SqrtField(16) * (SqrtField(3) * SqrtField(5) * kR5).inverse();
    EXPECT_EQ(volume_M(), pi_monomial(want, 4));
    EXPECT_EQ(want, SqrtField::radical(5, Rational(16, 75)));
    EXPECT_EQ(integrate_invariant(AltForm::volume()), volume_M());
    EXPECT_THROW(integrate_invariant(lambda3()), std::invalid_argument);
}

TEST(SecondaryIntegral, Value) {
    // -(1/896) * (21/25) * (7 sqrt5 / 50) * 7 * vol(M) / pi^4
    const SqrtField oracle = SqrtField(Rational(-1, 896)) * SqrtField(Rational(21, 25)) * SqrtField::radical(5, Rational(7, 50)) *
                             SqrtField(7) * SqrtField::radical(5, Rational(16, 75));
    EXPECT_EQ(oracle, SqrtField(Rational(-49, 50000)));
    EXPECT_EQ(secondary_integral(), Rational(-49, 50000));
}

TEST(SecondaryIntegral, SignConventionChangesTheSign) {
    // p1 ^ h flips with h, so the two conventions cannot both give -49/50000.
    EXPECT_EQ(secondary_integral(-1), Rational(49, 50000));
    EXPECT_NE(secondary_integral(-1), secondary_integral(1));
}
