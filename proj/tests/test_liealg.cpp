#include "berger/liealg.hpp"
#include "berger/octonion.hpp"

#include "printers.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace berger;

namespace {

const SqrtField kInvSqrt5 = SqrtField::sqrt(Rational(1, 5));

SkewMatrix5 random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-4, 4);
    SkewMatrix5 out;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) out += SqrtField(c(rng)) * basis_eij(i, j);
    return out;
}

}  // namespace

TEST(Embedding, NormsAndOrthogonality) {
    for (int a : {12, 23, 13})
        for (int b : {12, 23, 13}) EXPECT_EQ(inner(iota(a), iota(b)), SqrtField(a == b ? 5 : 0)) << a << " " << b;
}

TEST(Embedding, Iota23Entries) {
    const SkewMatrix5 m = iota(23);
    EXPECT_EQ(m(2, 3), SqrtField(1));
    EXPECT_EQ(m(1, 4), SqrtField(-1));
    EXPECT_EQ(m(4, 5), sqrt_of(3));
    EXPECT_EQ(m(3, 2), SqrtField(-1));
    EXPECT_EQ(m(1, 2), SqrtField());
    EXPECT_THROW(iota(14), std::out_of_range);
}

TEST(Embedding, IsLieAlgebraHomomorphism) {
    // [e12, e23] = e13, [e23, e13] = e12, [e13, e12] = e23 in so(3)
    EXPECT_EQ(bracket(basis_eij(1, 2), basis_eij(2, 3)), basis_eij(1, 3));
    EXPECT_EQ(bracket(iota(12), iota(23)), iota(13));
    EXPECT_EQ(bracket(iota(23), iota(13)), iota(12));
    EXPECT_EQ(bracket(iota(13), iota(12)), iota(23));
}

TEST(Basis, OrthonormalAndComplementary) {
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j) EXPECT_EQ(inner(g_basis(i), g_basis(j)), SqrtField(i == j ? 1 : 0));
    EXPECT_EQ(g_basis(8), kInvSqrt5 * iota(12));
    EXPECT_THROW(g_basis(11), std::out_of_range);
    EXPECT_THROW(SkewMatrix5(Matrix<SqrtField>::identity(5)), std::invalid_argument);
}

TEST(Basis, ProjectionsSplitEveryElement) {
    std::mt19937 rng(3);
    for (int n = 0; n < 20; ++n) {
        const SkewMatrix5 a = random_element(rng);
        EXPECT_EQ(project_p(a) + project_h(a), a);
        EXPECT_TRUE(in_h(project_h(a)));
        EXPECT_EQ(inner(project_p(a), project_h(a)), SqrtField());
    }
}

TEST(Bracket, FirstPair) {
    EXPECT_EQ(bracket_p(TangentVector::basis(1), TangentVector::basis(2)), kInvSqrt5 * TangentVector::basis(4));
    EXPECT_EQ(structure_constants().tangential(1, 2, 4), kInvSqrt5);
    EXPECT_EQ(structure_constants().tangential(1, 2, 3), SqrtField());
    EXPECT_THROW(structure_constants().tangential(1, 2, 8), std::out_of_range);
}

TEST(Bracket, AgreesWithCayleyProductOnAllPairs) {
    // [v, w]_p = (1/sqrt5) Im(v * w) for imaginary octonions v, w
    for (int i = 1; i <= 7; ++i)
        for (int j = 1; j <= 7; ++j) {
            if (i == j) continue;
            const Octonion prod = Octonion::unit(i) * Octonion::unit(j);
            TangentVector want;
            for (int k = 1; k <= 7; ++k) want[k] = kInvSqrt5 * prod[k];
            EXPECT_EQ(bracket_p(TangentVector::basis(i), TangentVector::basis(j)), want) << i << " " << j;
        }
}

TEST(Bracket, NonBasisVectors) {
    // v = e1 + e2, w = e3 - e5: the bracket is bilinear and matches the product
    const TangentVector v = TangentVector::basis(1) + TangentVector::basis(2);
    const TangentVector w = TangentVector::basis(3) + SqrtField(-1) * TangentVector::basis(5);
    const Octonion prod = Octonion::imaginary(v) * Octonion::imaginary(w);
    TangentVector want;
    for (int k = 1; k <= 7; ++k) want[k] = kInvSqrt5 * prod[k];
    EXPECT_EQ(bracket_p(v, w), want);
    EXPECT_TRUE(bracket_p(v, v).is_zero());
}

TEST(StructureConstants, AntisymmetricAndAdInvariant) {
    const auto& c = structure_constants();
    for (int i = 1; i <= 10; ++i)
        for (int j = 1; j <= 10; ++j)
            for (int k = 1; k <= 10; ++k) {
                EXPECT_EQ(c(i, j, k), -c(j, i, k));
                EXPECT_EQ(c(i, j, k), c(j, k, i));
            }
}

TEST(StructureConstants, Jacobi) {
    EXPECT_TRUE(jacobi_violations(structure_constants()).empty());

    std::mt19937 rng(5);
    for (int n = 0; n < 10; ++n) {
        const SkewMatrix5 a = random_element(rng), b = random_element(rng), c = random_element(rng);
        const SkewMatrix5 j = bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b);
        EXPECT_TRUE(j.is_zero());
    }
}

TEST(StructureConstants, CorruptionBreaksJacobi) {
    StructureConstants sc = structure_constants();
    sc.set(1, 2, 4, SqrtField(1));
    sc.set(2, 1, 4, SqrtField(-1));
    EXPECT_FALSE(jacobi_violations(sc).empty());
}

TEST(Isotropy, ReducedAlphaForms) {
    const SqrtField r = kInvSqrt5;
    const SqrtField s6_5 = SqrtField::sqrt(Rational(6, 5));
    const SqrtField s1_2 = SqrtField::sqrt(Rational(1, 2));
    const SqrtField s3_10 = SqrtField::sqrt(Rational(3, 10));

    AltForm a1(2), a2(2), a3(2);
    a1.add({2, 4}, r).add({3, 7}, SqrtField(2) * r).add({5, 6}, SqrtField(-3) * r);
    a2.add({1, 4}, s6_5).add({2, 7}, -s1_2).add({3, 4}, -s1_2).add({3, 5}, s3_10).add({6, 7}, s3_10);
    // overall sign of alpha_3 as forced by f3 = iota13 / sqrt5; it drops out of p1
    a3.add({1, 2}, -s6_5).add({2, 3}, s1_2).add({3, 6}, -s3_10).add({4, 7}, s1_2).add({5, 7}, s3_10);

    EXPECT_EQ(two_form_alpha(1), a1);
    EXPECT_EQ(two_form_alpha(2), a2);
    EXPECT_EQ(two_form_alpha(3), a3);
}

TEST(Isotropy, AlphaFormsMatchIsotropyMatrices) {
    // alpha_k(e_a, e_b) = <pi(f_k) e_a, e_b>
    for (int k = 1; k <= 3; ++k) {
        const Matrix<SqrtField> pi = isotropy_matrix(g_basis(7 + k));
        for (int a = 1; a <= 7; ++a)
            for (int b = a + 1; b <= 7; ++b)
                EXPECT_EQ(two_form_alpha(k).evaluate(std::vector<int>{a, b}), PiScalar(pi(b - 1, a - 1))) << k << " " << a << b;
    }
}

TEST(Isotropy, MatrixOfF1) {
    const Matrix<SqrtField> pi = isotropy_matrix(g_basis(8));
    EXPECT_EQ(pi.transpose(), -pi);
    EXPECT_EQ((pi * pi).trace(), SqrtField(Rational(-28, 5)));
    // <pi(f1) e3, e7>
    EXPECT_EQ(pi(6, 2), SqrtField(2) * kInvSqrt5);
    EXPECT_THROW(isotropy_matrix(g_basis(1)), std::invalid_argument);
}

TEST(Isotropy, TraceFormIsDiagonal) {
    for (int k = 8; k <= 10; ++k)
        for (int l = 8; l <= 10; ++l) {
            const auto t = (isotropy_matrix(g_basis(k)) * isotropy_matrix(g_basis(l))).trace();
            EXPECT_EQ(t, SqrtField(k == l ? Rational(-28, 5) : Rational(0)));
        }
}

TEST(Isotropy, IsARepresentation) {
    // pi([f, g]) = [pi(f), pi(g)]
    const auto h = h_basis();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const auto pa = isotropy_matrix(h[a]), pb = isotropy_matrix(h[b]);
            EXPECT_EQ(isotropy_matrix(bracket(h[a], h[b])), pa * pb - pb * pa);
        }
}
