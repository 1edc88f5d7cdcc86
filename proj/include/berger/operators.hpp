#pragma once

// The deformed signature-type operators on S (x) S = O (x) O, basis index
// 8a + b for e_a (x) e_b, and the scalar data that controls their kernels.

#include "berger/matrix.hpp"
#include "berger/octonion.hpp"
#include "berger/roots.hpp"
#include "berger/sqrt_field.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace berger {

using Operator64 = Matrix<SqrtField>;
using Vector64 = std::vector<SqrtField>;

inline Operator64 on_first(const Matrix<SqrtField>& m) { return kronecker(m, Matrix<SqrtField>::identity(8)); }
inline Operator64 on_second(const Matrix<SqrtField>& m) { return kronecker(Matrix<SqrtField>::identity(8), m); }

/// ad~_i acting on the second tensor factor.
inline Operator64 ad_hat_tilde(int i, const StructureConstants& sc = structure_constants()) {
    return on_second(ad_tilde(i, sc));
}

/// B0 = sum_i (c_i (x) 1) ((1/3) ad~_i (x) 1 + 1 (x) ad~_i).
inline Operator64 build_B0(const StructureConstants& sc = structure_constants()) {
    Operator64 b(64, 64);
    const SqrtField third(Rational(1, 3));
    for (int i = 1; i <= 7; ++i) {
        const Matrix<SqrtField> ad = ad_tilde(i, sc);
        b += on_first(clifford_basis(i)) * (third * on_first(ad) + on_second(ad));
    }
    return b;
}

/// The reductive operator on the trivial G-isotypic part:
/// sum_i (c_i (x) 1)((1/3) ad~_i (x) 1).
inline Operator64 build_Btilde_trivial(const StructureConstants& sc = structure_constants()) {
    Matrix<SqrtField> m(8, 8);
    for (int i = 1; i <= 7; ++i) m += clifford_basis(i) * ad_tilde(i, sc);
    return on_first(SqrtField(Rational(1, 3)) * m);
}

inline std::size_t tensor_index(int a, int b) { return static_cast<std::size_t>(8 * a + b); }

inline Vector64 apply_operator(const Operator64& op, const Vector64& v) {
    Vector64 out(64);
    for (std::size_t i = 0; i < 64; ++i)
        for (std::size_t j = 0; j < 64; ++j)
            if (!op(i, j).is_zero() && !v[j].is_zero()) out[i] += op(i, j) * v[j];
    return out;
}

inline SqrtField dot(const Vector64& a, const Vector64& b) {
    SqrtField s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

/// Matrix of op on span(basis) for an orthonormal, op-invariant family;
/// throws if the span is not invariant.
inline Matrix<SqrtField> restrict_to(const Operator64& op, const std::vector<Vector64>& basis) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (dot(basis[i], basis[j]) != SqrtField(i == j ? 1 : 0))
                throw std::invalid_argument("restrict_to: family is not orthonormal");
    Matrix<SqrtField> m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector64 image = apply_operator(op, basis[j]);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, j) = dot(basis[i], image);
            for (std::size_t k = 0; k < 64; ++k)
                if (!basis[i][k].is_zero()) image[k] -= m(i, j) * basis[i][k];
        }
        for (const auto& x : image)
            if (!x.is_zero()) throw std::invalid_argument("restrict_to: span is not invariant");
    }
    return m;
}

/// 1 (x) 1 and (1/sqrt7) sum_i e_i (x) e_i: the trivial H-summands of S (x) S.
inline std::vector<Vector64> trivial_block_basis() {
    Vector64 one(64), diag(64);
    one[tensor_index(0, 0)] = SqrtField(1);
    const SqrtField s = SqrtField::sqrt(Rational(1, 7));
    for (int i = 1; i <= 7; ++i) diag[tensor_index(i, i)] = s;
    return {one, diag};
}

/// e1 (x) 1, 1 (x) e1 and (1/sqrt6) sum_{i >= 2} e_i (x) (e1 * e_i).
inline std::vector<Vector64> kappa3_block_basis() {
    Vector64 a(64), b(64), c(64);
    a[tensor_index(1, 0)] = SqrtField(1);
    b[tensor_index(0, 1)] = SqrtField(1);
    const SqrtField s = SqrtField::sqrt(Rational(1, 6));
    for (int i = 2; i <= 7; ++i) {
        const auto [sign, k] = detail::kOctonionTable[1][i];
        c[tensor_index(i, k)] += sign > 0 ? s : -s;
    }
    return {a, b, c};
}

/// A vector in the phi_(1,0) component of I (x) I.
inline Vector64 phi10_vector() {
    Vector64 v(64);
    v[tensor_index(1, 2)] = SqrtField(1);
    v[tensor_index(2, 1)] = SqrtField(-1);
    v[tensor_index(6, 3)] = SqrtField(-1);
    v[tensor_index(3, 6)] = SqrtField(1);
    return v;
}

/// A vector in the phi_(0,2) component of I (x) I.
inline Vector64 phi02_vector() {
    Vector64 v(64);
    v[tensor_index(1, 1)] = SqrtField(1);
    v[tensor_index(2, 2)] = SqrtField(-1);
    return v;
}

/// The claimed spectrum of B0: 7/sqrt5, -1/sqrt5, 1/sqrt5, sqrt5, -sqrt5.
inline std::vector<SqrtField> b0_eigenvalues() {
    const SqrtField r5 = sqrt_of(5);
    const SqrtField inv = SqrtField(Rational(1, 5)) * r5;
    return {SqrtField(7) * inv, -inv, inv, r5, -r5};
}

/// prod over the claimed eigenvalues of (B0 - lambda) is the zero matrix.
inline bool b0_minimal_polynomial_check(const Operator64& b0) {
    Operator64 prod = Operator64::identity(64);
    for (const auto& lambda : b0_eigenvalues()) prod = prod * (b0 - lambda * Operator64::identity(64));
    return prod.is_zero();
}

inline std::size_t eigenspace_dimension(const Matrix<SqrtField>& m, const SqrtField& lambda) {
    return m.rows() - (m - lambda * Matrix<SqrtField>::identity(m.rows())).rank();
}

inline SqrtField spectral_radius(const std::vector<SqrtField>& eigenvalues) {
    SqrtField r;
    for (const auto& x : eigenvalues) r = std::max(r, x.abs());
    return r;
}

/// det(m - lambda) == 0
inline bool is_eigenvalue(const Matrix<SqrtField>& m, const SqrtField& lambda) {
    return (m - lambda * Matrix<SqrtField>::identity(m.rows())).determinant().is_zero();
}

/// Btilde + mu B0 on the trivial block.
inline Matrix<SqrtField> trivial_rep_family(const Rational& mu) {
    static const Operator64 bt = build_Btilde_trivial();
    static const Operator64 b0 = build_B0();
    return restrict_to(bt + SqrtField(mu) * b0, trivial_block_basis());
}

/// (1/(2 sqrt5)) [[7 + 7mu, -3 mu sqrt7], [-3 mu sqrt7, 5mu - 1]]
inline Matrix<SqrtField> trivial_rep_family_closed_form(const Rational& mu) {
    const SqrtField s = SqrtField::sqrt(Rational(1, 20));
    const SqrtField off = SqrtField(Rational(-3) * mu) * sqrt_of(7);
    return s * Matrix<SqrtField>(2, 2, {SqrtField(Rational(7) + Rational(7) * mu), off, off,
                                        SqrtField(Rational(5) * mu - Rational(1))});
}

enum class SpinorPiece { real, imaginary };  // S (x) R or S (x) I

/// ||gamma + rho_G||^2 - ||lambda + rho_H||^2 for gamma = gamma_(p,q); lambda is
/// kappa_0 on S (x) R and kappa_3 on S (x) I.
inline Rational casimir_eigenvalue(int p, int q, SpinorPiece piece) {
    if (q < 0 || p < q) throw std::invalid_argument("casimir_eigenvalue: need p >= q >= 0");
    const Weight shifted = Weight{p, q} + rho_G();
    const Weight h = kappa_plus_rho_H(piece == SpinorPiece::real ? 0 : 3);
    return shifted.norm2() - h.norm2();
}

}  // namespace berger
