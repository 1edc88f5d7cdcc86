#pragma once

// so(5) with the irreducible so(3) = h inside it, the orthonormal basis
// e1..e7 of p = h^perp identified with the imaginary octonions, structure
// constants, and the isotropy representation of h on p.
//
// Inner product on so(5): <A, B> = -1/2 tr(AB), making e_ij orthonormal.
// Brackets are honest matrix commutators.

#include "berger/alt_form.hpp"
#include "berger/matrix.hpp"
#include "berger/sqrt_field.hpp"
#include "berger/tangent_vector.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace berger {

class SkewMatrix5 {
public:
    SkewMatrix5() : m_(5, 5) {}

    explicit SkewMatrix5(Matrix<SqrtField> m) : m_(std::move(m)) {
        if (m_.rows() != 5 || m_.cols() != 5) throw std::invalid_argument("SkewMatrix5: need a 5x5 matrix");
        if (!(m_.transpose() == -m_)) throw std::invalid_argument("SkewMatrix5: matrix is not antisymmetric");
    }

    /// e_ij: sends e_j to e_i and e_i to -e_j (1-based, i != j).
    static SkewMatrix5 basis(int i, int j) {
        if (i < 1 || i > 5 || j < 1 || j > 5 || i == j)
            throw std::out_of_range("SkewMatrix5: e_ij needs distinct indices in 1..5");
        SkewMatrix5 a;
        a.m_(i - 1, j - 1) = SqrtField(1);
        a.m_(j - 1, i - 1) = SqrtField(-1);
        return a;
    }

    const Matrix<SqrtField>& matrix() const { return m_; }
    const SqrtField& operator()(int i, int j) const { return m_(i - 1, j - 1); }
    bool is_zero() const { return m_.is_zero(); }

    friend SkewMatrix5 operator+(const SkewMatrix5& a, const SkewMatrix5& b) { return raw(a.m_ + b.m_); }
    friend SkewMatrix5 operator-(const SkewMatrix5& a, const SkewMatrix5& b) { return raw(a.m_ - b.m_); }
    SkewMatrix5 operator-() const { return raw(-m_); }
    SkewMatrix5& operator+=(const SkewMatrix5& o) { return *this = *this + o; }
    friend SkewMatrix5 operator*(const SqrtField& s, const SkewMatrix5& a) { return raw(s * a.m_); }
    friend bool operator==(const SkewMatrix5& a, const SkewMatrix5& b) { return a.m_ == b.m_; }

    std::string to_string() const { return m_.to_string(); }

private:
    static SkewMatrix5 raw(Matrix<SqrtField> m) {
        SkewMatrix5 a;
        a.m_ = std::move(m);
        return a;
    }
    friend SkewMatrix5 bracket(const SkewMatrix5& a, const SkewMatrix5& b);

    Matrix<SqrtField> m_;
};

inline SkewMatrix5 bracket(const SkewMatrix5& a, const SkewMatrix5& b) {
    return SkewMatrix5::raw(a.m_ * b.m_ - b.m_ * a.m_);
}

/// <A, B> = -1/2 tr(AB) = 1/2 sum_ij A_ij B_ij for antisymmetric A, B.
inline SqrtField inner(const SkewMatrix5& a, const SkewMatrix5& b) {
    SqrtField s;
    for (int i = 1; i <= 5; ++i)
        for (int j = 1; j <= 5; ++j)
            if (!a(i, j).is_zero() && !b(i, j).is_zero()) s += a(i, j) * b(i, j);
    return Rational(1, 2) * s;
}

inline SkewMatrix5 basis_eij(int i, int j) { return SkewMatrix5::basis(i, j); }

/// Image of e_12, e_23 or e_13 of so(3) under the irreducible embedding (k = 12, 23, 13).
inline SkewMatrix5 iota(int k) {
    const SqrtField r3 = sqrt_of(3);
    switch (k) {
        case 12: return SqrtField(2) * basis_eij(1, 2) + basis_eij(3, 4);
        case 23: return basis_eij(2, 3) - basis_eij(1, 4) + r3 * basis_eij(4, 5);
        case 13: return basis_eij(1, 3) + basis_eij(2, 4) + r3 * basis_eij(3, 5);
        default: throw std::out_of_range("iota: index must be 12, 23 or 13");
    }
}

namespace detail {

inline std::array<SkewMatrix5, 10> make_g_basis() {
    const SqrtField s1_5 = SqrtField::sqrt(Rational(1, 5));
    const SqrtField s2_5 = SqrtField::sqrt(Rational(2, 5));
    const SqrtField s3_10 = SqrtField::sqrt(Rational(3, 10));
    const SqrtField s1_2 = SqrtField::sqrt(Rational(1, 2));
    return {
        s1_5 * basis_eij(1, 2) - SqrtField(2) * s1_5 * basis_eij(3, 4),
        s2_5 * basis_eij(4, 5) - s3_10 * (basis_eij(2, 3) - basis_eij(1, 4)),
        basis_eij(2, 5),
        s2_5 * basis_eij(3, 5) - s3_10 * (basis_eij(1, 3) + basis_eij(2, 4)),
        s1_2 * (basis_eij(2, 4) - basis_eij(1, 3)),
        -(s1_2 * (basis_eij(2, 3) + basis_eij(1, 4))),
        basis_eij(1, 5),
        s1_5 * iota(12),
        s1_5 * iota(23),
        s1_5 * iota(13),
    };
}

}  // namespace detail

/// e1..e7 (basis of p) followed by f1, f2, f3 (basis of h); 1-based via g_basis(i).
inline const std::array<SkewMatrix5, 10>& g_basis_array() {
    static const std::array<SkewMatrix5, 10> basis = detail::make_g_basis();
    return basis;
}

inline const SkewMatrix5& g_basis(int i) {
    if (i < 1 || i > 10) throw std::out_of_range("g_basis: index must be in 1..10");
    return g_basis_array()[i - 1];
}

inline std::array<SkewMatrix5, 7> p_basis() {
    std::array<SkewMatrix5, 7> out;
    for (int i = 0; i < 7; ++i) out[i] = g_basis_array()[i];
    return out;
}

inline std::array<SkewMatrix5, 3> h_basis() {
    return {g_basis_array()[7], g_basis_array()[8], g_basis_array()[9]};
}

inline SkewMatrix5 project_p(const SkewMatrix5& a) {
    SkewMatrix5 out;
    for (int i = 1; i <= 7; ++i) {
        const SqrtField c = inner(a, g_basis(i));
        if (!c.is_zero()) out += c * g_basis(i);
    }
    return out;
}

inline SkewMatrix5 project_h(const SkewMatrix5& a) {
    SkewMatrix5 out;
    for (int i = 8; i <= 10; ++i) {
        const SqrtField c = inner(a, g_basis(i));
        if (!c.is_zero()) out += c * g_basis(i);
    }
    return out;
}

inline bool in_h(const SkewMatrix5& a) { return project_p(a).is_zero(); }

inline SkewMatrix5 to_matrix(const TangentVector& v) {
    SkewMatrix5 out;
    for (int i = 1; i <= 7; ++i)
        if (!v[i].is_zero()) out += v[i] * g_basis(i);
    return out;
}

/// Coordinates of the p-component of a.
inline TangentVector to_tangent(const SkewMatrix5& a) {
    TangentVector v;
    for (int i = 1; i <= 7; ++i) v[i] = inner(a, g_basis(i));
    return v;
}

/// [v, w]_p
inline TangentVector bracket_p(const TangentVector& v, const TangentVector& w) {
    return to_tangent(bracket(to_matrix(v), to_matrix(w)));
}

/// Bracket table of g in the basis e1..e10: c(i,j,k) = <[e_i, e_j], e_k>.
///
/// The tangential constants c_ijk = <[e_i,e_j]_p, e_k> are the slice k <= 7.
class StructureConstants {
public:
    static StructureConstants compute() {
        StructureConstants sc;
        for (int i = 1; i <= 10; ++i)
            for (int j = 1; j <= 10; ++j) {
                if (i == j) continue;
                const SkewMatrix5 b = bracket(g_basis(i), g_basis(j));
                for (int k = 1; k <= 10; ++k) sc.at(i, j, k) = inner(b, g_basis(k));
            }
        return sc;
    }

    const SqrtField& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

    /// c_ijk with k restricted to p.
    const SqrtField& tangential(int i, int j, int k) const {
        if (k < 1 || k > 7) throw std::out_of_range("StructureConstants: tangential index must be in 1..7");
        return (*this)(i, j, k);
    }

    /// Overwrites one constant (fault injection in verification runs).
    void set(int i, int j, int k, SqrtField value) { at(i, j, k) = std::move(value); }

private:
    static std::size_t index(int i, int j, int k) {
        if (i < 1 || i > 10 || j < 1 || j > 10 || k < 1 || k > 10)
            throw std::out_of_range("StructureConstants: indices must be in 1..10");
        return static_cast<std::size_t>(((i - 1) * 10 + (j - 1)) * 10 + (k - 1));
    }
    SqrtField& at(int i, int j, int k) { return data_[index(i, j, k)]; }

    std::vector<SqrtField> data_ = std::vector<SqrtField>(1000);
};

inline const StructureConstants& structure_constants() {
    static const StructureConstants sc = StructureConstants::compute();
    return sc;
}

/// Triples (i < j < k) of basis indices on which the Jacobi identity fails
/// for the given bracket table.
inline std::vector<std::array<int, 3>> jacobi_violations(const StructureConstants& c) {
    std::vector<std::array<int, 3>> bad;
    for (int i = 1; i <= 10; ++i)
        for (int j = i + 1; j <= 10; ++j)
            for (int k = j + 1; k <= 10; ++k) {
                bool ok = true;
                for (int n = 1; n <= 10 && ok; ++n) {
                    SqrtField s;
                    for (int m = 1; m <= 10; ++m) {
                        // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
                        if (!c(i, j, m).is_zero() && !c(m, k, n).is_zero()) s += c(i, j, m) * c(m, k, n);
                        if (!c(j, k, m).is_zero() && !c(m, i, n).is_zero()) s += c(j, k, m) * c(m, i, n);
                        if (!c(k, i, m).is_zero() && !c(m, j, n).is_zero()) s += c(k, i, m) * c(m, j, n);
                    }
                    ok = s.is_zero();
                }
                if (!ok) bad.push_back({i, j, k});
            }
    return bad;
}

/// Matrix of ad(f) restricted to p: entry (b, a) = <[f, e_a], e_b>.
inline Matrix<SqrtField> isotropy_matrix(const SkewMatrix5& f) {
    if (!in_h(f)) throw std::invalid_argument("isotropy_matrix: element is not in h");
    Matrix<SqrtField> m(7, 7);
    for (int a = 1; a <= 7; ++a) {
        const SkewMatrix5 b = bracket(f, g_basis(a));
        for (int r = 1; r <= 7; ++r) m(r - 1, a - 1) = inner(b, g_basis(r));
    }
    return m;
}

/// alpha_k(v, w) = <f_k, [v, w]> as a 2-form on p, k = 1, 2, 3.
inline AltForm two_form_alpha(int k) {
    if (k < 1 || k > 3) throw std::out_of_range("two_form_alpha: k must be 1, 2 or 3");
    AltForm form(2);
    for (int a = 1; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            const SqrtField c = inner(g_basis(7 + k), bracket(g_basis(a), g_basis(b)));
            if (!c.is_zero()) form.add({a, b}, PiScalar(c));
        }
    return form;
}

}  // namespace berger
