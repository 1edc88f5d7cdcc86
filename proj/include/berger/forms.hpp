#pragma once

// Invariant forms on p: the G2 forms, curvature of the reductive connection,
// the first Pontrjagin form, its invariant primitive and the secondary
// integral.

#include "berger/alt_form.hpp"
#include "berger/liealg.hpp"
#include "berger/pi_scalar.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace berger {

namespace detail {

inline int wrap7(int i) { return (i - 1) % 7 + 1; }

/// All sorted k-subsets of {1..7}.
inline std::vector<std::vector<int>> subsets7(int k) {
    std::vector<std::vector<int>> out;
    for (unsigned m = 0; m < 128; ++m)
        if (std::popcount(m) == k) out.push_back(AltForm::indices_of(static_cast<AltForm::Mask>(m)));
    return out;
}

}  // namespace detail

inline AltForm lambda3() {
    AltForm f(3);
    for (int i = 1; i <= 7; ++i) f.add({i, detail::wrap7(i + 1), detail::wrap7(i + 3)}, PiScalar(1));
    return f;
}

inline AltForm lambda4() {
    AltForm f(4);
    for (int i = 1; i <= 7; ++i)
        f.add({i, detail::wrap7(i + 1), detail::wrap7(i + 2), detail::wrap7(i + 5)}, PiScalar(1));
    return f;
}

/// R0(v, w) = -pi_*([v, w]_h) on p.
inline Matrix<SqrtField> curvature(const TangentVector& v, const TangentVector& w) {
    return -isotropy_matrix(project_h(bracket(to_matrix(v), to_matrix(w))));
}

/// p1(v1..v4) = -(1/(32 pi^2)) sum_{sigma in S4} sgn(sigma) tr(R0(v_s1, v_s2) R0(v_s3, v_s4)).
inline AltForm p1_form() {
    std::array<std::array<Matrix<SqrtField>, 8>, 8> r;
    for (int a = 1; a <= 7; ++a)
        for (int b = 1; b <= 7; ++b) r[a][b] = curvature(TangentVector::basis(a), TangentVector::basis(b));

    AltForm p(4);
    const PiScalar scale = PiScalar::monomial(SqrtField(Rational(-1, 32)), -2);
    for (const auto& idx : detail::subsets7(4)) {
        std::array<int, 4> perm{0, 1, 2, 3};
        SqrtField total;
        do {
            std::vector<int> order(perm.begin(), perm.end());
            const int sgn = AltForm::sort_sign(order);
            const SqrtField t = (r[idx[perm[0]]][idx[perm[1]]] * r[idx[perm[2]]][idx[perm[3]]]).trace();
            total += sgn > 0 ? t : -t;
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!total.is_zero()) p.add(idx, scale * PiScalar(total));
    }
    return p;
}

/// (da)(v0..vk) = s sum_{i<j} (-1)^(i+j) a([vi, vj]_p, v0, .., ^vi, .., ^vj, .., vk)
/// for invariant a; s is the sign convention (+1 or -1).
inline AltForm invariant_d(const AltForm& a, int sign = 1) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("invariant_d: sign must be +1 or -1");
    const int k = a.degree();
    if (k > 6) throw std::invalid_argument("invariant_d: degree must be at most 6");
    AltForm out(k + 1);
    if (k == 0) return out;
    for (const auto& idx : detail::subsets7(k + 1)) {
        PiScalar total;
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                std::vector<TangentVector> args{bracket_p(TangentVector::basis(idx[i]), TangentVector::basis(idx[j]))};
                for (int m = 0; m <= k; ++m)
                    if (m != i && m != j) args.push_back(TangentVector::basis(idx[m]));
                const PiScalar val = a.evaluate(args);
                total += (i + j) % 2 ? -val : val;
            }
        if (!total.is_zero()) out.add(idx, sign > 0 ? total : -total);
    }
    return out;
}

/// c with f = c g, for g != 0; throws if f is not a multiple of g.
inline PiScalar proportionality(const AltForm& f, const AltForm& g) {
    if (g.is_zero()) throw std::invalid_argument("proportionality: reference form is zero");
    const auto& [mask, gc] = *g.terms().begin();
    const PiScalar c = f.evaluate(AltForm::indices_of(mask)) / gc;
    if (!(f == c * g)) throw std::invalid_argument("proportionality: form is not a multiple of the reference");
    return c;
}

/// The invariant h = c' lambda3 with invariant_d(h, sign) = p, for p proportional to lambda4.
inline AltForm solve_primitive(const AltForm& p, int sign = 1) {
    if (p.degree() != 4) throw std::invalid_argument("solve_primitive: need a 4-form");
    const PiScalar c = proportionality(p, lambda4());
    if (c.is_zero()) return AltForm(3);
    const PiScalar d_ratio = proportionality(invariant_d(lambda3(), sign), lambda4());
    const AltForm h = (c / d_ratio) * lambda3();
    if (!(invariant_d(h, sign) == p)) throw std::logic_error("solve_primitive: d(h) != p");
    return h;
}

/// (L_f a)(v1..vk) = -sum_i a(v1, .., pi_f v_i, .., vk) on basis tuples.
inline AltForm lie_derivative(const AltForm& a, const Matrix<SqrtField>& pi_f) {
    const int k = a.degree();
    AltForm out(k);
    std::array<TangentVector, 8> image;
    for (int c = 1; c <= 7; ++c)
        for (int r = 1; r <= 7; ++r) image[c][r] = pi_f(r - 1, c - 1);
    for (const auto& idx : detail::subsets7(k)) {
        PiScalar total;
        for (int i = 0; i < k; ++i) {
            std::vector<TangentVector> args;
            for (int m = 0; m < k; ++m) args.push_back(m == i ? image[idx[m]] : TangentVector::basis(idx[m]));
            total -= a.evaluate(args);
        }
        if (!total.is_zero()) out.add(idx, total);
    }
    return out;
}

inline bool is_h_invariant(const AltForm& a) {
    for (const auto& f : h_basis())
        if (!lie_derivative(a, isotropy_matrix(f)).is_zero()) return false;
    return true;
}

// Volumes for the metric <A, B> = -1/2 tr(AB).
inline PiScalar volume_SO3() { return PiScalar::monomial(SqrtField(8), 2); }
inline PiScalar volume_SO5() { return PiScalar::monomial(SqrtField(Rational(128, 3)), 6); }
/// H is SO(3) scaled by sqrt5 in each of its three directions.
inline PiScalar volume_H() { return PiScalar(SqrtField::radical(5, 5)) * volume_SO3(); }
inline PiScalar volume_M() { return volume_SO5() / volume_H(); }

/// Integral over M of an invariant 7-form.
inline PiScalar integrate_invariant(const AltForm& omega) {
    if (omega.degree() != 7) throw std::invalid_argument("integrate_invariant: need a 7-form");
    return omega.evaluate({1, 2, 3, 4, 5, 6, 7}) * volume_M();
}

/// -(1/(2^7 7)) int_M p1 ^ h with h the invariant primitive of p1.
inline Rational secondary_integral(int sign = 1) {
    const AltForm p = p1_form();
    const PiScalar value = PiScalar(Rational(-1, 896)) * integrate_invariant(wedge(p, solve_primitive(p, sign)));
    const SqrtField x = value.to_field();
    return x.to_rational();
}

}  // namespace berger
