#pragma once

// Cayley octonions in the basis e0 = 1, e1..e7 with e_i * e_{i+1} = e_{i+3}
// (indices mod 7), and Clifford multiplication on S = O as right Cayley
// multiplication by imaginary octonions.

#include "berger/liealg.hpp"
#include "berger/matrix.hpp"
#include "berger/sqrt_field.hpp"
#include "berger/tangent_vector.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace berger {

namespace detail {

struct UnitProduct {
    int sign;
    int index;
};

/// Products of basis units e_a * e_b, a, b in 0..7.
inline constexpr std::array<std::array<UnitProduct, 8>, 8> make_octonion_table() {
    std::array<std::array<UnitProduct, 8>, 8> t{};
    for (int a = 0; a < 8; ++a) {
        t[0][a] = {1, a};
        t[a][0] = {1, a};
    }
    for (int a = 1; a < 8; ++a) t[a][a] = {-1, 0};
    auto wrap = [](int i) { return (i - 1) % 7 + 1; };
    for (int i = 1; i <= 7; ++i) {
        const int a = i, b = wrap(i + 1), c = wrap(i + 3);
        // each quaternionic triple (a, b, c) is cyclic
        t[a][b] = {1, c};
        t[b][c] = {1, a};
        t[c][a] = {1, b};
        t[b][a] = {-1, c};
        t[c][b] = {-1, a};
        t[a][c] = {-1, b};
    }
    return t;
}

inline constexpr auto kOctonionTable = make_octonion_table();

}  // namespace detail

class Octonion {
public:
    Octonion() = default;
    explicit Octonion(std::array<SqrtField, 8> coords) : c_(std::move(coords)) {}

    static Octonion unit(int a) {
        if (a < 0 || a > 7) throw std::out_of_range("Octonion: unit index must be in 0..7");
        Octonion x;
        x.c_[a] = SqrtField(1);
        return x;
    }

    /// The imaginary octonion with the coordinates of v.
    static Octonion imaginary(const TangentVector& v) {
        Octonion x;
        for (int i = 1; i <= 7; ++i) x.c_[i] = v[i];
        return x;
    }

    const SqrtField& operator[](int a) const { return c_.at(a); }
    SqrtField& operator[](int a) { return c_.at(a); }

    Octonion conj() const {
        Octonion x = *this;
        for (int a = 1; a < 8; ++a) x.c_[a] = -x.c_[a];
        return x;
    }

    SqrtField norm2() const {
        SqrtField s;
        for (const auto& v : c_)
            if (!v.is_zero()) s += v * v;
        return s;
    }

    friend Octonion operator+(Octonion a, const Octonion& b) {
        for (int i = 0; i < 8; ++i) a.c_[i] += b.c_[i];
        return a;
    }
    friend Octonion operator-(Octonion a, const Octonion& b) {
        for (int i = 0; i < 8; ++i) a.c_[i] -= b.c_[i];
        return a;
    }
    friend Octonion operator*(const SqrtField& s, Octonion a) {
        for (auto& v : a.c_) v = s * v;
        return a;
    }
    friend bool operator==(const Octonion&, const Octonion&) = default;

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    std::string to_string() const {
        std::string out;
        for (int a = 0; a < 8; ++a) {
            if (c_[a].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + c_[a].to_string() + ")e" + std::to_string(a);
        }
        return out.empty() ? "0" : out;
    }

private:
    std::array<SqrtField, 8> c_{};
};

/// Cayley product.
inline Octonion cayley_mul(const Octonion& x, const Octonion& y) {
    Octonion out;
    for (int a = 0; a < 8; ++a) {
        if (x[a].is_zero()) continue;
        for (int b = 0; b < 8; ++b) {
            if (y[b].is_zero()) continue;
            const auto [sign, k] = detail::kOctonionTable[a][b];
            const SqrtField p = x[a] * y[b];
            out[k] += sign > 0 ? p : -p;
        }
    }
    return out;
}

inline Octonion operator*(const Octonion& x, const Octonion& y) { return cayley_mul(x, y); }

/// c_v: s -> s * v on S = O, as an 8x8 matrix (column a is the image of e_a).
inline Matrix<SqrtField> clifford_right(const TangentVector& v) {
    const Octonion ov = Octonion::imaginary(v);
    Matrix<SqrtField> m(8, 8);
    for (int a = 0; a < 8; ++a) {
        const Octonion img = cayley_mul(Octonion::unit(a), ov);
        for (int b = 0; b < 8; ++b) m(b, a) = img[b];
    }
    return m;
}

inline Matrix<SqrtField> clifford_basis(int i) { return clifford_right(TangentVector::basis(i)); }

/// ad~_i = 1/4 sum_{j,k} c_ijk c_j c_k on S, i in 1..10.
inline Matrix<SqrtField> ad_tilde(int i, const StructureConstants& sc = structure_constants()) {
    Matrix<SqrtField> m(8, 8);
    for (int j = 1; j <= 7; ++j)
        for (int k = 1; k <= 7; ++k) {
            const SqrtField& c = sc.tangential(i, j, k);
            if (c.is_zero()) continue;
            m += c * (clifford_basis(j) * clifford_basis(k));
        }
    return Rational(1, 4) * m;
}

}  // namespace berger
