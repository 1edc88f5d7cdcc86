#pragma once

#include "berger/sqrt_field.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace berger {

/// A vector of p in the orthonormal basis e1..e7 (1-based accessors).
struct TangentVector {
    std::array<SqrtField, 7> coords{};

    static TangentVector basis(int i) {
        if (i < 1 || i > 7) throw std::out_of_range("TangentVector: basis index must be in 1..7");
        TangentVector v;
        v.coords[i - 1] = SqrtField(1);
        return v;
    }

    SqrtField& operator[](int i) { return coords.at(i - 1); }
    const SqrtField& operator[](int i) const { return coords.at(i - 1); }

    friend TangentVector operator+(TangentVector a, const TangentVector& b) {
        for (int i = 0; i < 7; ++i) a.coords[i] += b.coords[i];
        return a;
    }
    friend TangentVector operator*(const SqrtField& s, TangentVector v) {
        for (auto& x : v.coords) x = s * x;
        return v;
    }
    friend bool operator==(const TangentVector&, const TangentVector&) = default;

    SqrtField dot(const TangentVector& o) const {
        SqrtField s;
        for (int i = 0; i < 7; ++i)
            if (!coords[i].is_zero() && !o.coords[i].is_zero()) s += coords[i] * o.coords[i];
        return s;
    }

    bool is_zero() const {
        for (const auto& x : coords)
            if (!x.is_zero()) return false;
        return true;
    }
};

}  // namespace berger
