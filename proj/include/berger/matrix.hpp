#pragma once

// Small dense matrices over an exact field (Rational or SqrtField).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace berger {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<T> row_major)
        : rows_(rows), cols_(cols), data_(std::move(row_major)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count mismatch");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix column(std::vector<T> entries) {
        const std::size_t n = entries.size();
        return Matrix(n, 1, std::move(entries));
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        require_square("trace");
        T s{};
        for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
        return s;
    }

    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const T& s, const Matrix& m) {
        Matrix out(m.rows_, m.cols_);
        if (s.is_zero()) return out;
        for (std::size_t k = 0; k < m.data_.size(); ++k)
            if (!m.data_[k].is_zero()) out.data_[k] = s * m.data_[k];
        return out;
    }

    /// Sparse-aware product; exact zeros are skipped.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (bkj.is_zero()) continue;
                    out(i, j) += aik * bkj;
                }
            }
        }
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Rank by Gaussian elimination over the field.
    std::size_t rank() const {
        Matrix m = *this;
        std::size_t r = 0;
        for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < rows_ && m(pivot, c).is_zero()) ++pivot;
            if (pivot == rows_) continue;
            m.swap_rows(pivot, r);
            const T inv = m(r, c).inverse();
            for (std::size_t i = r + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                const T f = m(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j)
                    if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
            }
            ++r;
        }
        return r;
    }

    T determinant() const {
        require_square("determinant");
        Matrix m = *this;
        T det(1);
        for (std::size_t c = 0; c < cols_; ++c) {
            std::size_t pivot = c;
            while (pivot < rows_ && m(pivot, c).is_zero()) ++pivot;
            if (pivot == rows_) return T{};
            if (pivot != c) {
                m.swap_rows(pivot, c);
                det = -det;
            }
            det *= m(c, c);
            const T inv = m(c, c).inverse();
            for (std::size_t i = c + 1; i < rows_; ++i) {
                if (m(i, c).is_zero()) continue;
                const T f = m(i, c) * inv;
                for (std::size_t j = c; j < cols_; ++j)
                    if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
            }
        }
        return det;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += i ? ",\n [" : "[";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += ", ";
                out += (*this)(i, j).to_string();
            }
            out += "]";
        }
        return out + "]";
    }

private:
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void require_square(const char* what) const {
        if (rows_ != cols_) throw std::invalid_argument(std::string("Matrix: ") + what + " needs a square matrix");
    }
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

/// Kronecker product a (x) b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return out;
}

}  // namespace berger
