#pragma once

#include "twisthom/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace twisthom {

// Dense row-major matrix over one scalar domain. Zero-sized shapes are legal.
template <class T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(size_t rows, size_t cols, std::vector<T> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) throw InputError("matrix data length does not match its shape");
    }
    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    size_t rows() const noexcept { return rows_; }
    size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
    const std::vector<T>& data() const noexcept { return data_; }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!x.is_zero()) return false;
        return true;
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    // row[dst] += f * row[src]
    void add_row_multiple(size_t dst, size_t src, const T& f) {
        if (f.is_zero()) return;
        for (size_t j = 0; j < cols_; ++j)
            if (!(*this)(src, j).is_zero()) (*this)(dst, j) += f * (*this)(src, j);
    }
    // col[dst] += f * col[src]
    void add_col_multiple(size_t dst, size_t src, const T& f) {
        if (f.is_zero()) return;
        for (size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, src).is_zero()) (*this)(i, dst) += f * (*this)(i, src);
    }
    void scale_row(size_t r, const T& f) {
        for (size_t j = 0; j < cols_; ++j) (*this)(r, j) *= f;
    }
    void scale_col(size_t c, const T& f) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, c) *= f;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    // Rows [r0, r1) and columns [c0, c1).
    Matrix block(size_t r0, size_t r1, size_t c0, size_t c1) const {
        Matrix b(r1 - r0, c1 - c0);
        for (size_t i = r0; i < r1; ++i)
            for (size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
        return b;
    }
    void set_block(size_t r0, size_t c0, const Matrix& b) {
        for (size_t i = 0; i < b.rows(); ++i)
            for (size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    template <class F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<U> out;
        out.reserve(data_.size());
        for (const auto& x : data_) out.push_back(f(x));
        return Matrix<U>(rows_, cols_, std::move(out));
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (auto& x : m.data_) x = -x;
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] += b.data_[k];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        check_same_shape(a, b);
        Matrix m = a;
        for (size_t k = 0; k < m.data_.size(); ++k) m.data_[k] -= b.data_[k];
        return m;
    }
    // Zero entries of the left factor are skipped.
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw InputError("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                             std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                             std::to_string(b.cols_));
        Matrix m(a.rows_, b.cols_);
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (x.is_zero()) continue;
                for (size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (!y.is_zero()) m(i, j) += x * y;
                }
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

  private:
    static void check_same_shape(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InputError("matrix shape mismatch");
    }

    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<T> data_;
};

// Block matrix [a b] placed side by side; row counts must agree.
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw InputError("hconcat row mismatch");
    Matrix<T> m(a.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(0, a.cols(), b);
    return m;
}

// Block matrix [a; b] stacked vertically; column counts must agree.
template <class T>
Matrix<T> vconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() != b.cols()) throw InputError("vconcat column mismatch");
    Matrix<T> m(a.rows() + b.rows(), a.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), 0, b);
    return m;
}

} // namespace twisthom
