#pragma once

#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/exactnum/integer.hpp"
#include "twisthom/exactnum/laurent_poly.hpp"
#include "twisthom/exactnum/matrix.hpp"
#include "twisthom/exactnum/rational.hpp"

#include <optional>
#include <vector>

namespace twisthom {

// Exact rank by fraction-free elimination. The pivot at each step is the
// first nonzero entry of the remaining block, scanning rows then columns.
size_t matrix_rank(const Matrix<Integer>& a);
// Clears denominators row by row, then runs the integer elimination.
size_t matrix_rank(const Matrix<Rational>& a);
// Falls back to the rational path when every entry is rational.
size_t matrix_rank(const Matrix<CycloNumber>& a);

// Determinant over an integral domain via Bareiss (Integer and LaurentPoly).
Integer determinant(const Matrix<Integer>& a);
LaurentPoly determinant(const Matrix<LaurentPoly>& a);

template <class T>
struct RrefResult {
    Matrix<T> r;
    std::vector<size_t> pivots;
};

// Reduced row echelon form over a field (Rational or CycloNumber).
template <class T>
RrefResult<T> rref(Matrix<T> a) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        size_t p = row;
        while (p < a.rows() && a(p, col).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, row);
        T inv = T(1) / a(row, col);
        if (!(a(row, col) == T(1))) a.scale_row(row, inv);
        for (size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col).is_zero()) continue;
            a.add_row_multiple(i, row, -a(i, col));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

// Columns form a basis of {x : A x = 0}.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
    auto [r, pivots] = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (size_t p : pivots) is_pivot[p] = true;
    Matrix<T> basis(a.cols(), a.cols() - pivots.size());
    size_t k = 0;
    for (size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis(free, k) = T(1);
        for (size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free);
        ++k;
    }
    return basis;
}

// The pivot columns of A: a basis of its column space drawn from A itself.
template <class T>
Matrix<T> column_space(const Matrix<T>& a) {
    auto pivots = rref(a).pivots;
    Matrix<T> basis(a.rows(), pivots.size());
    for (size_t k = 0; k < pivots.size(); ++k)
        for (size_t i = 0; i < a.rows(); ++i) basis(i, k) = a(i, pivots[k]);
    return basis;
}

// Some X with A X = B, or nullopt when the system is inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) throw InputError("solve: row count mismatch");
    auto [r, pivots] = rref(hconcat(a, b));
    Matrix<T> x(a.cols(), b.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols()) return std::nullopt;
        for (size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = r(i, a.cols() + j);
    }
    return x;
}

} // namespace twisthom
