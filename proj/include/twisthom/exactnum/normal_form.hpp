#pragma once

#include "twisthom/exactnum/integer.hpp"
#include "twisthom/exactnum/laurent_poly.hpp"
#include "twisthom/exactnum/matrix.hpp"

#include <vector>

namespace twisthom {

// Euclidean-domain operations used by the normal forms.
template <class T>
struct Euclid;

template <>
struct Euclid<Integer> {
    static Integer norm(const Integer& x) { return abs(x); }
    static void divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) { tdiv_qr(a, b, q, r); }
    static bool is_unit(const Integer& x) { return x == Integer(1) || x == Integer(-1); }
    // u with u*x in canonical form (non-negative).
    static Integer normalizer(const Integer& x) { return x.sign() < 0 ? Integer(-1) : Integer(1); }
    static Integer unit_inverse(const Integer& u) { return u; }
};

template <>
struct Euclid<LaurentPoly> {
    static long norm(const LaurentPoly& x) { return x.width(); }
    static void divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& r) {
        auto qr = twisthom::divmod(a, b);
        q = std::move(qr.first);
        r = std::move(qr.second);
    }
    static bool is_unit(const LaurentPoly& x) { return x.is_unit(); }
    // u with u*x monic and of lowest degree 0.
    static LaurentPoly normalizer(const LaurentPoly& x) { return x.normalizing_unit(); }
    static LaurentPoly unit_inverse(const LaurentPoly& u) { return u.unit_inverse(); }
};

template <class T>
struct SmithForm {
    Matrix<T> u, d, v;
    // Diagonal entries d(i, i) for i < min(rows, cols).
    std::vector<T> diagonal() const {
        std::vector<T> out;
        for (size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
        return out;
    }
};

/**
 * Smith normal form U A V = D over a Euclidean domain.
 *
 * At each stage the pivot is the nonzero entry of the trailing block with the
 * smallest norm, ties broken by (row, col). Diagonal entries come out in
 * canonical form and in divisibility order; trailing zeros follow the
 * nonzero ones.
 */
template <class T>
SmithForm<T> smith_normal_form(const Matrix<T>& a) {
    using E = Euclid<T>;
    const size_t m = a.rows(), n = a.cols();
    Matrix<T> d = a;
    Matrix<T> u = Matrix<T>::identity(m);
    Matrix<T> v = Matrix<T>::identity(n);
    const size_t steps = std::min(m, n);
    for (size_t t = 0; t < steps; ++t) {
        bool any = false;
        for (;;) {
            // smallest-norm pivot, lexicographic tie-break
            size_t pr = 0, pc = 0;
            bool found = false;
            decltype(E::norm(d(0, 0))) best{};
            for (size_t i = t; i < m; ++i)
                for (size_t j = t; j < n; ++j) {
                    if (d(i, j).is_zero()) continue;
                    auto nm = E::norm(d(i, j));
                    if (!found || nm < best) {
                        best = nm;
                        pr = i;
                        pc = j;
                        found = true;
                    }
                }
            if (!found) break;
            any = true;
            d.swap_rows(pr, t);
            u.swap_rows(pr, t);
            d.swap_cols(pc, t);
            v.swap_cols(pc, t);

            bool dirty = false;
            T q, r;
            for (size_t i = t + 1; i < m; ++i) {
                if (d(i, t).is_zero()) continue;
                E::divmod(d(i, t), d(t, t), q, r);
                d.add_row_multiple(i, t, -q);
                u.add_row_multiple(i, t, -q);
                if (!d(i, t).is_zero()) dirty = true;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (d(t, j).is_zero()) continue;
                E::divmod(d(t, j), d(t, t), q, r);
                d.add_col_multiple(j, t, -q);
                v.add_col_multiple(j, t, -q);
                if (!d(t, j).is_zero()) dirty = true;
            }
            if (dirty) continue;

            // Pivot must divide the whole trailing block; otherwise fold the offending row in.
            bool folded = false;
            for (size_t i = t + 1; i < m && !folded; ++i)
                for (size_t j = t + 1; j < n; ++j) {
                    if (d(i, j).is_zero()) continue;
                    E::divmod(d(i, j), d(t, t), q, r);
                    if (!r.is_zero()) {
                        d.add_row_multiple(t, i, T(1));
                        u.add_row_multiple(t, i, T(1));
                        folded = true;
                        break;
                    }
                }
            if (!folded) break;
        }
        if (!any) break;
        T unit = E::normalizer(d(t, t));
        if (!(unit == T(1))) {
            d.scale_row(t, unit);
            u.scale_row(t, unit);
        }
    }
    return {std::move(u), std::move(d), std::move(v)};
}

inline SmithForm<Integer> smith_normal_form_int(const Matrix<Integer>& a) { return smith_normal_form(a); }
inline SmithForm<LaurentPoly> smith_normal_form_poly(const Matrix<LaurentPoly>& a) { return smith_normal_form(a); }

template <class T>
struct ColumnReduction {
    // A V = [E | 0] with E of full column rank `rank`; vinv = V^-1.
    Matrix<T> v, vinv;
    size_t rank = 0;
};

/**
 * Unimodular column reduction of A to column echelon form.
 *
 * Row by row, the entries right of the current pivot column are combined by
 * Euclidean steps into a single column. The last cols - rank columns of V are
 * then a free basis of ker A, and for b in ker A the vector V^-1 b vanishes in
 * its first rank coordinates.
 */
template <class T>
ColumnReduction<T> column_reduce(const Matrix<T>& a) {
    using E = Euclid<T>;
    const size_t m = a.rows(), n = a.cols();
    Matrix<T> e = a;
    Matrix<T> v = Matrix<T>::identity(n);
    Matrix<T> vinv = Matrix<T>::identity(n);
    size_t r = 0;
    T q, rem;
    for (size_t i = 0; i < m && r < n; ++i) {
        for (;;) {
            size_t pc = n;
            for (size_t j = r; j < n; ++j) {
                if (e(i, j).is_zero()) continue;
                if (pc == n || E::norm(e(i, j)) < E::norm(e(i, pc))) pc = j;
            }
            if (pc == n) break;
            bool others = false;
            for (size_t j = r; j < n; ++j) {
                if (j == pc || e(i, j).is_zero()) continue;
                E::divmod(e(i, j), e(i, pc), q, rem);
                // col_j -= q col_pc; inverse: row_pc(vinv) += q row_j(vinv)
                e.add_col_multiple(j, pc, -q);
                v.add_col_multiple(j, pc, -q);
                vinv.add_row_multiple(pc, j, q);
                if (!e(i, j).is_zero()) others = true;
            }
            if (others) continue;
            e.swap_cols(pc, r);
            v.swap_cols(pc, r);
            vinv.swap_rows(pc, r);
            ++r;
            break;
        }
    }
    return {std::move(v), std::move(vinv), r};
}

// Columns form a free basis of ker A.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& a) {
    auto red = column_reduce(a);
    return red.v.block(0, a.cols(), red.rank, a.cols());
}

inline Matrix<LaurentPoly> kernel_basis_poly(const Matrix<LaurentPoly>& a) { return kernel_basis(a); }

} // namespace twisthom
