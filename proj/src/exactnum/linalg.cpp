#include "twisthom/exactnum/linalg.hpp"

#include <algorithm>

namespace twisthom {

namespace {

// Fraction-free elimination; div(x, d) must divide exactly. Returns the rank.
// For a square matrix of full rank the last pivot is the determinant up to
// the sign recorded by counting swaps.
template <class T, class Div>
size_t bareiss(Matrix<T>& m, Div div, int* swaps = nullptr) {
    T prev(1);
    size_t k = 0;
    const size_t steps = std::min(m.rows(), m.cols());
    for (; k < steps; ++k) {
        size_t pr = k, pc = k;
        bool found = false;
        for (size_t i = k; i < m.rows() && !found; ++i)
            for (size_t j = k; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) {
                    pr = i;
                    pc = j;
                    found = true;
                    break;
                }
        if (!found) break;
        if (swaps) *swaps += (pr != k) + (pc != k);
        m.swap_rows(pr, k);
        m.swap_cols(pc, k);
        const T piv = m(k, k);
        for (size_t i = k + 1; i < m.rows(); ++i) {
            const T lead = m(i, k);
            const bool lead_zero = lead.is_zero();
            for (size_t j = k + 1; j < m.cols(); ++j) {
                T v = m(i, j) * piv;
                if (!lead_zero && !m(k, j).is_zero()) v -= lead * m(k, j);
                m(i, j) = div(v, prev);
            }
            m(i, k) = T(0);
        }
        prev = piv;
    }
    return k;
}

} // namespace

size_t matrix_rank(const Matrix<Integer>& a) {
    Matrix<Integer> m = a;
    return bareiss(m, [](const Integer& x, const Integer& d) { return d.is_one() ? x : divexact(x, d); });
}

size_t matrix_rank(const Matrix<Rational>& a) {
    Matrix<Integer> m(a.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i) {
        Integer l(1);
        for (size_t j = 0; j < a.cols(); ++j)
            if (!a(i, j).denominator().is_one()) l = lcm(l, a(i, j).denominator());
        for (size_t j = 0; j < a.cols(); ++j) {
            const Rational& x = a(i, j);
            if (x.is_zero()) continue;
            m(i, j) = l.is_one() ? x.numerator() : x.numerator() * divexact(l, x.denominator());
        }
    }
    return matrix_rank(m);
}

size_t matrix_rank(const Matrix<CycloNumber>& a) {
    bool all_rational = true;
    long conductor = 1;
    for (const auto& x : a.data()) {
        if (!x.is_rational()) all_rational = false;
        conductor = lcm_long(conductor, x.conductor());
    }
    if (all_rational) return matrix_rank(a.map([](const CycloNumber& x) { return x.coeffs()[0]; }));
    Matrix<CycloNumber> m = a.map([conductor](const CycloNumber& x) { return x.embed(conductor); });
    // Division by the previous pivot is exact; over a field it is multiplication by the inverse.
    CycloNumber cached_d(1), cached_inv(1);
    return bareiss(m, [&](const CycloNumber& x, const CycloNumber& d) {
        if (d.is_one() || x.is_zero()) return x;
        if (!(d == cached_d)) {
            cached_d = d;
            cached_inv = d.inverse();
        }
        return x * cached_inv;
    });
}

Integer determinant(const Matrix<Integer>& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    if (a.rows() == 0) return Integer(1);
    Matrix<Integer> m = a;
    int swaps = 0;
    size_t r = bareiss(m, [](const Integer& x, const Integer& d) { return d.is_one() ? x : divexact(x, d); }, &swaps);
    if (r < a.rows()) return Integer(0);
    Integer det = m(r - 1, r - 1);
    return swaps % 2 ? -det : det;
}

LaurentPoly determinant(const Matrix<LaurentPoly>& a) {
    if (a.rows() != a.cols()) throw InputError("determinant of a non-square matrix");
    if (a.rows() == 0) return LaurentPoly(1);
    Matrix<LaurentPoly> m = a;
    int swaps = 0;
    size_t r = bareiss(m, [](const LaurentPoly& x, const LaurentPoly& d) { return d.is_one() ? x : exact_div(x, d); },
                       &swaps);
    if (r < a.rows()) return LaurentPoly();
    LaurentPoly det = m(r - 1, r - 1);
    return swaps % 2 ? -det : det;
}

} // namespace twisthom
