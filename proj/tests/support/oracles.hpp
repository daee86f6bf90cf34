#pragma once

// Floating-point reference computations; used only to cross-check the exact code.

#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/exactnum/matrix.hpp"

#include <Eigen/Dense>

#include <complex>

namespace oracle {

inline constexpr double kRankThreshold = 1e-8;

inline Eigen::MatrixXcd to_complex(const twisthom::Matrix<twisthom::CycloNumber>& a, long k = 1) {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = a(i, j).to_complex(k);
    return m;
}

// Number of singular values above threshold * max(1, largest singular value).
inline size_t svd_rank(const Eigen::MatrixXcd& m, double threshold = kRankThreshold) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    double scale = std::max(1.0, s(0));
    size_t r = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > threshold * scale) ++r;
    return r;
}

template <class T, class F>
Eigen::MatrixXd to_real(const twisthom::Matrix<T>& a, F value) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols()));
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value(a(i, j));
    return m;
}

inline size_t svd_rank(const Eigen::MatrixXd& m, double threshold = kRankThreshold) {
    return svd_rank(Eigen::MatrixXcd(m.cast<std::complex<double>>()), threshold);
}

} // namespace oracle
