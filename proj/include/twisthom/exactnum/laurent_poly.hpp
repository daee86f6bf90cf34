#pragma once

#include "twisthom/exactnum/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace twisthom {

/**
 * Element of Q[t, t^-1].
 *
 * Stored densely as an offset plus a coefficient run whose first and last
 * entries are nonzero; the zero polynomial has no coefficients. The units of
 * the ring are exactly c*t^k, and the "width" (highest minus lowest exponent)
 * serves as the Euclidean function.
 */
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}
    LaurentPoly(Rational c);

    static LaurentPoly monomial(Rational c, long exponent);
    static LaurentPoly t() { return monomial(Rational(1), 1); }
    // Coefficients c[i] of t^(low + i); zeros at either end are trimmed.
    static LaurentPoly from_coeffs(long low, std::vector<Rational> coeffs);
    static LaurentPoly from_terms(const std::map<long, Rational>& terms);

    std::map<long, Rational> terms() const;
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_unit() const noexcept { return coeffs_.size() == 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && low_ == 0 && coeffs_[0].is_one(); }
    // Lowest and highest exponents; both 0 for the zero polynomial.
    long low_degree() const noexcept { return low_; }
    long high_degree() const noexcept {
        return coeffs_.empty() ? 0 : low_ + static_cast<long>(coeffs_.size()) - 1;
    }
    long width() const noexcept { return coeffs_.empty() ? 0 : static_cast<long>(coeffs_.size()) - 1; }
    Rational coeff(long exponent) const;
    const Rational& leading_coeff() const;

    // Associate with lowest exponent 0 and leading coefficient 1 (zero stays zero).
    LaurentPoly normalized() const;
    // The unit u with u * (*this) == normalized().
    LaurentPoly normalizing_unit() const;
    LaurentPoly shifted(long k) const;
    // Inverse of a unit c*t^k.
    LaurentPoly unit_inverse() const;
    // Substitute t -> t^-1.
    LaurentPoly inverted_variable() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
        return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
    }

    std::string str(char var = 't') const;

  private:
    void trim();

    long low_ = 0;
    std::vector<Rational> coeffs_;
};

// Euclidean division by width: a = q*b + r with width(r) < width(b) or r = 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
// Throws InputError if b does not divide a.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& d, const LaurentPoly& a);
// Normalized gcd (zero only when both inputs are zero).
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace twisthom
