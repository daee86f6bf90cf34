#pragma once

#include "twisthom/exactnum/laurent_poly.hpp"
#include "twisthom/exactnum/rational.hpp"

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace twisthom {

long euler_phi(long n);
long lcm_long(long a, long b);

// Phi_n as a polynomial in t; cached after the first request.
LaurentPoly cyclotomic_polynomial(long n);

/**
 * Element of Q(zeta_n), stored as sum c_i zeta_n^i with i < phi(n).
 *
 * Binary operations embed both operands into the field of the lcm of their
 * conductors. Equality is equality of field elements: -1 with conductor 1
 * equals zeta_2.
 */
class CycloNumber {
  public:
    CycloNumber() : coeffs_(1) {}
    CycloNumber(int v) : coeffs_{Rational(v)} {}
    CycloNumber(Rational v) : coeffs_{std::move(v)} {}
    // coeffs are taken modulo Phi_n; any length is accepted.
    CycloNumber(long conductor, std::vector<Rational> coeffs);

    // zeta_n^a for any integer a.
    static CycloNumber root_of_unity(long n, long a);

    long conductor() const noexcept { return conductor_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_rational() const noexcept;
    // Value as a rational; throws InputError when not rational.
    Rational to_rational() const;

    // Same element with conductor m; conductor() must divide m.
    CycloNumber embed(long m) const;
    CycloNumber conj() const;
    CycloNumber inverse() const;
    // Value under zeta_n -> exp(2 pi i k / n).
    std::complex<double> to_complex(long k = 1) const;

    CycloNumber operator-() const;
    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);
    CycloNumber& operator/=(const CycloNumber& rhs);

    friend CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator/(const CycloNumber& a, const CycloNumber& b);
    friend bool operator==(const CycloNumber& a, const CycloNumber& b);

    std::string str() const;

  private:
    long conductor_ = 1;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycloNumber& x);

} // namespace twisthom
