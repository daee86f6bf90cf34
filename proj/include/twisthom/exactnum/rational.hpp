#pragma once

#include "twisthom/exactnum/integer.hpp"

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twisthom {

// Exact rational number in lowest terms with a positive denominator; zero is 0/1.
class Rational {
  public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : num_(v) {}
    Rational(long long v) : num_(v) {}
    Rational(Integer v) : num_(std::move(v)) {}
    Rational(Integer num, Integer den);

    // Accepts "a/b" or "a" with optional leading sign.
    static Rational parse(std::string_view text);

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const noexcept { return num_.is_one() && den_.is_one(); }
    bool is_integer() const noexcept { return den_.is_one(); }
    int sign() const noexcept { return num_.sign(); }
    double to_double() const;
    // "a" when the denominator is 1, otherwise "a/b".
    std::string str() const;

    Rational operator-() const;
    Rational reciprocal() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  private:
    void normalize();

    Integer num_;
    Integer den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

} // namespace twisthom
