#include "twisthom/exactnum/rational.hpp"

#include "twisthom/errors.hpp"

#include <ostream>

namespace twisthom {

Rational::Rational(Integer num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InputError("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (num_.is_zero()) {
        den_ = Integer(1);
        return;
    }
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.is_one()) return;
    Integer g = gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(Integer(text));
    Integer den(text.substr(slash + 1));
    if (den.is_zero()) throw InputError("rational literal '" + std::string(text) + "' has zero denominator");
    return Rational(Integer(text.substr(0, slash)), std::move(den));
}

double Rational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string Rational::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + "/" + den_.str();
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational Rational::reciprocal() const {
    if (num_.is_zero()) throw InputError("reciprocal of zero");
    return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ + b.num_);
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Rational(a.num_ + b.num_, a.den_);
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ - b.num_);
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Rational(a.num_ - b.num_, a.den_);
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return Rational();
    if (a.den_.is_one() && b.den_.is_one()) return Rational(a.num_ * b.num_);
    // cross-cancel keeps intermediates small
    Integer g1 = gcd(a.num_, b.den_);
    Integer g2 = gcd(b.num_, a.den_);
    Rational r;
    r.num_ = divexact(a.num_, g1) * divexact(b.num_, g2);
    r.den_ = divexact(a.den_, g2) * divexact(b.den_, g1);
    if (r.den_.sign() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw InputError("rational division by zero");
    return a * b.reciprocal();
}

Rational& Rational::operator+=(const Rational& rhs) { return *this = *this + rhs; }
Rational& Rational::operator-=(const Rational& rhs) { return *this = *this - rhs; }
Rational& Rational::operator*=(const Rational& rhs) { return *this = *this * rhs; }
Rational& Rational::operator/=(const Rational& rhs) { return *this = *this / rhs; }

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

} // namespace twisthom
