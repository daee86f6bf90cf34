#include "twisthom/exactnum/laurent_poly.hpp"

#include "twisthom/errors.hpp"

#include <algorithm>

namespace twisthom {

LaurentPoly::LaurentPoly(Rational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(Rational c, long exponent) {
    LaurentPoly p(std::move(c));
    if (!p.is_zero()) p.low_ = exponent;
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(long low, std::vector<Rational> coeffs) {
    LaurentPoly p;
    p.low_ = low;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<long, Rational>& terms) {
    LaurentPoly p;
    if (terms.empty()) return p;
    long lo = terms.begin()->first;
    long hi = terms.rbegin()->first;
    std::vector<Rational> c(static_cast<size_t>(hi - lo + 1));
    for (const auto& [e, v] : terms) c[static_cast<size_t>(e - lo)] += v;
    return from_coeffs(lo, std::move(c));
}

std::map<long, Rational> LaurentPoly::terms() const {
    std::map<long, Rational> out;
    for (size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) out.emplace(low_ + static_cast<long>(i), coeffs_[i]);
    return out;
}

void LaurentPoly::trim() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coeffs_.end()) {
        coeffs_.clear();
        low_ = 0;
        return;
    }
    low_ += static_cast<long>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LaurentPoly::coeff(long exponent) const {
    if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return Rational();
    return coeffs_[static_cast<size_t>(exponent - low_)];
}

const Rational& LaurentPoly::leading_coeff() const {
    if (coeffs_.empty()) throw InputError("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

LaurentPoly LaurentPoly::normalizing_unit() const {
    if (is_zero()) return LaurentPoly(1);
    return monomial(leading_coeff().reciprocal(), -low_);
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero()) return *this;
    LaurentPoly p;
    p.low_ = 0;
    p.coeffs_.reserve(coeffs_.size());
    Rational inv = leading_coeff().reciprocal();
    for (const auto& c : coeffs_) p.coeffs_.push_back(c * inv);
    return p;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

LaurentPoly LaurentPoly::unit_inverse() const {
    if (!is_unit()) throw InputError("polynomial " + str() + " is not a unit");
    return monomial(coeffs_[0].reciprocal(), -low_);
}

LaurentPoly LaurentPoly::inverted_variable() const {
    if (is_zero()) return *this;
    std::vector<Rational> c(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-high_degree(), std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    long lo = std::min(a.low_, b.low_);
    long hi = std::max(a.high_degree(), b.high_degree());
    std::vector<Rational> c(static_cast<size_t>(hi - lo + 1));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[static_cast<size_t>(a.low_ - lo) + i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[static_cast<size_t>(b.low_ - lo) + i] += b.coeffs_[i];
    return LaurentPoly::from_coeffs(lo, std::move(c));
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPoly::from_coeffs(a.low_ + b.low_, std::move(c));
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) { return *this = *this + rhs; }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this = *this - rhs; }
LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

std::string LaurentPoly::str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = high_degree(); e >= low_; --e) {
        Rational c = coeff(e);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool show_coeff = !(mag.is_one() && e != 0);
        if (show_coeff) out += mag.str();
        if (e != 0) {
            if (show_coeff) out += "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw InputError("polynomial division by zero");
    if (a.is_zero()) return {LaurentPoly(), LaurentPoly()};
    // Divide the valuation-free parts in Q[t], then restore the shifts.
    const auto& bc = b.coeffs();
    std::vector<Rational> rem = a.coeffs();
    const size_t db = bc.size() - 1;
    if (rem.size() - 1 < db) return {LaurentPoly(), a};
    std::vector<Rational> quot(rem.size() - db);
    Rational inv_lead = bc.back().reciprocal();
    for (size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) continue;
        Rational q = rem[k] * inv_lead;
        for (size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * bc[j];
        quot[k - db] = std::move(q);
    }
    rem.resize(db);
    return {LaurentPoly::from_coeffs(a.low_degree() - b.low_degree(), std::move(quot)),
            LaurentPoly::from_coeffs(a.low_degree(), std::move(rem))};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw InputError("polynomial " + b.str() + " does not divide " + a.str());
    return q;
}

bool divides(const LaurentPoly& d, const LaurentPoly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).second.is_zero();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.normalized();
}

} // namespace twisthom
