#include "twisthom/exactnum/cyclotomic.hpp"

#include "twisthom/errors.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>

namespace twisthom {

long euler_phi(long n) {
    if (n < 1) throw InputError("euler_phi needs n >= 1");
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

namespace {

struct CycloData {
    LaurentPoly poly;
    // Coefficients of Phi_n in increasing degree, length phi(n) + 1, monic.
    std::vector<Rational> coeffs;
};

const CycloData& cyclo_data(long n) {
    static std::mutex mu;
    static std::map<long, CycloData> cache;
    thread_local long last_n = 0;
    thread_local const CycloData* last = nullptr;
    if (n == last_n && last) return *last;
    if (n < 1) throw InputError("cyclotomic polynomial needs n >= 1, got " + std::to_string(n));

    std::unique_lock lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) {
        lock.unlock();
        LaurentPoly p = LaurentPoly::monomial(Rational(1), n) - LaurentPoly(1);
        for (long d = 1; d < n; ++d)
            if (n % d == 0) p = exact_div(p, cyclo_data(d).poly);
        CycloData data{p, p.coeffs()};
        lock.lock();
        it = cache.emplace(n, std::move(data)).first;
    }
    last_n = n;
    last = &it->second;
    return it->second;
}

// Reduce a polynomial in zeta (increasing degree) modulo Phi_n in place.
void reduce_mod_phi(std::vector<Rational>& p, long n) {
    const auto& phi = cyclo_data(n).coeffs;
    const size_t d = phi.size() - 1;
    for (size_t k = p.size(); k-- > d;) {
        if (p[k].is_zero()) continue;
        Rational c = p[k];
        for (size_t j = 0; j < d; ++j)
            if (!phi[j].is_zero()) p[k - d + j] -= c * phi[j];
        p[k] = Rational();
    }
    p.resize(d);
}

// Substitute zeta_n = zeta_m^step.
std::vector<Rational> spread(const std::vector<Rational>& c, long step) {
    std::vector<Rational> out(static_cast<size_t>((static_cast<long>(c.size()) - 1) * step + 1));
    for (size_t i = 0; i < c.size(); ++i) out[i * static_cast<size_t>(step)] = c[i];
    return out;
}

bool rational_coeffs(const std::vector<Rational>& c) {
    for (size_t i = 1; i < c.size(); ++i)
        if (!c[i].is_zero()) return false;
    return true;
}

} // namespace

LaurentPoly cyclotomic_polynomial(long n) { return cyclo_data(n).poly; }

CycloNumber::CycloNumber(long conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (conductor < 1) throw InputError("conductor must be positive");
    size_t d = static_cast<size_t>(euler_phi(conductor));
    if (coeffs_.size() < d) coeffs_.resize(d);
    else if (coeffs_.size() > d) reduce_mod_phi(coeffs_, conductor);
}

CycloNumber CycloNumber::root_of_unity(long n, long a) {
    if (n < 1) throw InputError("root of unity order must be positive");
    long e = ((a % n) + n) % n;
    std::vector<Rational> c(static_cast<size_t>(e + 1));
    c[static_cast<size_t>(e)] = Rational(1);
    return CycloNumber(n, std::move(c));
}

bool CycloNumber::is_zero() const noexcept {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycloNumber::is_rational() const noexcept { return rational_coeffs(coeffs_); }

bool CycloNumber::is_one() const noexcept { return coeffs_[0].is_one() && is_rational(); }

Rational CycloNumber::to_rational() const {
    if (!is_rational()) throw InputError("cyclotomic number " + str() + " is not rational");
    return coeffs_[0];
}

CycloNumber CycloNumber::embed(long m) const {
    if (m < 1 || m % conductor_ != 0)
        throw InputError("cannot embed conductor " + std::to_string(conductor_) + " into " + std::to_string(m));
    if (m == conductor_) return *this;
    CycloNumber out;
    out.conductor_ = m;
    if (is_rational()) {
        out.coeffs_.assign(static_cast<size_t>(euler_phi(m)), Rational());
        out.coeffs_[0] = coeffs_[0];
        return out;
    }
    out.coeffs_ = spread(coeffs_, m / conductor_);
    reduce_mod_phi(out.coeffs_, m);
    return out;
}

CycloNumber CycloNumber::conj() const {
    if (is_rational()) return *this;
    std::vector<Rational> c(static_cast<size_t>(conductor_));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        c[(static_cast<size_t>(conductor_) - i) % static_cast<size_t>(conductor_)] += coeffs_[i];
    }
    return CycloNumber(conductor_, std::move(c));
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw InputError("inverse of zero in a cyclotomic field");
    if (is_rational()) {
        CycloNumber out = *this;
        out.coeffs_[0] = coeffs_[0].reciprocal();
        return out;
    }
    // Solve M x = e_0 where column j of M holds the coefficients of a * zeta^j.
    const size_t d = coeffs_.size();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    CycloNumber col = *this;
    CycloNumber z = root_of_unity(conductor_, 1);
    for (size_t j = 0; j < d; ++j) {
        for (size_t i = 0; i < d; ++i) m[i][j] = col.coeffs_[i];
        col *= z;
    }
    m[0][d] = Rational(1);
    for (size_t c = 0; c < d; ++c) {
        size_t p = c;
        while (p < d && m[p][c].is_zero()) ++p;
        if (p == d) throw InternalError("singular multiplication matrix in cyclotomic inverse");
        std::swap(m[p], m[c]);
        Rational inv = m[c][c].reciprocal();
        for (size_t j = c; j <= d; ++j) m[c][j] *= inv;
        for (size_t i = 0; i < d; ++i) {
            if (i == c || m[i][c].is_zero()) continue;
            Rational f = m[i][c];
            for (size_t j = c; j <= d; ++j)
                if (!m[c][j].is_zero()) m[i][j] -= f * m[c][j];
        }
    }
    std::vector<Rational> x(d);
    for (size_t i = 0; i < d; ++i) x[i] = m[i][d];
    return CycloNumber(conductor_, std::move(x));
}

std::complex<double> CycloNumber::to_complex(long k) const {
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>(k) * static_cast<double>(i) /
                       static_cast<double>(conductor_);
        acc += coeffs_[i].to_double() * std::polar(1.0, angle);
    }
    return acc;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

long common_conductor(const CycloNumber& a, const CycloNumber& b) {
    return std::lcm(a.conductor(), b.conductor());
}

} // namespace

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    long m = common_conductor(a, b);
    CycloNumber x = a.conductor_ == m ? a : a.embed(m);
    if (b.conductor_ == m) {
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += b.coeffs_[i];
    } else {
        CycloNumber y = b.embed(m);
        for (size_t i = 0; i < x.coeffs_.size(); ++i) x.coeffs_[i] += y.coeffs_[i];
    }
    return x;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) { return a + (-b); }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    long m = common_conductor(a, b);
    const bool ra = a.is_rational();
    const bool rb = b.is_rational();
    if (ra || rb) {
        const Rational& s = ra ? a.coeffs_[0] : b.coeffs_[0];
        CycloNumber x = ra ? b : a;
        if (x.conductor_ != m) x = x.embed(m);
        if (s.is_zero()) {
            for (auto& c : x.coeffs_) c = Rational();
        } else if (!s.is_one()) {
            for (auto& c : x.coeffs_)
                if (!c.is_zero()) c *= s;
        }
        return x;
    }
    CycloNumber x = a.conductor_ == m ? a : a.embed(m);
    CycloNumber y = b.conductor_ == m ? b : b.embed(m);
    const size_t d = x.coeffs_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (x.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j)
            if (!y.coeffs_[j].is_zero()) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
    reduce_mod_phi(prod, m);
    x.coeffs_ = std::move(prod);
    return x;
}

CycloNumber operator/(const CycloNumber& a, const CycloNumber& b) { return a * b.inverse(); }

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) { return *this = *this + rhs; }
CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) { return *this = *this - rhs; }
CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) { return *this = *this * rhs; }
CycloNumber& CycloNumber::operator/=(const CycloNumber& rhs) { return *this = *this / rhs; }

bool operator==(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
    if (a.is_rational() && b.is_rational()) return a.coeffs_[0] == b.coeffs_[0];
    long m = std::lcm(a.conductor_, b.conductor_);
    return a.embed(m).coeffs_ == b.embed(m).coeffs_;
}

std::string CycloNumber::str() const {
    if (is_rational()) return coeffs_[0].str();
    std::string out;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += mag.str();
            continue;
        }
        if (!mag.is_one()) out += mag.str() + "*";
        out += "z" + std::to_string(conductor_);
        if (i != 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const CycloNumber& x) { return os << x.str(); }

} // namespace twisthom
