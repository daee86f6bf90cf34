#include "twisthom/exactnum/integer.hpp"

#include "twisthom/errors.hpp"

#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

namespace twisthom {

// Read-only mpz view of an Integer; materializes a temporary for small values.
class MpzRef {
  public:
    explicit MpzRef(const Integer& x) {
        if (x.big_) {
            ptr_ = x.big_;
        } else {
            mpz_init_set_si(tmp_, x.small_);
            ptr_ = tmp_;
            owned_ = true;
        }
    }
    ~MpzRef() {
        if (owned_) mpz_clear(tmp_);
    }
    MpzRef(const MpzRef&) = delete;
    MpzRef& operator=(const MpzRef&) = delete;
    mpz_srcptr get() const { return ptr_; }

  private:
    mpz_t tmp_;
    mpz_srcptr ptr_ = nullptr;
    bool owned_ = false;
};

namespace {

mpz_ptr new_mpz() {
    auto* z = new __mpz_struct;
    mpz_init(z);
    return z;
}

void delete_mpz(mpz_ptr z) {
    mpz_clear(z);
    delete z;
}

} // namespace

Integer::Integer(std::string_view decimal) {
    std::string s(decimal);
    mpz_ptr z = new_mpz();
    if (s.empty() || mpz_set_str(z, s.c_str(), 10) != 0) {
        delete_mpz(z);
        throw InputError("invalid integer literal '" + s + "'");
    }
    *this = adopt(z);
}

Integer::Integer(const Integer& other) : small_(other.small_) {
    if (other.big_) {
        big_ = new_mpz();
        mpz_set(big_, other.big_);
    }
}

Integer& Integer::operator=(const Integer& other) {
    if (this == &other) return *this;
    if (other.big_) {
        if (!big_) big_ = new_mpz();
        mpz_set(big_, other.big_);
        small_ = 0;
    } else {
        release();
        small_ = other.small_;
    }
    return *this;
}

Integer& Integer::operator=(Integer&& other) noexcept {
    if (this == &other) return *this;
    release();
    small_ = other.small_;
    big_ = other.big_;
    other.big_ = nullptr;
    other.small_ = 0;
    return *this;
}

Integer::~Integer() { release(); }

void Integer::release() noexcept {
    if (big_) {
        delete_mpz(big_);
        big_ = nullptr;
    }
}

Integer Integer::adopt(mpz_ptr z) {
    Integer out;
    if (mpz_fits_slong_p(z)) {
        out.small_ = mpz_get_si(z);
        delete_mpz(z);
    } else {
        out.big_ = z;
    }
    return out;
}

int Integer::sign() const noexcept {
    if (big_) return mpz_sgn(big_);
    return (small_ > 0) - (small_ < 0);
}

int64_t Integer::to_int64() const {
    if (big_) throw InputError("integer " + str() + " does not fit in 64 bits");
    return small_;
}

double Integer::to_double() const {
    if (big_) return mpz_get_d(big_);
    return static_cast<double>(small_);
}

std::string Integer::str() const {
    if (!big_) return std::to_string(small_);
    char* raw = mpz_get_str(nullptr, 10, big_);
    std::string s(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

Integer Integer::operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(-small_);
    mpz_ptr z = new_mpz();
    MpzRef a(*this);
    mpz_neg(z, a.get());
    return adopt(z);
}

Integer operator+(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_add_overflow(a.small_, b.small_, &r)) return Integer(r);
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_add(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer operator-(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_sub_overflow(a.small_, b.small_, &r)) return Integer(r);
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_sub(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer operator*(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) {
        long long r;
        if (!__builtin_mul_overflow(a.small_, b.small_, &r)) return Integer(r);
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_mul(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer& Integer::operator+=(const Integer& rhs) { return *this = *this + rhs; }
Integer& Integer::operator-=(const Integer& rhs) { return *this = *this - rhs; }
Integer& Integer::operator*=(const Integer& rhs) { return *this = *this * rhs; }

void tdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r) {
    if (b.is_zero()) throw InputError("integer division by zero");
    if (!a.big_ && !b.big_ &&
        !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
        int64_t qq = a.small_ / b.small_;
        int64_t rr = a.small_ % b.small_;
        q = Integer(static_cast<long long>(qq));
        r = Integer(static_cast<long long>(rr));
        return;
    }
    mpz_ptr zq = new_mpz();
    mpz_ptr zr = new_mpz();
    {
        MpzRef x(a), y(b);
        mpz_tdiv_qr(zq, zr, x.get(), y.get());
    }
    q = Integer::adopt(zq);
    r = Integer::adopt(zr);
}

Integer mod_floor(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw InputError("integer modulus by zero");
    if (!a.big_ && !b.big_ && b.small_ != std::numeric_limits<int64_t>::min()) {
        int64_t m = b.small_ < 0 ? -b.small_ : b.small_;
        int64_t r = a.small_ % m;
        if (r < 0) r += m;
        return Integer(static_cast<long long>(r));
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_mod(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw InputError("integer division by zero");
    if (!a.big_ && !b.big_ &&
        !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
        return Integer(static_cast<long long>(a.small_ / b.small_));
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_divexact(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) {
        auto uabs = [](int64_t v) {
            return v < 0 ? uint64_t{0} - static_cast<uint64_t>(v) : static_cast<uint64_t>(v);
        };
        uint64_t g = std::gcd(uabs(a.small_), uabs(b.small_));
        if (g <= static_cast<uint64_t>(std::numeric_limits<int64_t>::max()))
            return Integer(static_cast<long long>(g));
    }
    mpz_ptr z = new_mpz();
    MpzRef x(a), y(b);
    mpz_gcd(z, x.get(), y.get());
    return Integer::adopt(z);
}

Integer lcm(const Integer& a, const Integer& b) {
    if (a.is_zero() || b.is_zero()) return Integer(0);
    return abs(divexact(a, gcd(a, b)) * b);
}

Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

bool operator==(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return mpz_cmp(a.big_, b.big_) == 0;
    return false; // representation is unique
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c;
    if (a.big_ && b.big_) {
        c = mpz_cmp(a.big_, b.big_);
    } else if (a.big_) {
        c = mpz_cmp_si(a.big_, b.small_);
    } else {
        c = -mpz_cmp_si(b.big_, a.small_);
    }
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& x) { return os << x.str(); }

} // namespace twisthom
