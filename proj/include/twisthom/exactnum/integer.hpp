#pragma once

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twisthom {

/**
 * Arbitrary-precision integer with a small-value fast path.
 *
 * Values that fit in int64_t live inline; anything larger is held in a heap
 * mpz_t. Results are demoted back to the inline form whenever they fit, so
 * the representation of a given value is unique.
 */
class Integer {
  public:
    Integer() noexcept = default;
    Integer(int v) noexcept : small_(v) {}
    Integer(long v) noexcept : small_(v) {}
    Integer(long long v) noexcept : small_(v) {}
    explicit Integer(std::string_view decimal);

    Integer(const Integer& other);
    Integer(Integer&& other) noexcept : small_(other.small_), big_(other.big_) {
        other.big_ = nullptr;
        other.small_ = 0;
    }
    Integer& operator=(const Integer& other);
    Integer& operator=(Integer&& other) noexcept;
    ~Integer();

    bool is_zero() const noexcept { return big_ == nullptr && small_ == 0; }
    bool is_one() const noexcept { return big_ == nullptr && small_ == 1; }
    int sign() const noexcept;
    bool fits_int64() const noexcept { return big_ == nullptr; }
    // Throws InputError when the value does not fit.
    int64_t to_int64() const;
    double to_double() const;
    std::string str() const;

    Integer operator-() const;
    Integer& operator+=(const Integer& rhs);
    Integer& operator-=(const Integer& rhs);
    Integer& operator*=(const Integer& rhs);

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);

    // Truncating division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    friend void tdiv_qr(const Integer& a, const Integer& b, Integer& q, Integer& r);
    // Floor modulus in [0, |b|).
    friend Integer mod_floor(const Integer& a, const Integer& b);
    // b must divide a.
    friend Integer divexact(const Integer& a, const Integer& b);
    friend Integer gcd(const Integer& a, const Integer& b);
    friend Integer lcm(const Integer& a, const Integer& b);
    friend Integer abs(const Integer& a);

    friend bool operator==(const Integer& a, const Integer& b) noexcept;
    friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept;

  private:
    // Takes ownership of an initialized mpz and normalizes.
    static Integer adopt(mpz_ptr z);
    void release() noexcept;

    friend class MpzRef;

    int64_t small_ = 0;
    mpz_ptr big_ = nullptr;
};

std::ostream& operator<<(std::ostream& os, const Integer& x);

} // namespace twisthom
