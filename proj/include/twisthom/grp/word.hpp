#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace twisthom {

struct Letter {
    int gen;  // 0-based generator index
    int exp;  // +1 or -1
};

/**
 * Freely reduced word in a free group.
 *
 * Letters are stored as signed 1-based codes (+(g+1) for x_g, -(g+1) for its
 * inverse), the same encoding the JSON format uses. Every constructor and
 * operation returns a reduced word.
 */
class Word {
  public:
    Word() = default;
    // Signed 1-based codes; reduced on construction. Zero codes are rejected.
    Word(std::initializer_list<int> codes);
    explicit Word(std::vector<int> codes);
    static Word generator(int gen, int exp = 1);

    size_t size() const noexcept { return codes_.size(); }
    bool empty() const noexcept { return codes_.empty(); }
    int code(size_t i) const { return codes_[i]; }
    Letter letter(size_t i) const {
        int c = codes_[i];
        return {c > 0 ? c - 1 : -c - 1, c > 0 ? 1 : -1};
    }
    const std::vector<int>& codes() const noexcept { return codes_; }
    // Largest generator index used plus one (0 for the empty word).
    int generator_bound() const noexcept;

    Word inverse() const;
    Word power(long k) const;
    // Generators shifted by offset (free-product embedding).
    Word shifted(int offset) const;
    // Exponent sum of generator gen.
    long exponent_sum(int gen) const;

    friend Word operator*(const Word& a, const Word& b);
    Word& operator*=(const Word& b) { return *this = *this * b; }

    friend bool operator==(const Word& a, const Word& b) noexcept = default;
    // Shortlex: length first, then codes.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept;

    // Generators named a, b, c, ... (x0, x1, ... past z); inverses as A, B, ...
    std::string str() const;

  private:
    friend Word free_reduce(const std::vector<int>& codes);

    std::vector<int> codes_;
};

// Free reduction of an arbitrary code sequence.
Word free_reduce(const std::vector<int>& codes);

// [a, b] = a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);

} // namespace twisthom
