#pragma once

#include "twisthom/exactnum/integer.hpp"
#include "twisthom/grp/word.hpp"

#include <map>
#include <string>

namespace twisthom {

// Element of Z[F] for the free group F on the presentation's generators.
// Words are compared after free reduction only; no relator is ever applied.
class GroupRingElement {
  public:
    GroupRingElement() = default;
    GroupRingElement(int n) : GroupRingElement(Integer(n)) {}
    GroupRingElement(Integer n);
    GroupRingElement(const Word& w, Integer coeff = Integer(1));

    const std::map<Word, Integer>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    int generator_bound() const noexcept;

    // Z-linear extension of w -> w^-1.
    GroupRingElement bar() const;
    GroupRingElement shifted(int offset) const;

    GroupRingElement operator-() const;
    GroupRingElement& operator+=(const GroupRingElement& rhs);
    GroupRingElement& operator-=(const GroupRingElement& rhs);
    GroupRingElement& operator*=(const GroupRingElement& rhs);
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

    std::string str() const;

  private:
    void add_term(const Word& w, const Integer& c);

    std::map<Word, Integer> terms_;
};

} // namespace twisthom
