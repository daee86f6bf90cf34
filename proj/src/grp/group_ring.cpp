#include "twisthom/grp/group_ring.hpp"

#include <algorithm>

namespace twisthom {

GroupRingElement::GroupRingElement(Integer n) {
    if (!n.is_zero()) terms_.emplace(Word(), std::move(n));
}

GroupRingElement::GroupRingElement(const Word& w, Integer coeff) {
    if (!coeff.is_zero()) terms_.emplace(w, std::move(coeff));
}

void GroupRingElement::add_term(const Word& w, const Integer& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int GroupRingElement::generator_bound() const noexcept {
    int m = 0;
    for (const auto& [w, c] : terms_) m = std::max(m, w.generator_bound());
    return m;
}

GroupRingElement GroupRingElement::bar() const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.add_term(w.inverse(), c);
    return out;
}

GroupRingElement GroupRingElement::shifted(int offset) const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.add_term(w.shifted(offset), c);
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out = *this;
    for (auto& [w, c] : out.terms_) c = -c;
    return out;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& rhs) {
    for (const auto& [w, c] : rhs.terms_) add_term(w, -c);
    return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    GroupRingElement out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
    return out;
}

GroupRingElement& GroupRingElement::operator*=(const GroupRingElement& rhs) { return *this = *this * rhs; }

std::string GroupRingElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        bool neg = c.sign() < 0;
        Integer mag = abs(c);
        if (s.empty()) s += neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (w.empty()) {
            s += mag.str();
        } else {
            if (!mag.is_one()) s += mag.str() + "*";
            s += w.str();
        }
    }
    return s;
}

} // namespace twisthom
