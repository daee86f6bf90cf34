#include "twisthom/grp/word.hpp"

#include "twisthom/errors.hpp"

#include <algorithm>
#include <cstdlib>

namespace twisthom {

Word free_reduce(const std::vector<int>& codes) {
    Word w;
    std::vector<int> out;
    out.reserve(codes.size());
    for (int c : codes) {
        if (c == 0) throw InputError("word letter 0 is not a generator (letters are signed and 1-based)");
        if (!out.empty() && out.back() == -c) out.pop_back();
        else out.push_back(c);
    }
    w.codes_ = std::move(out);
    return w;
}

Word::Word(std::initializer_list<int> codes) : Word(std::vector<int>(codes)) {}

Word::Word(std::vector<int> codes) { *this = free_reduce(codes); }

Word Word::generator(int gen, int exp) {
    if (gen < 0) throw InputError("negative generator index");
    if (exp != 1 && exp != -1) throw InputError("letter exponent must be +1 or -1");
    Word w;
    w.codes_.push_back(exp * (gen + 1));
    return w;
}

int Word::generator_bound() const noexcept {
    int m = 0;
    for (int c : codes_) m = std::max(m, std::abs(c));
    return m;
}

Word Word::inverse() const {
    Word w;
    w.codes_.reserve(codes_.size());
    for (auto it = codes_.rbegin(); it != codes_.rend(); ++it) w.codes_.push_back(-*it);
    return w;
}

Word Word::power(long k) const {
    Word base = k < 0 ? inverse() : *this;
    Word out;
    for (long i = 0; i < std::labs(k); ++i) out *= base;
    return out;
}

Word Word::shifted(int offset) const {
    Word w = *this;
    for (int& c : w.codes_) c = c > 0 ? c + offset : c - offset;
    return w;
}

long Word::exponent_sum(int gen) const {
    long s = 0;
    for (int c : codes_)
        if (std::abs(c) == gen + 1) s += c > 0 ? 1 : -1;
    return s;
}

Word operator*(const Word& a, const Word& b) {
    size_t cancel = 0;
    while (cancel < a.size() && cancel < b.size() && a.codes_[a.size() - 1 - cancel] == -b.codes_[cancel]) ++cancel;
    Word w;
    w.codes_.reserve(a.size() + b.size() - 2 * cancel);
    w.codes_.insert(w.codes_.end(), a.codes_.begin(), a.codes_.end() - static_cast<long>(cancel));
    w.codes_.insert(w.codes_.end(), b.codes_.begin() + static_cast<long>(cancel), b.codes_.end());
    return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) noexcept {
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.codes_ <=> b.codes_;
}

std::string Word::str() const {
    if (codes_.empty()) return "1";
    std::string s;
    for (int c : codes_) {
        int g = std::abs(c) - 1;
        if (g < 26) {
            s += static_cast<char>((c > 0 ? 'a' : 'A') + g);
        } else {
            s += (c > 0 ? "x" : "X") + std::to_string(g);
        }
    }
    return s;
}

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

} // namespace twisthom
