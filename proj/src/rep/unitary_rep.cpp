#include "twisthom/rep/unitary_rep.hpp"

#include "twisthom/errors.hpp"

#include <cstdlib>

namespace twisthom {

std::string provenance_name(RepProvenance p) {
    switch (p) {
        case RepProvenance::character: return "character";
        case RepProvenance::trivial: return "trivial";
        case RepProvenance::permutation: return "permutation";
        case RepProvenance::induced: return "induced";
        case RepProvenance::explicit_images: return "explicit";
    }
    return "explicit";
}

RepProvenance parse_provenance(const std::string& s) {
    for (auto p : {RepProvenance::character, RepProvenance::trivial, RepProvenance::permutation,
                   RepProvenance::induced, RepProvenance::explicit_images})
        if (provenance_name(p) == s) return p;
    throw InputError("unknown representation provenance '" + s + "'");
}

CycloMatrix conj_transpose(const CycloMatrix& m) {
    CycloMatrix out(m.cols(), m.rows());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) out(j, i) = m(i, j).conj();
    return out;
}

UnitaryRep::UnitaryRep(GroupPresentation group, size_t dim, std::vector<CycloMatrix> images, RepProvenance provenance,
                       long conductor)
    : group_(std::move(group)), dim_(dim), images_(std::move(images)), provenance_(provenance), conductor_(conductor) {
    if (dim_ == 0) throw InputError("representation dimension must be at least 1");
    if (conductor_ < 1) throw InputError("conductor must be positive");
    if (images_.size() != static_cast<size_t>(group_.num_generators()))
        throw InputError("representation has " + std::to_string(images_.size()) + " generator images, group has " +
                         std::to_string(group_.num_generators()) + " generators");
    for (size_t g = 0; g < images_.size(); ++g) {
        if (images_[g].rows() != dim_ || images_[g].cols() != dim_)
            throw InputError("image of generator " + std::to_string(g) + " is not " + std::to_string(dim_) + "x" +
                             std::to_string(dim_));
        for (const auto& e : images_[g].data()) conductor_ = lcm_long(conductor_, e.conductor());
    }
}

LinearRep linear_rep(const UnitaryRep& r) {
    LinearRep out;
    out.dim = r.dim();
    out.images = r.generator_images();
    for (const auto& m : out.images) out.inverses.push_back(conj_transpose(m));
    return out;
}

std::optional<WordEvaluator::Monomial> WordEvaluator::as_monomial(const CycloMatrix& m) {
    Monomial out;
    std::vector<bool> used(m.cols(), false);
    for (size_t i = 0; i < m.rows(); ++i) {
        size_t found = m.cols();
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            if (found != m.cols() || used[j]) return std::nullopt;
            found = j;
        }
        if (found == m.cols()) return std::nullopt;
        used[found] = true;
        out.col.push_back(found);
        out.val.push_back(m(i, found));
    }
    return out;
}

WordEvaluator::WordEvaluator(LinearRep rep) : rep_(std::move(rep)) {
    if (rep_.images.size() != rep_.inverses.size()) throw InputError("every generator image needs an inverse");
    monomial_ = true;
    for (size_t g = 0; g < rep_.images.size() && monomial_; ++g) {
        auto a = as_monomial(rep_.images[g]), b = as_monomial(rep_.inverses[g]);
        if (!a || !b) {
            monomial_ = false;
            break;
        }
        mono_.push_back(std::move(*a));
        mono_inv_.push_back(std::move(*b));
    }
}

CycloMatrix WordEvaluator::operator()(const Word& w) const {
    if (w.generator_bound() > num_generators())
        throw InputError("word " + w.str() + " uses a generator outside the representation");
    const size_t n = rep_.dim;
    if (monomial_) {
        Monomial acc;
        for (size_t i = 0; i < n; ++i) {
            acc.col.push_back(i);
            acc.val.emplace_back(1);
        }
        for (size_t k = 0; k < w.size(); ++k) {
            Letter l = w.letter(k);
            const auto& table = l.exp > 0 ? mono_ : mono_inv_;
            const Monomial& m = table[static_cast<size_t>(l.gen)];
            for (int e = 0; e < std::abs(l.exp); ++e)
                for (size_t i = 0; i < n; ++i) {
                    size_t c = acc.col[i];
                    acc.val[i] *= m.val[c];
                    acc.col[i] = m.col[c];
                }
        }
        CycloMatrix out(n, n);
        for (size_t i = 0; i < n; ++i) out(i, acc.col[i]) = acc.val[i];
        return out;
    }
    CycloMatrix acc = CycloMatrix::identity(n);
    for (size_t k = 0; k < w.size(); ++k) {
        Letter l = w.letter(k);
        const CycloMatrix& m = (l.exp > 0 ? rep_.images : rep_.inverses)[static_cast<size_t>(l.gen)];
        for (int e = 0; e < std::abs(l.exp); ++e) acc = acc * m;
    }
    return acc;
}

CycloMatrix evaluate_word(const UnitaryRep& r, const Word& w) { return WordEvaluator(linear_rep(r))(w); }

bool verify_rep(const UnitaryRep& r) {
    const CycloMatrix id = CycloMatrix::identity(r.dim());
    for (const auto& m : r.generator_images())
        if (!(conj_transpose(m) * m == id)) return false;
    if (r.group().num_generators() != static_cast<int>(r.generator_images().size())) return false;
    WordEvaluator eval(linear_rep(r));
    for (const auto& rel : r.group().relators())
        if (!(eval(rel) == id)) return false;
    return true;
}

} // namespace twisthom
