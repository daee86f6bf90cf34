#include "twisthom/grp/group.hpp"

#include "twisthom/errors.hpp"

namespace twisthom {

GroupPresentation::GroupPresentation(int num_generators, std::vector<Word> relators)
    : num_generators_(num_generators), relators_(std::move(relators)) {
    if (num_generators < 0) throw InputError("negative generator count");
    for (size_t i = 0; i < relators_.size(); ++i) {
        if (relators_[i].empty()) throw InputError("relator " + std::to_string(i + 1) + " is empty after free reduction");
        check_word(relators_[i]);
    }
}

void GroupPresentation::check_word(const Word& w) const {
    if (w.generator_bound() > num_generators_)
        throw InputError("word " + w.str() + " uses generator " + std::to_string(w.generator_bound()) +
                         " but the group has " + std::to_string(num_generators_));
}

std::string GroupPresentation::str() const {
    std::string s = "<" + std::to_string(num_generators_) + " generators |";
    for (size_t i = 0; i < relators_.size(); ++i) s += (i ? ", " : " ") + relators_[i].str();
    return s + ">";
}

GroupPresentation free_product(const GroupPresentation& p1, const GroupPresentation& p2) {
    std::vector<Word> rels = p1.relators();
    for (const auto& r : p2.relators()) rels.push_back(r.shifted(p1.num_generators()));
    return GroupPresentation(p1.num_generators() + p2.num_generators(), std::move(rels));
}

long IntGrading::weight(const Word& w) const {
    long s = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        Letter l = w.letter(i);
        if (static_cast<size_t>(l.gen) >= images.size()) throw InputError("grading has no image for generator " + std::to_string(l.gen + 1));
        s += l.exp * images[static_cast<size_t>(l.gen)];
    }
    return s;
}

bool verify_grading(const GroupPresentation& p, const IntGrading& phi) {
    if (phi.images.size() != static_cast<size_t>(p.num_generators())) return false;
    for (const auto& r : p.relators())
        if (phi.weight(r) != 0) return false;
    return true;
}

Matrix<Integer> relator_matrix(const GroupPresentation& p) {
    Matrix<Integer> r(p.relators().size(), static_cast<size_t>(p.num_generators()));
    for (size_t i = 0; i < p.relators().size(); ++i)
        for (size_t k = 0; k < p.relators()[i].size(); ++k) {
            Letter l = p.relators()[i].letter(k);
            r(i, static_cast<size_t>(l.gen)) += Integer(l.exp);
        }
    return r;
}

Abelianization abelianization(const GroupPresentation& p) {
    Abelianization ab;
    ab.snf = smith_normal_form_int(relator_matrix(p));
    int nonzero = 0;
    for (const auto& d : ab.snf.diagonal()) {
        if (d.is_zero()) continue;
        ++nonzero;
        if (!d.is_one()) ab.torsion.push_back(d);
    }
    ab.betti = p.num_generators() - nonzero;
    return ab;
}

} // namespace twisthom
