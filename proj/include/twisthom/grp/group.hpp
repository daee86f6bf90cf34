#pragma once

#include "twisthom/exactnum/integer.hpp"
#include "twisthom/exactnum/matrix.hpp"
#include "twisthom/exactnum/normal_form.hpp"
#include "twisthom/grp/word.hpp"

#include <string>
#include <vector>

namespace twisthom {

class GroupPresentation {
  public:
    GroupPresentation() = default;
    // Throws InputError if a relator is empty or uses an out-of-range generator.
    GroupPresentation(int num_generators, std::vector<Word> relators);

    int num_generators() const noexcept { return num_generators_; }
    const std::vector<Word>& relators() const noexcept { return relators_; }
    // Throws InputError if w uses a generator this group does not have.
    void check_word(const Word& w) const;

    friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;

    std::string str() const;

  private:
    int num_generators_ = 0;
    std::vector<Word> relators_;
};

// Generators of p2 follow those of p1.
GroupPresentation free_product(const GroupPresentation& p1, const GroupPresentation& p2);

// Homomorphism to Z given by generator images.
struct IntGrading {
    std::vector<long> images;
    long weight(const Word& w) const;
};

// True iff every relator has total weight 0 (and the image count matches).
bool verify_grading(const GroupPresentation& p, const IntGrading& phi);

// Exponent-sum matrix: one row per relator, one column per generator.
Matrix<Integer> relator_matrix(const GroupPresentation& p);

struct Abelianization {
    int betti = 0;
    // Invariant factors > 1 in divisibility order.
    std::vector<Integer> torsion;
    // U R V = D for the relator matrix R.
    SmithForm<Integer> snf;
};

Abelianization abelianization(const GroupPresentation& p);

} // namespace twisthom
