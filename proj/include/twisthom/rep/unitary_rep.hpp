#pragma once

#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/exactnum/matrix.hpp"
#include "twisthom/grp/group.hpp"

#include <optional>
#include <string>
#include <vector>

namespace twisthom {

using CycloMatrix = Matrix<CycloNumber>;

enum class RepProvenance { character, trivial, permutation, induced, explicit_images };

std::string provenance_name(RepProvenance p);
// Inverse of provenance_name; throws InputError.
RepProvenance parse_provenance(const std::string& s);

CycloMatrix conj_transpose(const CycloMatrix& m);

/**
 * Generator images of a representation over a cyclotomic field.
 *
 * The constructor checks shapes only; verify_rep checks unitarity and the
 * relators. The conductor is the lcm of `conductor` and every entry conductor.
 */
class UnitaryRep {
  public:
    UnitaryRep(GroupPresentation group, size_t dim, std::vector<CycloMatrix> images, RepProvenance provenance,
               long conductor = 1);

    const GroupPresentation& group() const noexcept { return group_; }
    size_t dim() const noexcept { return dim_; }
    long conductor() const noexcept { return conductor_; }
    const std::vector<CycloMatrix>& generator_images() const noexcept { return images_; }
    const CycloMatrix& image(int gen) const { return images_.at(static_cast<size_t>(gen)); }
    RepProvenance provenance() const noexcept { return provenance_; }

  private:
    GroupPresentation group_;
    size_t dim_;
    std::vector<CycloMatrix> images_;
    RepProvenance provenance_;
    long conductor_;
};

// Invertible generator images with their inverses; need not be unitary.
struct LinearRep {
    size_t dim = 0;
    std::vector<CycloMatrix> images, inverses;
};

LinearRep linear_rep(const UnitaryRep& r);

/**
 * Evaluates words in a LinearRep. When every image is monomial (one nonzero
 * per row and column) products are formed in monomial form.
 */
class WordEvaluator {
  public:
    explicit WordEvaluator(LinearRep rep);
    size_t dim() const noexcept { return rep_.dim; }
    int num_generators() const noexcept { return static_cast<int>(rep_.images.size()); }
    // Throws InputError for a generator outside the representation.
    CycloMatrix operator()(const Word& w) const;

  private:
    struct Monomial {
        std::vector<size_t> col;  // row i is nonzero only in column col[i]
        std::vector<CycloNumber> val;
    };
    static std::optional<Monomial> as_monomial(const CycloMatrix& m);

    LinearRep rep_;
    std::vector<Monomial> mono_, mono_inv_;
    bool monomial_ = false;
};

// Ordered product of generator images, using conjugate transposes for inverses.
CycloMatrix evaluate_word(const UnitaryRep& r, const Word& w);

// True iff every image is exactly unitary and every relator maps to I.
bool verify_rep(const UnitaryRep& r);

} // namespace twisthom
