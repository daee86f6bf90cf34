#pragma once

#include "twisthom/chain/catalog.hpp"
#include "twisthom/chain/complex.hpp"
#include "twisthom/rep/split.hpp"
#include "twisthom/rep/unitary_rep.hpp"

#include <vector>

namespace twisthom {

struct BlockComplex {
    std::vector<long> dims;               // rank_k * representation dimension
    std::vector<CycloMatrix> boundaries;  // boundaries[k - 1] maps degree k to k - 1
};

struct HomologyReport {
    std::vector<long> dims;
    long euler = 0;
    bool acyclic = true;

    static HomologyReport from_dims(std::vector<long> dims);
    friend bool operator==(const HomologyReport&, const HomologyReport&) = default;
};

// Sum of n_j a(w_j) for an element sum n_j w_j.
CycloMatrix evaluate_element(const WordEvaluator& eval, const GroupRingElement& e);

/**
 * Replaces each group-ring entry by its image under the representation. The
 * complex must be over the representation's group (GroupMismatch otherwise)
 * and the representation must pass verify_rep (InputError). Consecutive
 * products are checked to vanish; BoundaryError if not.
 */
BlockComplex specialize(const EquivariantComplex& c, const UnitaryRep& r);
// Same for arbitrary invertible images; only the generator count is checked.
BlockComplex specialize(const EquivariantComplex& c, const LinearRep& r);

// True iff every specialized product d_{k-1} d_k is zero. GroupMismatch and
// InputError as for specialize.
bool validate_complex(const EquivariantComplex& c, const UnitaryRep& r);

// dims_k = dim C_k - rank d_k - rank d_{k+1}.
HomologyReport homology_dims(const BlockComplex& b);

inline HomologyReport twisted_homology(const EquivariantComplex& c, const UnitaryRep& r) {
    return homology_dims(specialize(c, r));
}

// dim V - rank of the matrices a(g) - I placed side by side.
long coinvariants_h0(const GroupPresentation& p, const UnitaryRep& r);

struct ShapiroResult {
    std::vector<long> dims_cover, dims_induced;
    bool agree() const { return dims_cover == dims_induced; }
};

// Homology of the cover for the stabilizer of `a` with coefficients in the
// subgroup representation, against the base with the induced representation.
ShapiroResult shapiro_compare(const EquivariantComplex& c, const PermAction& a,
                              const std::vector<CycloMatrix>& sub_images, size_t sub_dim);

struct SubquotientResult {
    std::vector<long> dims_w, dims_v, dims_wperp;
    bool euler_additive = false;
    // dims_v[i] <= dims_w[i] + dims_wperp[i] for every degree.
    bool exactness_bounds = false;
    bool ok() const { return euler_additive && exactness_bounds; }
};

// Throws InputError if `s` does not split r.
SubquotientResult subquotient_dims(const EquivariantComplex& c, const UnitaryRep& r, const SplitData& s);

/**
 * Twisted homology of N1 # N2 for the representation pulled back from N1,
 * which equals that of N1 when N2 is a rational homology sphere. Throws
 * InputError when c2's trivial dims are not (1,0,0,1), GroupMismatch when r1
 * is not a representation of c1's group, and InternalError when degrees 0 and
 * 1 disagree with the presentation complex of the free product.
 */
HomologyReport connected_sum_dims(const CatalogEntry& c1, const UnitaryRep& r1, const CatalogEntry& c2);

} // namespace twisthom
