#pragma once

#include "twisthom/rep/unitary_rep.hpp"

namespace twisthom {

struct SplitData {
    CycloMatrix w_basis;      // columns span W = span{a(g) v - v}
    CycloMatrix wperp_basis;  // columns span the hermitian complement of W
};

/**
 * W is the column span of the matrices a(g) - I over all generators, W^perp
 * the kernel of conj-transpose of a basis of W. Checks that W is invariant and
 * that every generator fixes W^perp pointwise (InternalError otherwise).
 * Throws InputError if r fails verify_rep.
 */
SplitData invariant_coinvariant_split(const UnitaryRep& r);

// Matrices of the generators on the span of `basis`, which must be invariant.
LinearRep restrict_rep(const UnitaryRep& r, const CycloMatrix& basis);

inline constexpr size_t kDefaultElementCap = 10000;

/**
 * True iff a(g) - I is invertible for every non-identity element of the image
 * group, which is materialized by breadth-first closure. A generator sent
 * to I counts as a non-identity element with fixed points. Throws InputError
 * once more than element_cap matrices are found.
 */
bool fixed_point_free_check(const UnitaryRep& r, size_t element_cap = kDefaultElementCap);

} // namespace twisthom
