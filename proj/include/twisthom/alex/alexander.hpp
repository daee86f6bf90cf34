#pragma once

#include "twisthom/chain/complex.hpp"
#include "twisthom/exactnum/laurent_poly.hpp"
#include "twisthom/rep/unitary_rep.hpp"
#include "twisthom/twist/twisted.hpp"

#include <utility>
#include <vector>

namespace twisthom {

using PolyMatrix = Matrix<LaurentPoly>;

// H_i(C; Q[t, t^-1]) = Q[t, t^-1]^free_rank + sum Q[t, t^-1] / (p).
struct DegreeTorsion {
    long free_rank = 0;
    std::vector<LaurentPoly> torsion_polys;  // normalized non-units, each dividing the next
    friend bool operator==(const DegreeTorsion&, const DegreeTorsion&) = default;
};

struct TorsionData {
    std::vector<DegreeTorsion> degrees;
    friend bool operator==(const TorsionData&, const TorsionData&) = default;
};

/**
 * Boundary matrices under g -> t^phi(g). Throws InputError if phi is not a
 * grading of the complex's group and BoundaryError if consecutive products
 * are nonzero.
 */
std::vector<PolyMatrix> laurent_specialize(const EquivariantComplex& c, const IntGrading& phi);

/**
 * Invariant factors of homology over Q[t, t^-1]. For each degree the image of
 * the next boundary is written in a free basis of the kernel and reduced to
 * Smith form. `ranks` are the chain ranks; mats[k - 1] is d_k. Throws
 * InternalError if an image fails to lie in the kernel.
 */
TorsionData torsion_invariants(const std::vector<PolyMatrix>& mats, const std::vector<int>& ranks);

/**
 * Smallest n >= 2 such that Phi_n divides no torsion polynomial; returns
 * (n, 1). Throws ObstructionError naming the degree if any degree has a free
 * part, since then no character through t can kill it.
 */
std::pair<long, long> select_root_of_unity(const TorsionData& td);

// Homology dimensions with t -> zeta_n, from the universal coefficient
// sequence: free rank, plus one per polynomial divisible by Phi_n in degrees
// i and i - 1.
std::vector<long> uct_dims(const TorsionData& td, long n);

struct AcyclicityCertificate {
    long z_order = 0;
    long z_power = 0;
    UnitaryRep character;
    HomologyReport report;
    TorsionData torsion;
};

/**
 * Laurent specialization, torsion invariants, root selection, and direct
 * twisted homology under g -> zeta_n^phi(g). Requires gcd of the images to be
 * 1 (InputError). Throws InternalError if the direct dims are not all zero or
 * disagree with uct_dims.
 */
AcyclicityCertificate make_acyclic_fibered(const EquivariantComplex& c, const IntGrading& phi);

// Recomputes the stored report from the stored character and checks the
// certificate's invariants.
bool verify_certificate(const EquivariantComplex& c, const AcyclicityCertificate& cert);

} // namespace twisthom
