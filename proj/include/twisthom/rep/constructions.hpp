#pragma once

#include "twisthom/grp/perm_action.hpp"
#include "twisthom/rep/unitary_rep.hpp"
#include "twisthom/util/rng.hpp"

namespace twisthom {

UnitaryRep trivial_rep(const GroupPresentation& p, size_t dim);

// g -> zeta_n^(a phi(g)). Throws InputError if phi is not a grading of p.
UnitaryRep character_from_grading(const GroupPresentation& p, const IntGrading& phi, long n, long a);

// g -> zeta_n^(a w(g)) for integer weights w; the relators need only have
// weight divisible by n / gcd(n, a). Throws InputError otherwise.
UnitaryRep character_from_weights(const GroupPresentation& p, const std::vector<long>& weights, long n, long a);

/**
 * All characters of the torsion subgroup of H_1, pulled back to the
 * generators: one per tuple (a_1, ..., a_s), a_i < d_i, in lexicographic
 * order. The conductor of each is the lcm of the invariant factors.
 */
std::vector<UnitaryRep> torsion_characters(const GroupPresentation& p);

// Character of H_1 with each torsion coordinate drawn uniformly and each free
// coordinate sent to a random power of zeta_m, m drawn from 1..max_free_order.
UnitaryRep random_character(const GroupPresentation& p, Rng& rng, long max_free_order = 6);

// Permutation matrices P_g with P_g(l, i) = 1 iff l.g = i.
UnitaryRep permutation_rep(const GroupPresentation& p, const PermAction& a);

/**
 * Induction from the basepoint stabilizer of `a`. sub_images assigns a
 * sub_dim x sub_dim matrix to every Schreier generator. Block (l, l.g) of the
 * image of g is the sub-representation evaluated on the rewrite of g read from
 * coset l, so the output has dimension degree * sub_dim.
 * Throws InputError if the sub-representation fails unitarity or a rewritten
 * relator.
 */
UnitaryRep induce_rep(const GroupPresentation& p, const PermAction& a, const std::vector<CycloMatrix>& sub_images,
                      size_t sub_dim);

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b);

// Q8 = <x, y | x^2 y^-2, x y x y^-1> acting on the quaternions by left
// multiplication with x = i, y = j, in the basis (1, i, j, k).
UnitaryRep quaternion_rep(const GroupPresentation& p);

} // namespace twisthom
