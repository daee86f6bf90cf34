#pragma once

#include "twisthom/exactnum/integer.hpp"
#include "twisthom/exactnum/matrix.hpp"
#include "twisthom/grp/group.hpp"
#include "twisthom/grp/group_ring.hpp"
#include "twisthom/grp/perm_action.hpp"

#include <vector>

namespace twisthom {

using RingMatrix = Matrix<GroupRingElement>;

/**
 * Finite free chain complex C_top -> ... -> C_0 over Z[pi].
 *
 * boundary(k) for k = 1..top is the matrix of d_k, of shape
 * ranks[k-1] x ranks[k]. Entries are written so that a representation
 * alpha is applied by substituting alpha(w) for each word, and
 * d_{k-1} * d_k vanishes in Z[pi] with the ring's own multiplication order.
 */
class EquivariantComplex {
  public:
    EquivariantComplex() = default;
    // Checks shapes and that every word lives in the group.
    EquivariantComplex(GroupPresentation group, std::vector<int> ranks, std::vector<RingMatrix> boundaries);

    const GroupPresentation& group() const noexcept { return group_; }
    const std::vector<int>& ranks() const noexcept { return ranks_; }
    int top() const noexcept { return static_cast<int>(ranks_.size()) - 1; }
    int rank(int k) const { return k < 0 || k > top() ? 0 : ranks_[static_cast<size_t>(k)]; }
    // d_k for 1 <= k <= top; a zero matrix of the right shape outside that range.
    RingMatrix boundary(int k) const;
    const std::vector<RingMatrix>& boundaries() const noexcept { return boundaries_; }
    // Sum of (-1)^k ranks[k].
    long euler_characteristic() const;

  private:
    GroupPresentation group_;
    std::vector<int> ranks_;
    std::vector<RingMatrix> boundaries_;
};

// Z-matrix obtained by sending every word to 1.
Matrix<Integer> augment(const RingMatrix& m);

// Homology dimensions over Q of the complex tensored with the trivial module.
std::vector<long> trivial_dims(const EquivariantComplex& c);

// Integer matrix of d_k under the permutation representation of an action
// (block (l, l.w) gets the coefficient of w). Used by exact d d = 0 checks.
Matrix<Integer> permutation_specialize(const RingMatrix& m, const PermAction& a);

// True iff every d_{k-1} d_k vanishes in Z[H_1(pi)], the group ring of the
// abelianization (torsion included).
bool abelian_boundary_check(const EquivariantComplex& c);
// Same for the permutation representation of `a`.
bool permutation_boundary_check(const EquivariantComplex& c, const PermAction& a);

// Throws BoundaryError when abelian_boundary_check fails.
void require_abelian_boundary(const EquivariantComplex& c);

} // namespace twisthom
