#pragma once

#include "twisthom/chain/complex.hpp"
#include "twisthom/grp/schreier.hpp"

namespace twisthom {

// Classical Fox derivative: D(uv) = D(u) + u D(v), D(x) = 1, D(x^-1) = -x^-1.
// Satisfies w - 1 = sum_x D_x(w) (x - 1).
GroupRingElement fox_derivative_left(const Word& w, int gen);

// Mirror rule: D(uv) = D(u) v + D(v), D(x) = 1, D(x^-1) = -x^-1.
// Satisfies w - 1 = sum_x (x - 1) D_x(w), which is the order the complexes use.
GroupRingElement fox_derivative_right(const Word& w, int gen);

// Presentation 2-complex: ranks (relators, generators, 1), d_1 = (x - 1) per
// generator, d_2 entry (x, r) = fox_derivative_right(r, x).
EquivariantComplex presentation_complex(const GroupPresentation& p);

// Product with a circle: the group gains a last generator t commuting with
// every old generator, C'_k = C_k + C_{k-1} and
// d'_k = [[d_k, (-1)^(k-1) (t - 1) I], [0, d_{k-1}]].
EquivariantComplex circle_product(const EquivariantComplex& c);

// Complex of the finite cover for the basepoint stabilizer of `a`. Basis
// element (j, i) of C_k (cell j, coset i) sits at index j * degree + i; the
// entry for word w runs from row (l_cell, l) to column (j, l.w) and carries
// the Schreier rewrite of w read from coset l.
EquivariantComplex cover_complex(const EquivariantComplex& c, const PermAction& a);
EquivariantComplex cover_complex(const EquivariantComplex& c, const SchreierData& s);

} // namespace twisthom
