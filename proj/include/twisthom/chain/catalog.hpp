#pragma once

#include "twisthom/chain/complex.hpp"
#include "twisthom/grp/perm_action.hpp"

#include <string>
#include <vector>

namespace twisthom {

struct CatalogEntry {
    std::string name;
    std::vector<long> params;
    EquivariantComplex complex;
    std::vector<long> expected_trivial_dims;
    std::string notes;
    // Closed 3-manifold: four chain groups with alternating rank sum 0.
    bool closed_3manifold = false;
};

/**
 * Named complexes. Recognized names and parameters:
 *   point, circle, torus2d, s2, s1xs2, t3, lens(p, q), s1x_sigma(g),
 *   quaternion_q8, trefoil_exterior, handlebody(g)
 * Every entry is checked before it is returned: d d = 0 over the
 * abelianized group ring, and trivial-coefficient homology equal to
 * expected_trivial_dims. Throws InputError for unknown names or bad parameters.
 */
CatalogEntry catalog_complex(const std::string& name, const std::vector<long>& params = {});

// Presentation complex of the free product of the entries' groups.
CatalogEntry catalog_free_product(const std::vector<CatalogEntry>& parts);

// Parses "name", "name:a,b" or "free_product_of:label+label+...".
CatalogEntry catalog_lookup(const std::string& label);

// Names accepted by catalog_lookup, for help text.
std::vector<std::string> catalog_names();

// Regular action of Q8 = <x, y | x^2 y^-2, x y x y^-1> on its 8 elements by
// right multiplication.
PermAction q8_regular_action();

} // namespace twisthom
