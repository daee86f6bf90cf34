#include "twisthom/rep/split.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/linalg.hpp"

#include <deque>
#include <set>

namespace twisthom {

namespace {

CycloMatrix coordinates_in(const CycloMatrix& basis, const CycloMatrix& vectors) {
    auto x = solve(basis, vectors);
    if (!x) throw InternalError("vectors leave the span of the given basis");
    return *x;
}

} // namespace

SplitData invariant_coinvariant_split(const UnitaryRep& r) {
    if (!verify_rep(r)) throw InputError("representation fails unitarity or its relators");
    const size_t n = r.dim();
    const CycloMatrix id = CycloMatrix::identity(n);
    CycloMatrix stacked(n, 0);
    for (const auto& m : r.generator_images()) stacked = hconcat(stacked, m - id);
    SplitData s{column_space(stacked), CycloMatrix()};
    s.wperp_basis = nullspace(conj_transpose(s.w_basis));
    for (const auto& m : r.generator_images()) {
        if (s.w_basis.cols() > 0 && !solve(s.w_basis, m * s.w_basis))
            throw InternalError("span of a(g) v - v is not invariant");
        if (!(m * s.wperp_basis == s.wperp_basis)) throw InternalError("a generator moves a vector of W^perp");
    }
    if (s.w_basis.cols() + s.wperp_basis.cols() != n) throw InternalError("W and W^perp do not span the space");
    return s;
}

LinearRep restrict_rep(const UnitaryRep& r, const CycloMatrix& basis) {
    LinearRep out;
    out.dim = basis.cols();
    for (const auto& m : r.generator_images()) {
        out.images.push_back(coordinates_in(basis, m * basis));
        out.inverses.push_back(coordinates_in(basis, conj_transpose(m) * basis));
    }
    return out;
}

bool fixed_point_free_check(const UnitaryRep& r, size_t element_cap) {
    const size_t n = r.dim();
    const long cond = r.conductor();
    auto key = [&](const CycloMatrix& m) {
        std::string k;
        for (const auto& e : m.data()) {
            CycloNumber x = e.embed(cond);
            for (const auto& c : x.coeffs()) k += c.str() + ",";
            k += ";";
        }
        return k;
    };
    const CycloMatrix id = CycloMatrix::identity(n);
    std::set<std::string> seen{key(id)};
    std::deque<CycloMatrix> queue{id};
    bool free = true;
    // Generators are taken to be non-identity elements of the group.
    for (const auto& g : r.generator_images())
        if (g == id) free = false;
    while (!queue.empty()) {
        CycloMatrix m = std::move(queue.front());
        queue.pop_front();
        for (const auto& g : r.generator_images()) {
            CycloMatrix h = m * g;
            if (!seen.insert(key(h)).second) continue;
            if (seen.size() > element_cap)
                throw InputError("image group has more than " + std::to_string(element_cap) + " elements");
            if (!(h == id) && matrix_rank(h - id) < n) free = false;
            queue.push_back(std::move(h));
        }
    }
    return free;
}

} // namespace twisthom
