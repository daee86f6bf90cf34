#include "twisthom/twist/twisted.hpp"

#include "twisthom/chain/constructions.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/exactnum/linalg.hpp"
#include "twisthom/grp/schreier.hpp"
#include "twisthom/rep/constructions.hpp"

#include <map>

namespace twisthom {

HomologyReport HomologyReport::from_dims(std::vector<long> dims) {
    HomologyReport r;
    r.dims = std::move(dims);
    for (size_t i = 0; i < r.dims.size(); ++i) {
        r.euler += (i % 2 ? -1 : 1) * r.dims[i];
        if (r.dims[i] != 0) r.acyclic = false;
    }
    return r;
}

CycloMatrix evaluate_element(const WordEvaluator& eval, const GroupRingElement& e) {
    const size_t n = eval.dim();
    CycloMatrix out(n, n);
    for (const auto& [w, c] : e.terms()) {
        CycloMatrix m = eval(w);
        CycloNumber s{Rational(c)};
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!m(i, j).is_zero()) out(i, j) += s * m(i, j);
    }
    return out;
}

BlockComplex specialize(const EquivariantComplex& c, const UnitaryRep& r) {
    if (!(c.group() == r.group()))
        throw GroupMismatch("representation is defined on " + r.group().str() + " but the complex is over " +
                            c.group().str());
    if (!verify_rep(r)) throw InputError("representation is not unitary or fails a relator");
    return specialize(c, linear_rep(r));
}

BlockComplex specialize(const EquivariantComplex& c, const LinearRep& r) {
    if (r.images.size() != static_cast<size_t>(c.group().num_generators()))
        throw GroupMismatch("representation has " + std::to_string(r.images.size()) +
                            " generator images, complex group has " + std::to_string(c.group().num_generators()));
    const size_t n = r.dim;
    WordEvaluator eval(r);
    std::map<Word, CycloMatrix> cache;
    auto image = [&](const GroupRingElement& e) {
        CycloMatrix out(n, n);
        for (const auto& [w, coef] : e.terms()) {
            auto it = cache.find(w);
            if (it == cache.end()) it = cache.emplace(w, eval(w)).first;
            CycloNumber s{Rational(coef)};
            const CycloMatrix& m = it->second;
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    if (!m(i, j).is_zero()) out(i, j) += s * m(i, j);
        }
        return out;
    };
    BlockComplex b;
    for (int k = 0; k <= c.top(); ++k) b.dims.push_back(static_cast<long>(c.rank(k) * n));
    for (int k = 1; k <= c.top(); ++k) {
        const RingMatrix& d = c.boundaries()[static_cast<size_t>(k - 1)];
        CycloMatrix big(d.rows() * n, d.cols() * n);
        for (size_t i = 0; i < d.rows(); ++i)
            for (size_t j = 0; j < d.cols(); ++j)
                if (!d(i, j).is_zero()) big.set_block(i * n, j * n, image(d(i, j)));
        b.boundaries.push_back(std::move(big));
    }
    for (size_t k = 1; k < b.boundaries.size(); ++k)
        if (!(b.boundaries[k - 1] * b.boundaries[k]).is_zero())
            throw BoundaryError("d_" + std::to_string(k) + " d_" + std::to_string(k + 1) +
                                " is not zero under the representation");
    return b;
}

bool validate_complex(const EquivariantComplex& c, const UnitaryRep& r) {
    try {
        specialize(c, r);
    } catch (const BoundaryError&) {
        return false;
    }
    return true;
}

HomologyReport homology_dims(const BlockComplex& b) {
    std::vector<long> rk(b.dims.size() + 1, 0);
    for (size_t k = 1; k <= b.boundaries.size(); ++k) rk[k] = static_cast<long>(matrix_rank(b.boundaries[k - 1]));
    std::vector<long> dims;
    for (size_t k = 0; k < b.dims.size(); ++k) dims.push_back(b.dims[k] - rk[k] - rk[k + 1]);
    return HomologyReport::from_dims(std::move(dims));
}

long coinvariants_h0(const GroupPresentation& p, const UnitaryRep& r) {
    if (!(p == r.group())) throw GroupMismatch("representation is defined on a different group");
    const CycloMatrix id = CycloMatrix::identity(r.dim());
    CycloMatrix stacked(r.dim(), 0);
    for (const auto& m : r.generator_images()) stacked = hconcat(stacked, m - id);
    return static_cast<long>(r.dim()) - static_cast<long>(matrix_rank(stacked));
}

ShapiroResult shapiro_compare(const EquivariantComplex& c, const PermAction& a,
                              const std::vector<CycloMatrix>& sub_images, size_t sub_dim) {
    SchreierData s(c.group(), a);
    UnitaryRep sub(s.subgroup(), sub_dim, sub_images, RepProvenance::explicit_images);
    ShapiroResult out;
    out.dims_cover = twisted_homology(cover_complex(c, s), sub).dims;
    out.dims_induced = twisted_homology(c, induce_rep(c.group(), a, sub_images, sub_dim)).dims;
    return out;
}

SubquotientResult subquotient_dims(const EquivariantComplex& c, const UnitaryRep& r, const SplitData& s) {
    if (s.w_basis.rows() != r.dim() || s.wperp_basis.rows() != r.dim() ||
        s.w_basis.cols() + s.wperp_basis.cols() != r.dim())
        throw InputError("split data does not have the shape of the representation");
    auto dims_of = [&](const CycloMatrix& basis) {
        if (basis.cols() == 0) return std::vector<long>(static_cast<size_t>(c.top()) + 1, 0);
        LinearRep sub;
        try {
            sub = restrict_rep(r, basis);
        } catch (const InternalError&) {
            throw InputError("split subspace is not invariant under the representation");
        }
        return homology_dims(specialize(c, sub)).dims;
    };
    SubquotientResult out;
    out.dims_v = twisted_homology(c, r).dims;
    out.dims_w = dims_of(s.w_basis);
    out.dims_wperp = dims_of(s.wperp_basis);
    auto chi = [](const std::vector<long>& d) { return HomologyReport::from_dims(d).euler; };
    out.euler_additive = chi(out.dims_v) == chi(out.dims_w) + chi(out.dims_wperp);
    out.exactness_bounds = true;
    for (size_t i = 0; i < out.dims_v.size(); ++i)
        if (out.dims_v[i] > out.dims_w[i] + out.dims_wperp[i]) out.exactness_bounds = false;
    return out;
}

HomologyReport connected_sum_dims(const CatalogEntry& c1, const UnitaryRep& r1, const CatalogEntry& c2) {
    if (trivial_dims(c2.complex) != std::vector<long>{1, 0, 0, 1})
        throw InputError("second summand " + c2.name + " is not a rational homology sphere");
    if (!(r1.group() == c1.complex.group()))
        throw GroupMismatch("representation is not defined on the first summand's group");
    HomologyReport report = twisted_homology(c1.complex, r1);

    const GroupPresentation& p1 = c1.complex.group();
    const GroupPresentation& p2 = c2.complex.group();
    std::vector<CycloMatrix> images = r1.generator_images();
    for (int g = 0; g < p2.num_generators(); ++g) images.push_back(CycloMatrix::identity(r1.dim()));
    GroupPresentation sum = free_product(p1, p2);
    UnitaryRep pulled(sum, r1.dim(), std::move(images), r1.provenance(), r1.conductor());
    auto fox = twisted_homology(presentation_complex(sum), pulled);
    for (size_t i = 0; i < 2 && i < report.dims.size(); ++i)
        if (fox.dims[i] != report.dims[i])
            throw InternalError("connected sum: degree " + std::to_string(i) + " gives " +
                                std::to_string(report.dims[i]) + " from the summand but " +
                                std::to_string(fox.dims[i]) + " from the free product presentation");
    return report;
}

} // namespace twisthom
