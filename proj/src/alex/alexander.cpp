#include "twisthom/alex/alexander.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/exactnum/cyclotomic.hpp"
#include "twisthom/exactnum/normal_form.hpp"
#include "twisthom/rep/constructions.hpp"

#include <numeric>

namespace twisthom {

std::vector<PolyMatrix> laurent_specialize(const EquivariantComplex& c, const IntGrading& phi) {
    if (!verify_grading(c.group(), phi)) throw InputError("grading does not vanish on every relator");
    std::vector<PolyMatrix> out;
    for (int k = 1; k <= c.top(); ++k)
        out.push_back(c.boundaries()[static_cast<size_t>(k - 1)].map([&](const GroupRingElement& e) {
            LaurentPoly p;
            for (const auto& [w, coef] : e.terms()) p += LaurentPoly::monomial(Rational(coef), phi.weight(w));
            return p;
        }));
    for (size_t k = 1; k < out.size(); ++k)
        if (!(out[k - 1] * out[k]).is_zero())
            throw BoundaryError("d_" + std::to_string(k) + " d_" + std::to_string(k + 1) +
                                " is not zero over Q[t, t^-1]");
    return out;
}

TorsionData torsion_invariants(const std::vector<PolyMatrix>& mats, const std::vector<int>& ranks) {
    if (mats.size() + 1 != ranks.size()) throw InputError("torsion_invariants: one boundary per positive degree");
    TorsionData td;
    for (size_t i = 0; i < ranks.size(); ++i) {
        const size_t n = static_cast<size_t>(ranks[i]);
        PolyMatrix d = i == 0 ? PolyMatrix(0, n) : mats[i - 1];
        PolyMatrix next = i + 1 < ranks.size() ? mats[i] : PolyMatrix(n, 0);
        auto red = column_reduce(d);
        PolyMatrix coords = red.vinv * next;
        for (size_t r = 0; r < red.rank; ++r)
            for (size_t j = 0; j < coords.cols(); ++j)
                if (!coords(r, j).is_zero())
                    throw InternalError("image of d_" + std::to_string(i + 1) + " leaves the kernel of d_" +
                                        std::to_string(i));
        PolyMatrix rel = coords.block(red.rank, n, 0, coords.cols());
        DegreeTorsion deg;
        long nonzero = 0;
        if (rel.rows() > 0 && rel.cols() > 0)
            for (const auto& p : smith_normal_form_poly(rel).diagonal()) {
                if (p.is_zero()) continue;
                ++nonzero;
                if (!p.is_unit()) deg.torsion_polys.push_back(p.normalized());
            }
        deg.free_rank = static_cast<long>(rel.rows()) - nonzero;
        td.degrees.push_back(std::move(deg));
    }
    return td;
}

std::pair<long, long> select_root_of_unity(const TorsionData& td) {
    long max_width = 0;
    for (size_t i = 0; i < td.degrees.size(); ++i) {
        if (td.degrees[i].free_rank > 0)
            throw ObstructionError("homology over Q[t, t^-1] has free rank " +
                                       std::to_string(td.degrees[i].free_rank) + " in degree " + std::to_string(i) +
                                       "; no character through t makes it vanish",
                                   static_cast<int>(i));
        for (const auto& p : td.degrees[i].torsion_polys) max_width = std::max(max_width, p.width());
    }
    for (long n = 2;; ++n) {
        // Phi_n has degree phi(n), so it cannot divide anything narrower.
        if (euler_phi(n) > max_width) return {n, 1};
        LaurentPoly phi_n = cyclotomic_polynomial(n);
        bool hit = false;
        for (const auto& deg : td.degrees)
            for (const auto& p : deg.torsion_polys) hit = hit || divides(phi_n, p);
        if (!hit) return {n, 1};
    }
}

std::vector<long> uct_dims(const TorsionData& td, long n) {
    if (n < 1) throw InputError("root of unity order must be positive");
    LaurentPoly phi_n = cyclotomic_polynomial(n);
    auto hits = [&](const DegreeTorsion& d) {
        long k = 0;
        for (const auto& p : d.torsion_polys) k += divides(phi_n, p);
        return k;
    };
    std::vector<long> dims;
    for (size_t i = 0; i < td.degrees.size(); ++i)
        dims.push_back(td.degrees[i].free_rank + hits(td.degrees[i]) + (i > 0 ? hits(td.degrees[i - 1]) : 0));
    return dims;
}

AcyclicityCertificate make_acyclic_fibered(const EquivariantComplex& c, const IntGrading& phi) {
    if (!verify_grading(c.group(), phi)) throw InputError("grading does not vanish on every relator");
    long g = 0;
    for (long w : phi.images) g = std::gcd(g, w);
    if (g != 1)
        throw InputError("grading must be onto Z (gcd of generator images is " + std::to_string(g) +
                         "); divide it by the gcd first");
    TorsionData td = torsion_invariants(laurent_specialize(c, phi), c.ranks());
    auto [n, a] = select_root_of_unity(td);
    LaurentPoly phi_n = cyclotomic_polynomial(n);
    for (const auto& deg : td.degrees)
        for (const auto& p : deg.torsion_polys)
            if (divides(phi_n, p)) throw InternalError("selected root of unity is a zero of " + p.str());
    UnitaryRep chi = character_from_grading(c.group(), phi, n, a);
    HomologyReport report = twisted_homology(c, chi);
    if (!report.acyclic) throw InternalError("selected character does not make the complex acyclic");
    if (report.dims != uct_dims(td, n)) throw InternalError("direct and universal-coefficient dimensions disagree");
    return AcyclicityCertificate{n, a, std::move(chi), std::move(report), std::move(td)};
}

bool verify_certificate(const EquivariantComplex& c, const AcyclicityCertificate& cert) {
    if (cert.z_order < 2 || !cert.report.acyclic) return false;
    LaurentPoly phi_n = cyclotomic_polynomial(cert.z_order);
    for (const auto& deg : cert.torsion.degrees)
        for (const auto& p : deg.torsion_polys)
            if (divides(phi_n, p)) return false;
    return twisted_homology(c, cert.character) == cert.report;
}

} // namespace twisthom
