#include "twisthom/rep/constructions.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/grp/schreier.hpp"

namespace twisthom {

namespace {

// Characters of H_1 in Smith coordinates: coordinate i carries z_i in Q/Z and
// generator j goes to exp(2 pi i sum_i V(j, i) z_i).
struct SmithCoordinates {
    Matrix<Integer> v;
    std::vector<long> modulus;  // invariant factor; 0 for a free coordinate
};

SmithCoordinates smith_coordinates(const GroupPresentation& p) {
    auto ab = abelianization(p);
    auto diag = ab.snf.diagonal();
    SmithCoordinates out{ab.snf.v, {}};
    for (int i = 0; i < p.num_generators(); ++i)
        out.modulus.push_back(static_cast<size_t>(i) < diag.size() ? diag[static_cast<size_t>(i)].to_int64() : 0);
    return out;
}

// z_i = num[i] / den[i].
UnitaryRep character_from_coordinates(const GroupPresentation& p, const SmithCoordinates& sc,
                                      const std::vector<long>& num, const std::vector<long>& den, long conductor) {
    long n = conductor;
    for (long d : den) n = lcm_long(n, d);
    std::vector<CycloMatrix> images;
    for (int j = 0; j < p.num_generators(); ++j) {
        Integer e(0);
        for (size_t i = 0; i < num.size(); ++i) {
            if (num[i] == 0) continue;
            e += sc.v(static_cast<size_t>(j), i) * Integer(num[i] * (n / den[i]));
        }
        long exp = mod_floor(e, Integer(n)).to_int64();
        images.push_back(CycloMatrix(1, 1, {CycloNumber::root_of_unity(n, exp)}));
    }
    return UnitaryRep(p, 1, std::move(images), RepProvenance::character, n);
}

} // namespace

UnitaryRep trivial_rep(const GroupPresentation& p, size_t dim) {
    std::vector<CycloMatrix> images(static_cast<size_t>(p.num_generators()), CycloMatrix::identity(dim));
    return UnitaryRep(p, dim, std::move(images), RepProvenance::trivial);
}

UnitaryRep character_from_grading(const GroupPresentation& p, const IntGrading& phi, long n, long a) {
    if (n < 1) throw InputError("root of unity order must be positive");
    if (!verify_grading(p, phi)) throw InputError("grading does not vanish on every relator");
    std::vector<CycloMatrix> images;
    for (long w : phi.images) images.push_back(CycloMatrix(1, 1, {CycloNumber::root_of_unity(n, a * w)}));
    return UnitaryRep(p, 1, std::move(images), RepProvenance::character, n);
}

UnitaryRep character_from_weights(const GroupPresentation& p, const std::vector<long>& weights, long n, long a) {
    if (n < 1) throw InputError("root of unity order must be positive");
    if (weights.size() != static_cast<size_t>(p.num_generators()))
        throw InputError("character needs one weight per generator");
    std::vector<CycloMatrix> images;
    for (long w : weights) images.push_back(CycloMatrix(1, 1, {CycloNumber::root_of_unity(n, a * w)}));
    UnitaryRep r(p, 1, std::move(images), RepProvenance::character, n);
    if (!verify_rep(r)) throw InputError("character zeta_" + std::to_string(n) + "^" + std::to_string(a) +
                                         " does not satisfy the relators");
    return r;
}

std::vector<UnitaryRep> torsion_characters(const GroupPresentation& p) {
    SmithCoordinates sc = smith_coordinates(p);
    std::vector<long> den(sc.modulus.size(), 1);
    std::vector<size_t> tors;
    long n = 1;
    for (size_t i = 0; i < sc.modulus.size(); ++i)
        if (sc.modulus[i] > 1) {
            tors.push_back(i);
            den[i] = sc.modulus[i];
            n = lcm_long(n, sc.modulus[i]);
        }
    std::vector<UnitaryRep> out;
    std::vector<long> num(sc.modulus.size(), 0);
    for (;;) {
        out.push_back(character_from_coordinates(p, sc, num, den, n));
        // Odometer with the last torsion coordinate varying fastest.
        size_t k = tors.size();
        while (k > 0) {
            size_t i = tors[k - 1];
            if (++num[i] < sc.modulus[i]) break;
            num[i] = 0;
            --k;
        }
        if (k == 0) break;
    }
    return out;
}

UnitaryRep random_character(const GroupPresentation& p, Rng& rng, long max_free_order) {
    SmithCoordinates sc = smith_coordinates(p);
    long m = rng.range(1, std::max(1L, max_free_order));
    std::vector<long> num(sc.modulus.size(), 0), den(sc.modulus.size(), 1);
    for (size_t i = 0; i < sc.modulus.size(); ++i) {
        if (sc.modulus[i] == 1) continue;
        den[i] = sc.modulus[i] == 0 ? m : sc.modulus[i];
        num[i] = static_cast<long>(rng.below(static_cast<uint64_t>(den[i])));
    }
    return character_from_coordinates(p, sc, num, den, 1);
}

UnitaryRep permutation_rep(const GroupPresentation& p, const PermAction& a) {
    a.validate(p);
    const size_t d = static_cast<size_t>(a.degree());
    std::vector<CycloMatrix> images;
    for (const auto& img : a.images()) {
        CycloMatrix m(d, d);
        for (size_t l = 0; l < d; ++l) m(l, static_cast<size_t>(img[l])) = CycloNumber(1);
        images.push_back(std::move(m));
    }
    return UnitaryRep(p, d, std::move(images), RepProvenance::permutation);
}

UnitaryRep induce_rep(const GroupPresentation& p, const PermAction& a, const std::vector<CycloMatrix>& sub_images,
                      size_t sub_dim) {
    SchreierData s(p, a);
    UnitaryRep sub(s.subgroup(), sub_dim, sub_images, RepProvenance::explicit_images);
    if (!verify_rep(sub))
        throw InputError("subgroup representation is not unitary or fails a rewritten relator");
    WordEvaluator eval(linear_rep(sub));
    const size_t m = static_cast<size_t>(s.degree());
    std::vector<CycloMatrix> images;
    for (int g = 0; g < p.num_generators(); ++g) {
        CycloMatrix big(m * sub_dim, m * sub_dim);
        for (size_t l = 0; l < m; ++l) {
            auto rw = s.rewrite(Word::generator(g), static_cast<int>(l));
            big.set_block(l * sub_dim, static_cast<size_t>(rw.end) * sub_dim, eval(rw.word));
        }
        images.push_back(std::move(big));
    }
    return UnitaryRep(p, m * sub_dim, std::move(images), RepProvenance::induced, sub.conductor());
}

UnitaryRep direct_sum(const UnitaryRep& a, const UnitaryRep& b) {
    if (!(a.group() == b.group())) throw GroupMismatch("direct sum of representations of different groups");
    std::vector<CycloMatrix> images;
    for (int g = 0; g < a.group().num_generators(); ++g) {
        CycloMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
        m.set_block(0, 0, a.image(g));
        m.set_block(a.dim(), a.dim(), b.image(g));
        images.push_back(std::move(m));
    }
    RepProvenance prov = a.provenance() == b.provenance() && a.provenance() == RepProvenance::trivial
                             ? RepProvenance::trivial
                             : RepProvenance::explicit_images;
    return UnitaryRep(a.group(), a.dim() + b.dim(), std::move(images), prov,
                      lcm_long(a.conductor(), b.conductor()));
}

UnitaryRep quaternion_rep(const GroupPresentation& p) {
    if (p.num_generators() != 2) throw InputError("the quaternion representation needs a two-generator group");
    CycloMatrix li(4, 4), lj(4, 4);
    li(1, 0) = 1; li(0, 1) = -1; li(3, 2) = 1; li(2, 3) = -1;
    lj(2, 0) = 1; lj(3, 1) = -1; lj(0, 2) = -1; lj(1, 3) = 1;
    UnitaryRep r(p, 4, {li, lj}, RepProvenance::explicit_images);
    if (!verify_rep(r)) throw InputError("group relators do not hold for the quaternion units i, j");
    return r;
}

} // namespace twisthom
