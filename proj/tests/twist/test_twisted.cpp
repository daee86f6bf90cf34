#include "catch_amalgamated.hpp"

#include "oracles.hpp"
#include "twisthom/chain/catalog.hpp"
#include "twisthom/chain/constructions.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/grp/schreier.hpp"
#include "twisthom/rep/constructions.hpp"
#include "twisthom/twist/twisted.hpp"

#include <numeric>

using namespace twisthom;

namespace {

using V = std::vector<long>;

CycloMatrix scalar(const CycloNumber& z) { return CycloMatrix(1, 1, {z}); }

UnitaryRep circle_char(const GroupPresentation& p, long n, long a) {
    return character_from_grading(p, IntGrading{std::vector<long>(static_cast<size_t>(p.num_generators()), 1)}, n, a);
}

// Homology from complex-valued generator images and singular values only.
std::vector<long> float_dims(const EquivariantComplex& c, const UnitaryRep& r) {
    const auto n = static_cast<Eigen::Index>(r.dim());
    std::vector<Eigen::MatrixXcd> img, inv;
    for (const auto& m : r.generator_images()) {
        img.push_back(oracle::to_complex(m));
        inv.push_back(img.back().inverse());
    }
    std::vector<size_t> rk(static_cast<size_t>(c.top()) + 2, 0);
    for (int k = 1; k <= c.top(); ++k) {
        const RingMatrix d = c.boundary(k);
        Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d.rows()) * n,
                                                      static_cast<Eigen::Index>(d.cols()) * n);
        for (size_t i = 0; i < d.rows(); ++i)
            for (size_t j = 0; j < d.cols(); ++j)
                for (const auto& [w, coef] : d(i, j).terms()) {
                    Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(n, n);
                    for (size_t l = 0; l < w.size(); ++l) {
                        Letter let = w.letter(l);
                        m = m * (let.exp > 0 ? img : inv)[static_cast<size_t>(let.gen)];
                    }
                    big.block(static_cast<Eigen::Index>(i) * n, static_cast<Eigen::Index>(j) * n, n, n) +=
                        coef.to_double() * m;
                }
        rk[static_cast<size_t>(k)] = oracle::svd_rank(big);
    }
    std::vector<long> dims;
    for (int k = 0; k <= c.top(); ++k)
        dims.push_back(c.rank(k) * static_cast<long>(r.dim()) - static_cast<long>(rk[static_cast<size_t>(k)]) -
                       static_cast<long>(rk[static_cast<size_t>(k) + 1]));
    return dims;
}

} // namespace

TEST_CASE("specialization") {
    auto circle = catalog_complex("circle").complex;
    auto b = specialize(circle, trivial_rep(circle.group(), 1));
    CHECK(b.boundaries[0].is_zero());
    b = specialize(circle, circle_char(circle.group(), 2, 1));
    CHECK(b.boundaries[0] == scalar(CycloNumber(-2)));

    auto lens = catalog_complex("lens", {5, 1}).complex;
    auto z = torsion_characters(lens.group())[1];
    b = specialize(lens, z);
    CycloNumber zeta = CycloNumber::root_of_unity(5, 1);
    CHECK(b.boundaries[0] == scalar(zeta - CycloNumber(1)));
    CHECK(b.boundaries[1].is_zero());
    CHECK(b.boundaries[2] == scalar(zeta - CycloNumber(1)));
    CHECK(b.dims == V{1, 1, 1, 1});

    CHECK_THROWS_AS(specialize(lens, trivial_rep(circle.group(), 1)), GroupMismatch);
    auto bds = lens.boundaries();
    bds[1](0, 0) = GroupRingElement(1);
    EquivariantComplex bad(lens.group(), lens.ranks(), bds);
    CHECK_THROWS_AS(specialize(bad, z), BoundaryError);
    CHECK(validate_complex(lens, z));
    CHECK_FALSE(validate_complex(bad, z));
    CHECK_THROWS_AS(validate_complex(lens, trivial_rep(circle.group(), 1)), GroupMismatch);
    for (const auto& name : {"point", "circle", "torus2d", "s2", "s1xs2", "t3", "quaternion_q8", "trefoil_exterior"}) {
        auto entry = catalog_complex(name).complex;
        CHECK(validate_complex(entry, trivial_rep(entry.group(), 1)));
    }
    UnitaryRep not_unitary(lens.group(), 1, {scalar(CycloNumber(2))}, RepProvenance::explicit_images);
    CHECK_THROWS_AS(specialize(lens, not_unitary), InputError);
}

TEST_CASE("homology dimensions") {
    auto lens = catalog_complex("lens", {5, 1}).complex;
    auto chars = torsion_characters(lens.group());
    auto h = twisted_homology(lens, chars[1]);
    CHECK(h.dims == V{0, 0, 0, 0});
    CHECK(h.acyclic);
    CHECK(h.euler == 0);
    h = twisted_homology(lens, chars[0]);
    CHECK(h.dims == V{1, 0, 0, 1});
    CHECK_FALSE(h.acyclic);

    auto s = catalog_complex("s1xs2").complex;
    CHECK(twisted_homology(s, circle_char(s.group(), 2, 1)).dims == V{0, 0, 0, 0});

    auto q8 = catalog_complex("quaternion_q8").complex;
    auto rho = quaternion_rep(q8.group());
    h = twisted_homology(q8, rho);
    CHECK(h.dims == V{0, 0, 0, 0});
    CHECK(h.euler == 4 * q8.euler_characteristic());
    CHECK(twisted_homology(q8, permutation_rep(q8.group(), q8_regular_action())).dims == V{1, 0, 0, 1});

    CHECK(HomologyReport::from_dims({1, 3, 3, 1}).euler == 0);
    CHECK(HomologyReport::from_dims({1, 2, 0}).euler == -1);
}

TEST_CASE("exact homology agrees with a floating-point computation") {
    Rng rng(23);
    for (const char* label : {"lens:5,2", "lens:7,3", "t3", "quaternion_q8", "trefoil_exterior", "s1x_sigma:1",
                             "free_product_of:lens:3,1+s1xs2", "torus2d"}) {
        auto e = catalog_lookup(label);
        const auto& p = e.complex.group();
        std::vector<UnitaryRep> reps{trivial_rep(p, 2)};
        for (int i = 0; i < 4; ++i) reps.push_back(random_character(p, rng));
        for (int d = 2; d <= 3; ++d) {
            auto acts = transitive_actions(p, d);
            if (acts.empty()) continue;
            const auto& a = acts[rng.below(acts.size())];
            reps.push_back(permutation_rep(p, a));
            SchreierData s(p, a);
            reps.push_back(induce_rep(p, a, random_character(s.subgroup(), rng).generator_images(), 1));
        }
        for (const auto& r : reps) {
            INFO(label << " " << provenance_name(r.provenance()) << " dim " << r.dim());
            CHECK(twisted_homology(e.complex, r).dims == float_dims(e.complex, r));
        }
    }
}

TEST_CASE("H0 and H1 depend only on the fundamental group") {
    for (long p : {2, 3, 5, 7})
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            auto lens = catalog_complex("lens", {p, q}).complex;
            auto pres = presentation_complex(lens.group());
            for (const auto& r : torsion_characters(lens.group())) {
                INFO("p=" << p << " q=" << q);
                auto full = twisted_homology(lens, r).dims;
                auto low = twisted_homology(pres, r).dims;
                CHECK(full[0] == low[0]);
                CHECK(full[1] == low[1]);
            }
        }
}

TEST_CASE("coinvariants") {
    auto lens = catalog_complex("lens", {5, 1}).complex;
    CHECK(coinvariants_h0(lens.group(), trivial_rep(lens.group(), 3)) == 3);
    CHECK(coinvariants_h0(lens.group(), torsion_characters(lens.group())[2]) == 0);
    auto q8 = catalog_complex("quaternion_q8").complex;
    CHECK(coinvariants_h0(q8.group(), quaternion_rep(q8.group())) == 0);
    CHECK(coinvariants_h0(q8.group(), permutation_rep(q8.group(), q8_regular_action())) == 1);
}

TEST_CASE("Shapiro comparison") {
    auto circle = catalog_complex("circle").complex;
    PermAction two({{1, 0}});
    auto neg = shapiro_compare(circle, two, {scalar(CycloNumber(-1))}, 1);
    CHECK(neg.dims_cover == V{0, 0});
    CHECK(neg.agree());
    auto triv = shapiro_compare(circle, two, {scalar(CycloNumber(1))}, 1);
    CHECK(triv.dims_cover == V{1, 1});
    CHECK(triv.agree());
    auto t3 = catalog_complex("t3").complex;
    auto chi = torsion_characters(t3.group())[0];
    auto same = shapiro_compare(t3, PermAction::trivial(3), chi.generator_images(), 1);
    CHECK(same.dims_cover == V{1, 3, 3, 1});
    CHECK(same.agree());
}

TEST_CASE("subquotients") {
    auto circle = catalog_complex("circle").complex;
    auto triv = trivial_rep(circle.group(), 2);
    auto r = subquotient_dims(circle, triv, invariant_coinvariant_split(triv));
    CHECK(r.dims_w == V{0, 0});
    CHECK(r.dims_v == r.dims_wperp);
    CHECK(r.ok());

    auto lens = catalog_complex("lens", {5, 1}).complex;
    auto z = torsion_characters(lens.group())[1];
    r = subquotient_dims(lens, z, invariant_coinvariant_split(z));
    CHECK(r.dims_v == r.dims_w);
    CHECK(r.dims_wperp == V{0, 0, 0, 0});

    UnitaryRep diag(circle.group(), 2,
                    {CycloMatrix(2, 2, {CycloNumber(1), CycloNumber(0), CycloNumber(0), CycloNumber(-1)})},
                    RepProvenance::explicit_images);
    r = subquotient_dims(circle, diag, invariant_coinvariant_split(diag));
    CHECK(r.dims_w == V{0, 0});
    CHECK(r.dims_wperp == V{1, 1});
    CHECK(r.dims_v == V{1, 1});
    CHECK(r.ok());

    SplitData wrong{CycloMatrix(2, 1, {CycloNumber(1), CycloNumber(1)}), CycloMatrix(2, 1, {CycloNumber(1), CycloNumber(-1)})};
    CHECK_THROWS_AS(subquotient_dims(circle, diag, wrong), InputError);
}

TEST_CASE("connected sums") {
    auto s = catalog_complex("s1xs2");
    auto l3 = catalog_complex("lens", {3, 1});
    CHECK(connected_sum_dims(s, circle_char(s.complex.group(), 2, 1), l3).dims == V{0, 0, 0, 0});
    auto l5 = catalog_complex("lens", {5, 1});
    CHECK(connected_sum_dims(l5, torsion_characters(l5.complex.group())[1], l3).dims == V{0, 0, 0, 0});
    auto t3 = catalog_complex("t3");
    auto l2 = catalog_complex("lens", {2, 1});
    CHECK(connected_sum_dims(t3, trivial_rep(t3.complex.group(), 1), l2).dims == V{1, 3, 3, 1});
    CHECK_THROWS_AS(connected_sum_dims(l5, trivial_rep(l5.complex.group(), 1), t3), InputError);
    CHECK_THROWS_AS(connected_sum_dims(l5, trivial_rep(t3.complex.group(), 1), l3), GroupMismatch);
}
