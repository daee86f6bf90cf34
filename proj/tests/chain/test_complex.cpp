#include "catch_amalgamated.hpp"

#include "twisthom/chain/catalog.hpp"
#include "twisthom/chain/constructions.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/util/rng.hpp"

using namespace twisthom;

namespace {

GroupRingElement el(const Word& w, long c = 1) { return GroupRingElement(w, Integer(c)); }
GroupRingElement gen_minus_one(int g) { return el(Word::generator(g)) - GroupRingElement(1); }

} // namespace

TEST_CASE("Fox derivatives satisfy the fundamental formula") {
    Rng rng(2);
    for (int it = 0; it < 300; ++it) {
        std::vector<int> codes;
        int len = static_cast<int>(rng.range(0, 10));
        for (int i = 0; i < len; ++i) codes.push_back(static_cast<int>(rng.range(1, 3)) * (rng.coin() ? 1 : -1));
        Word w(codes);
        GroupRingElement left, right;
        for (int x = 0; x < 3; ++x) {
            left += fox_derivative_left(w, x) * gen_minus_one(x);
            right += gen_minus_one(x) * fox_derivative_right(w, x);
        }
        CHECK(left == el(w) - GroupRingElement(1));
        CHECK(right == el(w) - GroupRingElement(1));
    }
}

TEST_CASE("presentation complexes") {
    Word x = Word::generator(0), y = Word::generator(1);
    auto c = presentation_complex(GroupPresentation(1, {x.power(5)}));
    CHECK(c.ranks() == std::vector<int>{1, 1, 1});
    CHECK(c.boundary(1)(0, 0) == gen_minus_one(0));
    GroupRingElement norm;
    for (int k = 0; k < 5; ++k) norm += el(x.power(k));
    CHECK(c.boundary(2)(0, 0) == norm);

    auto f = presentation_complex(GroupPresentation(2, {}));
    CHECK(f.ranks() == std::vector<int>{1, 2, 0});
    CHECK(f.boundary(1)(0, 1) == gen_minus_one(1));

    Word a = x, b = y;
    Word r = a * b * a * b.inverse() * a.inverse() * b.inverse();
    CHECK(fox_derivative_left(r, 0) ==
          GroupRingElement(1) + el(a * b) - el(a * b * a * b.inverse() * a.inverse()));
    auto t = presentation_complex(GroupPresentation(2, {r}));
    CHECK(abelian_boundary_check(t));
    CHECK(trivial_dims(t) == std::vector<long>{1, 1, 0});
}

TEST_CASE("circle products") {
    auto circle = catalog_complex("circle");
    CHECK(circle.complex.boundary(1)(0, 0) == gen_minus_one(0));
    auto torus = catalog_complex("torus2d");
    CHECK(torus.complex.ranks() == std::vector<int>{1, 2, 1});
    CHECK(trivial_dims(torus.complex) == std::vector<long>{1, 2, 1});
    auto s = catalog_complex("s1xs2");
    CHECK(s.complex.ranks() == std::vector<int>{1, 1, 1, 1});
    CHECK(s.complex.boundary(3)(0, 0) == gen_minus_one(0));
    CHECK(s.complex.boundary(2)(0, 0).is_zero());
    CHECK(s.complex.boundary(1)(0, 0) == gen_minus_one(0));
}

TEST_CASE("catalog entries match their expected trivial homology") {
    for (const char* label : {"point", "circle", "torus2d", "s2", "s1xs2", "t3", "lens:2,1", "lens:5,2", "lens:7,3",
                             "s1x_sigma:0", "s1x_sigma:1", "s1x_sigma:2", "quaternion_q8", "trefoil_exterior",
                             "handlebody:1", "handlebody:3", "free_product_of:t3+t3", "free_product_of:lens:3,1+s1xs2"}) {
        INFO(label);
        CatalogEntry e = catalog_lookup(label);
        CHECK(trivial_dims(e.complex) == e.expected_trivial_dims);
        CHECK(abelian_boundary_check(e.complex));
        if (e.closed_3manifold) CHECK(e.complex.euler_characteristic() == 0);
    }
    CHECK(catalog_lookup("lens:5,1").expected_trivial_dims == std::vector<long>{1, 0, 0, 1});
    CHECK(catalog_lookup("t3").expected_trivial_dims == std::vector<long>{1, 3, 3, 1});
    CHECK(catalog_lookup("free_product_of:t3+t3").complex.group().num_generators() == 6);
    CHECK_THROWS_AS(catalog_lookup("lens:0,1"), InputError);
    CHECK_THROWS_AS(catalog_lookup("lens:4,2"), InputError);
    CHECK_THROWS_AS(catalog_lookup("lens:5"), InputError);
    CHECK_THROWS_AS(catalog_lookup("lens:a,1"), InputError);
    CHECK_THROWS_AS(catalog_lookup("klein_bottle"), InputError);
}

TEST_CASE("the quaternion complex passes its gates") {
    auto q8 = catalog_complex("quaternion_q8");
    PermAction reg = q8_regular_action();
    CHECK(reg.degree() == 8);
    CHECK(reg.is_transitive());
    CHECK(permutation_boundary_check(q8.complex, reg));
    auto d = smith_normal_form_int(augment(q8.complex.boundary(2))).diagonal();
    CHECK(d == std::vector<Integer>{Integer(2), Integer(2)});
}

TEST_CASE("corrupted boundaries are caught") {
    auto lens = catalog_complex("lens", {5, 1});
    auto bds = lens.complex.boundaries();
    bds[1](0, 0) += GroupRingElement(Word::generator(0));
    EquivariantComplex bad(lens.complex.group(), lens.complex.ranks(), bds);
    CHECK_FALSE(abelian_boundary_check(bad));
    CHECK_THROWS_AS(require_abelian_boundary(bad), BoundaryError);
    CHECK_THROWS_AS(EquivariantComplex(lens.complex.group(), {1, 1}, {}), InputError);
}

TEST_CASE("finite covers") {
    auto circle = catalog_complex("circle");
    auto dbl = cover_complex(circle.complex, PermAction({{1, 0}}));
    CHECK(dbl.group().num_generators() == 1);
    CHECK(dbl.ranks() == std::vector<int>{2, 2});
    CHECK(trivial_dims(dbl) == std::vector<long>{1, 1});

    auto lens4 = catalog_complex("lens", {4, 1});
    auto l2 = cover_complex(lens4.complex, PermAction({{1, 0}}));
    CHECK(trivial_dims(l2) == std::vector<long>{1, 0, 0, 1});

    auto same = cover_complex(lens4.complex, PermAction::trivial(1));
    CHECK(same.group() == lens4.complex.group());
    CHECK(same.boundaries() == lens4.complex.boundaries());

    for (const char* label : {"t3", "quaternion_q8", "trefoil_exterior", "s1x_sigma:1"}) {
        auto e = catalog_lookup(label);
        for (int d = 2; d <= 3; ++d)
            for (const auto& a : transitive_actions(e.complex.group(), d)) {
                auto cov = cover_complex(e.complex, a);
                CHECK(cov.euler_characteristic() == d * e.complex.euler_characteristic());
                CHECK(abelian_boundary_check(cov));
                auto dims = trivial_dims(cov);
                long chi = 0;
                for (size_t k = 0; k < dims.size(); ++k) chi += (k % 2 ? -1 : 1) * dims[k];
                CHECK(chi == d * e.complex.euler_characteristic());
                CHECK(dims[0] == 1);
            }
    }
}
