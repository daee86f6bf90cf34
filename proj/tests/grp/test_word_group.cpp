#include "catch_amalgamated.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/grp/group.hpp"
#include "twisthom/grp/group_ring.hpp"
#include "twisthom/util/rng.hpp"

#include <algorithm>

using namespace twisthom;

namespace {

std::vector<int> random_codes(Rng& rng, int gens, int max_len) {
    std::vector<int> c;
    int len = static_cast<int>(rng.range(0, max_len));
    for (int i = 0; i < len; ++i) c.push_back(static_cast<int>(rng.range(1, gens)) * (rng.coin() ? 1 : -1));
    return c;
}

GroupPresentation t3_group() {
    Word a{1}, b{2}, c{3};
    return GroupPresentation(3, {commutator(a, b), commutator(a, c), commutator(b, c)});
}

GroupRingElement random_element(Rng& rng) {
    GroupRingElement e;
    int terms = static_cast<int>(rng.range(0, 4));
    for (int i = 0; i < terms; ++i) e += GroupRingElement(Word(random_codes(rng, 2, 4)), Integer(rng.range(-3, 3)));
    return e;
}

std::vector<long> sorted_longs(const std::vector<Integer>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.to_int64());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("free reduction") {
    CHECK(free_reduce({1, -1}).empty());
    CHECK(free_reduce({1, 2, -2, 1}) == Word{1, 1});
    Word w{1, 2, -1};
    CHECK(free_reduce(w.codes()) == w);
    CHECK_THROWS_AS(free_reduce({1, 0}), InputError);

    Rng rng(1);
    for (int i = 0; i < 500; ++i) {
        auto codes = random_codes(rng, 3, 12);
        Word r = free_reduce(codes);
        CHECK(free_reduce(r.codes()) == r);
        CHECK(r.size() <= codes.size());
        for (size_t k = 0; k + 1 < r.size(); ++k) CHECK(r.code(k) != -r.code(k + 1));
        CHECK((r * r.inverse()).empty());
    }
}

TEST_CASE("presentations validate their relators") {
    CHECK_THROWS_AS(GroupPresentation(1, {Word{1, -1}}), InputError);
    CHECK_THROWS_AS(GroupPresentation(1, {Word{2}}), InputError);
    CHECK_NOTHROW(GroupPresentation(2, {}));
}

TEST_CASE("abelianization examples") {
    auto z5 = abelianization(GroupPresentation(1, {Word{1, 1, 1, 1, 1}}));
    CHECK(z5.betti == 0);
    CHECK(sorted_longs(z5.torsion) == std::vector<long>{5});

    auto t3 = abelianization(t3_group());
    CHECK(t3.betti == 3);
    CHECK(t3.torsion.empty());

    auto f2 = abelianization(GroupPresentation(2, {}));
    CHECK(f2.betti == 2);
    CHECK(f2.torsion.empty());

    Word x{1}, y{2};
    auto klein4 = abelianization(GroupPresentation(2, {x.power(2), y.power(2), commutator(x, y)}));
    CHECK(klein4.betti == 0);
    CHECK(sorted_longs(klein4.torsion) == std::vector<long>{2, 2});
}

TEST_CASE("free products") {
    GroupPresentation a(1, {Word{1, 1}});
    GroupPresentation b(1, {Word{1, 1, 1}});
    GroupPresentation ab = free_product(a, b);
    CHECK(ab.num_generators() == 2);
    CHECK(ab.relators() == std::vector<Word>{Word{1, 1}, Word{2, 2, 2}});
    CHECK(free_product(a, GroupPresentation()) == a);
    GroupPresentation tt = free_product(t3_group(), t3_group());
    CHECK(tt.num_generators() == 6);
    CHECK(tt.relators().size() == 6);
}

TEST_CASE("abelianization of a free product merges invariants") {
    Rng rng(21);
    for (int it = 0; it < 60; ++it) {
        auto random_pres = [&] {
            int n = static_cast<int>(rng.range(1, 3));
            std::vector<Word> rels;
            int r = static_cast<int>(rng.range(0, 3));
            for (int i = 0; i < r; ++i) {
                Word w(random_codes(rng, n, 6));
                if (!w.empty()) rels.push_back(w);
            }
            return GroupPresentation(n, rels);
        };
        GroupPresentation p1 = random_pres(), p2 = random_pres();
        auto a1 = abelianization(p1), a2 = abelianization(p2);
        auto a12 = abelianization(free_product(p1, p2));
        CHECK(a12.betti == a1.betti + a2.betti);
        // Reference: Smith form of the block-diagonal relator matrix.
        auto r1 = relator_matrix(p1), r2 = relator_matrix(p2);
        Matrix<Integer> block(r1.rows() + r2.rows(), r1.cols() + r2.cols());
        block.set_block(0, 0, r1);
        block.set_block(r1.rows(), r1.cols(), r2);
        std::vector<long> ref;
        for (const auto& d : smith_normal_form_int(block).diagonal())
            if (!d.is_zero() && !d.is_one()) ref.push_back(d.to_int64());
        std::sort(ref.begin(), ref.end());
        CHECK(sorted_longs(a12.torsion) == ref);
        // Same multiset of primary parts as the two factors.
        auto primary = [](std::vector<long> v) {
            std::vector<long> out;
            for (long d : v)
                for (long p = 2; d > 1; ++p) {
                    long q = 1;
                    while (d % p == 0) {
                        d /= p;
                        q *= p;
                    }
                    if (q > 1) out.push_back(q);
                }
            std::sort(out.begin(), out.end());
            return out;
        };
        auto merged = sorted_longs(a1.torsion);
        auto t2 = sorted_longs(a2.torsion);
        merged.insert(merged.end(), t2.begin(), t2.end());
        CHECK(primary(merged) == primary(sorted_longs(a12.torsion)));
    }
}

TEST_CASE("gradings") {
    Word a{1}, b{2};
    GroupPresentation trefoil(2, {a * b * a * b.inverse() * a.inverse() * b.inverse()});
    CHECK(verify_grading(trefoil, IntGrading{{1, 1}}));
    CHECK_FALSE(verify_grading(GroupPresentation(1, {Word{1, 1}}), IntGrading{{1}}));
    CHECK(verify_grading(t3_group(), IntGrading{{0, 0, 0}}));
    CHECK_FALSE(verify_grading(t3_group(), IntGrading{{0, 0}}));
}

TEST_CASE("group ring arithmetic") {
    Rng rng(9);
    for (int i = 0; i < 300; ++i) {
        auto x = random_element(rng), y = random_element(rng), z = random_element(rng);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK((x + y) * z == x * z + y * z);
        CHECK((x * y).bar() == y.bar() * x.bar());
        CHECK((x - x).is_zero());
    }
    GroupRingElement g(Word{1});
    CHECK((g - GroupRingElement(1)).str() == "-1 + a");
}
