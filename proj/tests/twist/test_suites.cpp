#include "catch_amalgamated.hpp"

#include "twisthom/errors.hpp"
#include "twisthom/twist/suites.hpp"

#include <set>

using namespace twisthom;

TEST_CASE("lemma suites pass on the shipped fixtures") {
    auto cfg = default_suite_config(1);
    for (const auto& name : {"euler", "trivial_rep", "h0", "shapiro", "subquotient"}) {
        auto rep = run_suite(name, cfg);
        INFO(name << ": " << rep.first_failure);
        CHECK(rep.passed());
        CHECK(rep.instances > 0);
    }
    CHECK(h0_suite(cfg).instances == 200);
    CHECK(subquotient_suite(cfg).instances == 100);
    CHECK(shapiro_suite(cfg).instances >= 20);
    CHECK_THROWS_AS(run_suite("nope", cfg), InputError);
}

TEST_CASE("suites are seed dependent but deterministic") {
    auto a = h0_suite(default_suite_config(7), 20);
    auto b = h0_suite(default_suite_config(7), 20);
    CHECK(a.instances == b.instances);
    CHECK(a.failures == b.failures);
}

TEST_CASE("a truncated fixture fails the Euler suite") {
    auto cfg = default_suite_config(1);
    for (auto& e : cfg.fixtures)
        if (e.name == "lens" && e.params == std::vector<long>{5, 1}) {
            auto ranks = e.complex.ranks();
            ranks.pop_back();
            auto bds = e.complex.boundaries();
            bds.pop_back();
            e.complex = EquivariantComplex(e.complex.group(), ranks, bds);
        }
    auto rep = euler_suite(cfg);
    CHECK_FALSE(rep.passed());
    CHECK(rep.first_failure.find("lens:5,1") != std::string::npos);
}

TEST_CASE("battery contents") {
    GroupPresentation f2(2, {});
    long count = 0;
    std::set<size_t> dims;
    BatteryOptions opts;
    opts.max_perm_degree = 3;
    opts.induced = 20;
    for_each_battery_rep(f2, 3, opts, [&](const UnitaryRep& r) {
        ++count;
        dims.insert(r.dim());
        CHECK(r.dim() <= 6);
    });
    // trivial 1, 2; one torsion character; 1 + 3 + 7 permutation reps; 10 random; 20 induced.
    CHECK(count == 2 + 1 + 11 + 10 + 20);
    CHECK(dims.count(3) == 1);
}
