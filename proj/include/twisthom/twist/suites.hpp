#pragma once

#include "twisthom/chain/catalog.hpp"
#include "twisthom/rep/unitary_rep.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace twisthom {

struct BatteryOptions {
    bool trivial = true;           // trivial representations of dimension 1 and 2
    bool torsion_characters = true;
    int max_perm_degree = 4;       // permutation reps of every transitive action up to this degree
    int induced = 50;              // seeded induced reps
    size_t max_induced_dim = 6;
    int random_characters = 10;
};

/**
 * Calls f on every representation of the test battery for p, in a fixed
 * order. Induced representations come from characters (or sums of two) on
 * stabilizers of transitive actions of degree at most 3.
 */
void for_each_battery_rep(const GroupPresentation& p, uint64_t seed, const BatteryOptions& opts,
                          const std::function<void(const UnitaryRep&)>& f);

struct SuiteReport {
    explicit SuiteReport(std::string suite = {}) : name(std::move(suite)) {}

    std::string name;
    long instances = 0;
    long failures = 0;
    std::string first_failure;
    bool passed() const { return failures == 0; }
    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
};

struct SuiteConfig {
    uint64_t seed = 1;
    // Catalog complexes for the Euler and trivial-representation suites.
    std::vector<CatalogEntry> fixtures;
};

std::vector<CatalogEntry> default_fixtures();
SuiteConfig default_suite_config(uint64_t seed);

// Euler characteristic of every battery rep equals dim times the Euler
// characteristic of the complex, and of the fixture's expected trivial dims.
SuiteReport euler_suite(const SuiteConfig& cfg);
// Trivial rep of dimension k has dims k times the integral computation.
SuiteReport trivial_rep_suite(const SuiteConfig& cfg);
// coinvariants_h0 against degree-0 homology on random presentations.
SuiteReport h0_suite(const SuiteConfig& cfg, int count = 200);
// Cover with subgroup coefficients against base with induced coefficients.
SuiteReport shapiro_suite(const SuiteConfig& cfg);
// Euler additivity and exactness bounds for W, V, V/W.
SuiteReport subquotient_suite(const SuiteConfig& cfg, int count = 100);
// dims[1] - dims[0] = (g - 1) dim V on handlebodies of genus 1, 2, 3.
SuiteReport handlebody_suite(const SuiteConfig& cfg);
// free_product_of:t3+t3 is never acyclic in degrees 0 and 1.
SuiteReport free_product_suite(const SuiteConfig& cfg);

std::vector<std::string> suite_names();
// Throws InputError for an unknown name.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace twisthom
