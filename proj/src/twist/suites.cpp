#include "twisthom/twist/suites.hpp"

#include "twisthom/chain/constructions.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/grp/schreier.hpp"
#include "twisthom/rep/constructions.hpp"
#include "twisthom/twist/twisted.hpp"

#include <map>

namespace twisthom {

namespace {

// Distinct streams per suite from one user seed.
Rng suite_rng(uint64_t seed, uint64_t salt) { return Rng(seed * 0x9E3779B97F4A7C15ULL + salt); }

long chi_of(const std::vector<long>& dims) { return HomologyReport::from_dims(dims).euler; }

std::string dims_str(const std::vector<long>& d) {
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

std::string entry_label(const CatalogEntry& e) {
    std::string s = e.name;
    for (size_t i = 0; i < e.params.size(); ++i) s += (i ? "," : ":") + std::to_string(e.params[i]);
    return s;
}

std::string rep_label(const UnitaryRep& r) {
    return provenance_name(r.provenance()) + " rep of dim " + std::to_string(r.dim());
}

// Runs f and records an exception as a failure.
template <class F>
void guarded(SuiteReport& rep, const std::string& where, F&& f) {
    ++rep.instances;
    try {
        f();
    } catch (const std::exception& e) {
        rep.fail(where + ": " + e.what());
    }
}

UnitaryRep random_sub_rep(const GroupPresentation& sub, Rng& rng, size_t dim) {
    UnitaryRep r = random_character(sub, rng);
    while (r.dim() < dim) r = direct_sum(r, random_character(sub, rng));
    return r;
}

Word random_word(Rng& rng, int gens, int max_len) {
    std::vector<int> codes;
    int len = static_cast<int>(rng.range(1, max_len));
    for (int i = 0; i < len; ++i) codes.push_back(static_cast<int>(rng.range(1, gens)) * (rng.coin() ? 1 : -1));
    return Word(codes);
}

GroupPresentation random_presentation(Rng& rng) {
    int n = static_cast<int>(rng.range(1, 3));
    int r = static_cast<int>(rng.range(0, 3));
    std::vector<Word> rels;
    for (int i = 0; i < r; ++i) {
        Word w = random_word(rng, n, 6);
        if (!w.empty()) rels.push_back(w);
    }
    return GroupPresentation(n, rels);
}

} // namespace

void for_each_battery_rep(const GroupPresentation& p, uint64_t seed, const BatteryOptions& opts,
                          const std::function<void(const UnitaryRep&)>& f) {
    if (opts.trivial)
        for (size_t k = 1; k <= 2; ++k) f(trivial_rep(p, k));
    if (opts.torsion_characters)
        for (const auto& c : torsion_characters(p)) f(c);
    for (int d = 1; d <= opts.max_perm_degree; ++d)
        for (const auto& a : transitive_actions(p, d)) f(permutation_rep(p, a));
    Rng rng(seed);
    for (int i = 0; i < opts.random_characters; ++i) f(random_character(p, rng));
    if (opts.induced > 0) {
        std::map<int, std::vector<PermAction>> actions;
        const int max_deg = static_cast<int>(std::min<size_t>(3, opts.max_induced_dim));
        for (int i = 0; i < opts.induced; ++i) {
            int d = static_cast<int>(rng.range(1, max_deg));
            auto& list = actions[d];
            if (list.empty()) list = transitive_actions(p, d);
            if (list.empty()) continue;
            const PermAction& a = list[rng.below(list.size())];
            size_t k = static_cast<size_t>(rng.range(1, static_cast<long>(std::min<size_t>(2, opts.max_induced_dim / static_cast<size_t>(d)))));
            SchreierData s(p, a);
            UnitaryRep sub = random_sub_rep(s.subgroup(), rng, k);
            f(induce_rep(p, a, sub.generator_images(), k));
        }
    }
}

std::vector<CatalogEntry> default_fixtures() {
    std::vector<CatalogEntry> out;
    for (const char* label : {"circle", "torus2d", "lens:2,1", "lens:3,1", "lens:5,1", "lens:5,2", "lens:7,3", "s1xs2",
                             "t3", "s1x_sigma:1", "quaternion_q8", "trefoil_exterior", "handlebody:2",
                             "free_product_of:lens:3,1+s1xs2"})
        out.push_back(catalog_lookup(label));
    return out;
}

SuiteConfig default_suite_config(uint64_t seed) { return SuiteConfig{seed, default_fixtures()}; }

SuiteReport euler_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"euler"};
    BatteryOptions opts;
    opts.max_perm_degree = 3;
    opts.induced = 5;
    opts.random_characters = 5;
    uint64_t salt = 0;
    for (const auto& e : cfg.fixtures) {
        const long chi = e.complex.euler_characteristic();
        const long expected = chi_of(e.expected_trivial_dims);
        auto check = [&](const UnitaryRep& r) {
            guarded(rep, entry_label(e), [&] {
                auto h = twisted_homology(e.complex, r);
                const long dim = static_cast<long>(r.dim());
                if (h.euler != dim * chi || h.euler != dim * expected)
                    rep.fail(entry_label(e) + " with " + rep_label(r) + ": twisted Euler characteristic " +
                             std::to_string(h.euler) + ", cell count gives " + std::to_string(dim * chi) +
                             ", expected homology gives " + std::to_string(dim * expected));
            });
        };
        try {
            for_each_battery_rep(e.complex.group(), cfg.seed + salt++, opts, check);
            if (e.name == "quaternion_q8") check(quaternion_rep(e.complex.group()));
        } catch (const std::exception& ex) {
            ++rep.instances;
            rep.fail(entry_label(e) + ": " + ex.what());
        }
    }
    return rep;
}

SuiteReport trivial_rep_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"trivial_rep"};
    for (const auto& e : cfg.fixtures) {
        std::vector<long> base;
        try {
            base = trivial_dims(e.complex);
        } catch (const std::exception& ex) {
            ++rep.instances;
            rep.fail(entry_label(e) + ": " + ex.what());
            continue;
        }
        for (size_t k = 1; k <= 3; ++k)
            guarded(rep, entry_label(e), [&] {
                auto dims = twisted_homology(e.complex, trivial_rep(e.complex.group(), k)).dims;
                std::vector<long> want;
                for (long b : base) want.push_back(static_cast<long>(k) * b);
                if (dims != want)
                    rep.fail(entry_label(e) + " with trivial rep of dim " + std::to_string(k) + ": " +
                             dims_str(dims) + " vs " + dims_str(want));
                else if (k == 1 && dims != e.expected_trivial_dims)
                    rep.fail(entry_label(e) + ": trivial dims " + dims_str(dims) + " but the catalog expects " +
                             dims_str(e.expected_trivial_dims));
            });
    }
    return rep;
}

SuiteReport h0_suite(const SuiteConfig& cfg, int count) {
    SuiteReport rep{"h0"};
    Rng rng = suite_rng(cfg.seed, 3);
    for (int i = 0; i < count; ++i) {
        GroupPresentation p = random_presentation(rng);
        UnitaryRep r = random_character(p, rng);
        if (rng.coin()) r = direct_sum(r, random_character(p, rng));
        guarded(rep, p.str(), [&] {
            long h0 = coinvariants_h0(p, r);
            long d0 = twisted_homology(presentation_complex(p), r).dims[0];
            if (h0 != d0)
                rep.fail(p.str() + " with " + rep_label(r) + ": coinvariants " + std::to_string(h0) +
                         ", degree-0 homology " + std::to_string(d0));
        });
    }
    return rep;
}

SuiteReport shapiro_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"shapiro"};
    Rng rng = suite_rng(cfg.seed, 4);
    struct Cover {
        const char* label;
        PermAction action;
    };
    std::vector<Cover> covers{
        {"circle", PermAction({{1, 0}})},
        {"t3", PermAction::trivial(3)},
        {"lens:4,1", PermAction({{1, 0}})},
        {"lens:4,1", PermAction({{1, 2, 3, 0}})},
        {"torus2d", PermAction({{1, 2, 0}, {0, 1, 2}})},
        {"trefoil_exterior", PermAction({{1, 0, 2}, {0, 2, 1}})},
        {"quaternion_q8", PermAction({{1, 0}, {1, 0}})},
        {"s1x_sigma:1", PermAction({{1, 0}, {0, 1}, {1, 0}})},
        {"handlebody:2", PermAction({{1, 2, 3, 0}, {1, 0, 2, 3}})},
    };
    for (const auto& cv : covers) {
        CatalogEntry e = catalog_lookup(cv.label);
        std::string where = std::string(cv.label) + " degree " + std::to_string(cv.action.degree());
        SchreierData s(e.complex.group(), cv.action);
        std::vector<UnitaryRep> subs{trivial_rep(s.subgroup(), 1)};
        for (int i = 0; i < 3; ++i) subs.push_back(random_sub_rep(s.subgroup(), rng, static_cast<size_t>(i % 2 + 1)));
        for (const auto& sub : subs)
            guarded(rep, where, [&] {
                auto res = shapiro_compare(e.complex, cv.action, sub.generator_images(), sub.dim());
                if (!res.agree())
                    rep.fail(where + " with " + rep_label(sub) + ": cover " + dims_str(res.dims_cover) +
                             ", induced " + dims_str(res.dims_induced));
            });
    }
    return rep;
}

SuiteReport subquotient_suite(const SuiteConfig& cfg, int count) {
    SuiteReport rep{"subquotient"};
    Rng rng = suite_rng(cfg.seed, 5);
    std::vector<CatalogEntry> pool;
    for (const char* label : {"circle", "torus2d", "lens:4,1", "lens:6,1", "t3", "trefoil_exterior", "s1xs2", "handlebody:2"})
        pool.push_back(catalog_lookup(label));
    std::map<const CatalogEntry*, std::vector<PermAction>> actions;
    for (int i = 0; i < count; ++i) {
        const CatalogEntry& e = pool[rng.below(pool.size())];
        const GroupPresentation& p = e.complex.group();
        UnitaryRep r = trivial_rep(p, 1);
        switch (rng.below(3)) {
            case 0: {
                r = random_character(p, rng);
                long extra = rng.range(0, 2);
                for (long k = 0; k < extra; ++k) r = direct_sum(r, rng.coin() ? trivial_rep(p, 1) : random_character(p, rng));
                break;
            }
            case 1: {
                auto& list = actions[&e];
                if (list.empty())
                    for (int d = 1; d <= 3; ++d)
                        for (auto& a : transitive_actions(p, d)) list.push_back(a);
                r = permutation_rep(p, list[rng.below(list.size())]);
                break;
            }
            default: {
                auto& list = actions[&e];
                if (list.empty())
                    for (int d = 1; d <= 3; ++d)
                        for (auto& a : transitive_actions(p, d)) list.push_back(a);
                const PermAction& a = list[rng.below(list.size())];
                SchreierData s(p, a);
                r = induce_rep(p, a, random_character(s.subgroup(), rng).generator_images(), 1);
                break;
            }
        }
        guarded(rep, entry_label(e), [&] {
            auto split = invariant_coinvariant_split(r);
            auto res = subquotient_dims(e.complex, r, split);
            if (!res.ok())
                rep.fail(entry_label(e) + " with " + rep_label(r) + ": W " + dims_str(res.dims_w) + ", V " +
                         dims_str(res.dims_v) + ", V/W " + dims_str(res.dims_wperp));
        });
    }
    return rep;
}

SuiteReport handlebody_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"handlebody"};
    for (long g = 1; g <= 3; ++g) {
        CatalogEntry e = catalog_complex("handlebody", {g});
        for_each_battery_rep(e.complex.group(), cfg.seed + static_cast<uint64_t>(g), BatteryOptions{},
                             [&](const UnitaryRep& r) {
                                 guarded(rep, entry_label(e), [&] {
                                     auto h = twisted_homology(e.complex, r);
                                     long want = (g - 1) * static_cast<long>(r.dim());
                                     if (h.dims[1] - h.dims[0] != want)
                                         rep.fail(entry_label(e) + " with " + rep_label(r) + ": dims " +
                                                  dims_str(h.dims) + ", expected dims[1] - dims[0] = " +
                                                  std::to_string(want));
                                 });
                             });
    }
    return rep;
}

SuiteReport free_product_suite(const SuiteConfig& cfg) {
    SuiteReport rep{"free_product"};
    CatalogEntry e = catalog_lookup("free_product_of:t3+t3");
    for_each_battery_rep(e.complex.group(), cfg.seed, BatteryOptions{}, [&](const UnitaryRep& r) {
        guarded(rep, entry_label(e), [&] {
            auto h = twisted_homology(e.complex, r);
            if (h.dims[0] == 0 && h.dims[1] == 0)
                rep.fail("t3 * t3 with " + rep_label(r) + " is acyclic in degrees 0 and 1");
        });
    });
    return rep;
}

std::vector<std::string> suite_names() {
    return {"euler", "trivial_rep", "h0", "shapiro", "subquotient", "handlebody", "free_product"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    if (name == "euler") return euler_suite(cfg);
    if (name == "trivial_rep") return trivial_rep_suite(cfg);
    if (name == "h0") return h0_suite(cfg);
    if (name == "shapiro") return shapiro_suite(cfg);
    if (name == "subquotient") return subquotient_suite(cfg);
    if (name == "handlebody") return handlebody_suite(cfg);
    if (name == "free_product") return free_product_suite(cfg);
    throw InputError("unknown suite '" + name + "'");
}

} // namespace twisthom
