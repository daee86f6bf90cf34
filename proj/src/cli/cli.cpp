#include "twisthom/cli/cli.hpp"

#include "twisthom/alex/alexander.hpp"
#include "twisthom/chain/catalog.hpp"
#include "twisthom/cli/json_io.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/rep/constructions.hpp"
#include "twisthom/twist/suites.hpp"
#include "twisthom/twist/twisted.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace twisthom {

namespace {

struct Options {
    std::string catalog, complex_file, character, rep_file, phi, suite, out_file, entry;
    long trivial = 0;
    uint64_t seed = 1;
    bool corrupt_fixture = false;
};

struct Loaded {
    std::string label;
    EquivariantComplex complex;
};

std::vector<long> parse_long_list(const std::string& text, const char* what) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stol(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw InputError(std::string(what) + " '" + text + "' is not a comma-separated integer list");
        }
    }
    if (out.empty()) throw InputError(std::string(what) + " is empty");
    return out;
}

Loaded load_complex(const Options& o) {
    if (o.catalog.empty() == o.complex_file.empty())
        throw InputError("give exactly one of --catalog NAME[:params] and --complex FILE");
    if (!o.catalog.empty()) return {o.catalog, catalog_lookup(o.catalog).complex};
    return {o.complex_file, complex_from_json(read_json_file(o.complex_file))};
}

UnitaryRep load_rep(const Options& o, const GroupPresentation& g) {
    int given = !o.character.empty() + (o.trivial != 0) + !o.rep_file.empty();
    if (given != 1) throw InputError("give exactly one of --character n:a, --trivial k and --rep FILE");
    if (o.trivial != 0) {
        if (o.trivial < 0) throw InputError("--trivial needs a positive dimension");
        return trivial_rep(g, static_cast<size_t>(o.trivial));
    }
    if (!o.rep_file.empty()) return rep_from_json(read_json_file(o.rep_file), g);
    auto colon = o.character.find(':');
    if (colon == std::string::npos) throw InputError("--character expects n:a");
    auto n = parse_long_list(o.character.substr(0, colon), "character order");
    auto a = parse_long_list(o.character.substr(colon + 1), "character power");
    if (n.size() != 1 || a.size() != 1) throw InputError("--character expects n:a");
    std::vector<long> weights = o.phi.empty() ? std::vector<long>(static_cast<size_t>(g.num_generators()), 1)
                                              : parse_long_list(o.phi, "--phi");
    return character_from_weights(g, weights, n[0], a[0]);
}

void emit(const Json& j, const Options& o, std::ostream& out) {
    std::string text = j.dump(2) + "\n";
    if (o.out_file.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out_file);
    if (!f) throw InputError("cannot write " + o.out_file);
    f << text;
}

int cmd_homology(const Options& o, std::ostream& out) {
    Loaded c = load_complex(o);
    UnitaryRep r = load_rep(o, c.complex.group());
    emit(to_json(twisted_homology(c.complex, r)), o, out);
    return kExitOk;
}

int cmd_acyclify(const Options& o, std::ostream& out, std::ostream& err) {
    Loaded c = load_complex(o);
    if (o.phi.empty()) throw InputError("acyclify needs --phi");
    IntGrading phi{parse_long_list(o.phi, "--phi")};
    try {
        AcyclicityCertificate cert = make_acyclic_fibered(c.complex, phi);
        Json j = to_json(cert);
        j["verified"] = verify_certificate(c.complex, cert);
        emit(j, o, out);
        return kExitOk;
    } catch (const ObstructionError& e) {
        emit(Json{{"acyclic", false}, {"obstruction", Json{{"degree", e.degree()}, {"reason", e.what()}}}}, o, out);
        err << "obstruction: " << e.what() << "\n";
        return kExitNegative;
    }
}

int cmd_search(const Options& o, std::ostream& out, std::ostream& err) {
    Loaded c = load_complex(o);
    auto chars = torsion_characters(c.complex.group());
    Json found = Json::array();
    for (size_t i = 0; i < chars.size(); ++i) {
        auto h = twisted_homology(c.complex, chars[i]);
        if (!h.acyclic) continue;
        Json images = Json::array();
        for (const auto& m : chars[i].generator_images()) images.push_back(to_json(m(0, 0)));
        found.push_back(Json{{"index", i}, {"conductor", chars[i].conductor()}, {"images", images}, {"dims", h.dims}});
    }
    Json j{{"complex", c.label}, {"characters_tested", chars.size()}, {"acyclifying", found}};
    if (found.empty()) {
        std::string note = "no character of the torsion subgroup of H_1 makes the complex acyclic";
        if (c.label == "quaternion_q8")
            note += "; the 4-dimensional quaternion representation does (homology --rep with a quaternion rep file)";
        j["note"] = note;
        emit(j, o, out);
        err << note << "\n";
        return kExitNegative;
    }
    emit(j, o, out);
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    SuiteConfig cfg = default_suite_config(o.seed);
    if (o.corrupt_fixture)
        for (auto& e : cfg.fixtures)
            if (e.name == "lens" && e.params == std::vector<long>{5, 1}) {
                auto ranks = e.complex.ranks();
                auto bds = e.complex.boundaries();
                ranks.pop_back();
                bds.pop_back();
                e.complex = EquivariantComplex(e.complex.group(), ranks, bds);
            }
    std::vector<std::string> names = o.suite.empty() ? suite_names() : std::vector<std::string>{o.suite};
    Json suites = Json::array();
    bool all = true;
    for (const auto& n : names) {
        SuiteReport r = run_suite(n, cfg);
        all = all && r.passed();
        suites.push_back(to_json(r));
    }
    emit(Json{{"seed", o.seed}, {"suites", suites}, {"passed", all}}, o, out);
    return all ? kExitOk : kExitError;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    if (o.entry.empty()) {
        emit(Json{{"entries", catalog_names()}}, o, out);
        return kExitOk;
    }
    CatalogEntry e = catalog_lookup(o.entry);
    emit(Json{{"name", e.name},
              {"params", e.params},
              {"notes", e.notes},
              {"closed_3manifold", e.closed_3manifold},
              {"expected_trivial_dims", e.expected_trivial_dims},
              {"complex", to_json(e.complex)}},
         o, out);
    return kExitOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Twisted homology of equivariant chain complexes under unitary representations", "twisthom"};
    app.require_subcommand(1);

    auto add_complex = [&](CLI::App* sub) {
        sub->add_option("--catalog", o.catalog, "catalog entry, e.g. lens:5,1 or free_product_of:t3+t3");
        sub->add_option("--complex", o.complex_file, "complex JSON file");
    };
    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_file, "write JSON here instead of stdout"); };

    auto* homology = app.add_subcommand("homology", "twisted homology dimensions");
    add_complex(homology);
    homology->add_option("--character", o.character, "character g -> zeta_n^(a w(g)), given as n:a");
    homology->add_option("--trivial", o.trivial, "trivial representation of this dimension");
    homology->add_option("--rep", o.rep_file, "representation JSON file");
    homology->add_option("--phi", o.phi, "generator weights w for --character (default all 1)");
    add_out(homology);

    auto* acyclify = app.add_subcommand("acyclify", "certify acyclicity along a fibered grading");
    add_complex(acyclify);
    acyclify->add_option("--phi", o.phi, "grading as comma-separated generator images")->required();
    add_out(acyclify);

    auto* search = app.add_subcommand("search", "find torsion characters that make the complex acyclic");
    add_complex(search);
    add_out(search);

    auto* verify = app.add_subcommand("verify", "run the seeded lemma suites");
    verify->add_option("--seed", o.seed, "seed for randomized suites");
    verify->add_option("--suite", o.suite, "run only this suite")->check(CLI::IsMember(suite_names()));
    verify->add_flag("--corrupt-fixture", o.corrupt_fixture)->group("");
    add_out(verify);

    auto* catalog = app.add_subcommand("catalog", "list catalog entries or show one");
    catalog->add_option("entry", o.entry, "entry to show, e.g. lens:5,2");
    add_out(catalog);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitError;
    }

    try {
        if (homology->parsed()) return cmd_homology(o, out);
        if (acyclify->parsed()) return cmd_acyclify(o, out, err);
        if (search->parsed()) return cmd_search(o, out, err);
        if (verify->parsed()) return cmd_verify(o, out);
        if (catalog->parsed()) return cmd_catalog(o, out);
    } catch (const GroupMismatch& e) {
        err << "group mismatch: " << e.what() << "\n";
    } catch (const BoundaryError& e) {
        err << "boundary error: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
    }
    return kExitError;
}

} // namespace twisthom
