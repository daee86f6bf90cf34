#include "catch_amalgamated.hpp"

#include "twisthom/chain/catalog.hpp"
#include "twisthom/cli/cli.hpp"
#include "twisthom/cli/json_io.hpp"
#include "twisthom/errors.hpp"
#include "twisthom/rep/constructions.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace twisthom;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "twisthom");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const Json& j) {
    auto path = std::filesystem::temp_directory_path() / ("twisthom_test_" + name);
    std::ofstream(path) << j.dump();
    return path.string();
}

using V = std::vector<long>;

} // namespace

TEST_CASE("homology command") {
    auto r = run({"homology", "--catalog", "lens:5,1", "--character", "5:1"});
    CHECK(r.code == 0);
    CHECK(r.json()["dims"] == Json(V{0, 0, 0, 0}));
    CHECK(r.json()["acyclic"] == true);
    r = run({"homology", "--catalog", "t3", "--trivial", "1"});
    CHECK(r.code == 0);
    CHECK(r.json()["dims"] == Json(V{1, 3, 3, 1}));
    r = run({"homology", "--catalog", "lens:5,1", "--character", "5:0"});
    CHECK(r.json()["dims"] == Json(V{1, 0, 0, 1}));
    r = run({"homology", "--catalog", "s1xs2", "--character", "2:1"});
    CHECK(r.json()["dims"] == Json(V{0, 0, 0, 0}));
    r = run({"homology", "--catalog", "t3", "--character", "2:1", "--phi", "1,0,0"});
    CHECK(r.json()["dims"] == Json(V{0, 0, 0, 0}));
}

TEST_CASE("homology command errors have distinct diagnostics") {
    auto r = run({"homology", "--catalog", "lens:5,1", "--character", "3:1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("input error") != std::string::npos);
    r = run({"homology", "--catalog", "lens:5,1"});
    CHECK(r.code == 1);
    r = run({"homology", "--complex", "/nonexistent/file.json", "--trivial", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("cannot open") != std::string::npos);

    auto lens = catalog_complex("lens", {5, 1}).complex;
    auto t3 = catalog_complex("t3").complex;
    auto rep_file = temp_file("t3_rep.json", to_json(trivial_rep(t3.group(), 1)));
    r = run({"homology", "--catalog", "lens:5,1", "--rep", rep_file});
    CHECK(r.code == 1);
    CHECK(r.err.find("input error") != std::string::npos);

    auto cj = to_json(lens);
    cj["boundaries"][1][0][0] = Json::array({Json::array({1, Json::array()})});
    auto bad_file = temp_file("bad_complex.json", cj);
    r = run({"homology", "--complex", bad_file, "--character", "5:1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("boundary error") != std::string::npos);

    std::ofstream(std::filesystem::temp_directory_path() / "twisthom_test_garbage.json") << "{not json";
    r = run({"homology", "--complex", (std::filesystem::temp_directory_path() / "twisthom_test_garbage.json").string(),
             "--trivial", "1"});
    CHECK(r.code == 1);
    CHECK(r.err.find("not valid JSON") != std::string::npos);
    CHECK(run({"bogus"}).code == 1);
    CHECK(run({}).code == 1);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("complex and representation files") {
    auto q8 = catalog_complex("quaternion_q8").complex;
    auto cfile = temp_file("q8.json", to_json(q8));
    auto rfile = temp_file("q8_rep.json", to_json(quaternion_rep(q8.group())));
    auto r = run({"homology", "--complex", cfile, "--rep", rfile});
    CHECK(r.code == 0);
    CHECK(r.json()["dims"] == Json(V{0, 0, 0, 0}));
    CHECK(r.json()["euler"] == 0);
}

TEST_CASE("acyclify command") {
    auto r = run({"acyclify", "--catalog", "s1xs2", "--phi", "1"});
    CHECK(r.code == 0);
    CHECK(r.json()["z_order"] == 2);
    CHECK(r.json()["verified"] == true);
    r = run({"acyclify", "--catalog", "trefoil_exterior", "--phi", "1,1"});
    CHECK(r.code == 0);
    CHECK(r.json()["z_order"] == 2);
    CHECK(r.json()["torsion"]["degrees"][1]["torsion_polys"][0] == to_json(LaurentPoly::from_coeffs(0, {1, -1, 1})));
    // The 2-torus along (1, 0) has torsion-only Alexander module, so it certifies.
    r = run({"acyclify", "--catalog", "torus2d", "--phi", "1,0"});
    CHECK(r.code == 0);
    r = run({"acyclify", "--catalog", "handlebody:2", "--phi", "1,0"});
    CHECK(r.code == 2);
    CHECK(r.json()["obstruction"]["degree"] == 1);
    CHECK(run({"acyclify", "--catalog", "t3", "--phi", "2,0,0"}).code == 1);
    CHECK(run({"acyclify", "--catalog", "t3"}).code == 1);
}

TEST_CASE("search command") {
    auto r = run({"search", "--catalog", "lens:5,1"});
    CHECK(r.code == 0);
    CHECK(r.json()["acyclifying"].size() == 4);
    r = run({"search", "--catalog", "quaternion_q8"});
    CHECK(r.code == 0);
    CHECK(r.json()["acyclifying"].size() == 3);
    r = run({"search", "--catalog", "t3"});
    CHECK(r.code == 2);
    CHECK(r.json()["acyclifying"].empty());
}

TEST_CASE("verify command") {
    auto r = run({"verify", "--suite", "shapiro", "--seed", "7"});
    CHECK(r.code == 0);
    CHECK(r.json()["seed"] == 7);
    REQUIRE(r.json()["suites"].size() == 1);
    CHECK(r.json()["suites"][0]["name"] == "shapiro");
    r = run({"verify", "--corrupt-fixture", "--suite", "euler"});
    CHECK(r.code == 1);
    CHECK(r.json()["suites"][0]["passed"] == false);
    CHECK(run({"verify", "--suite", "h0", "--seed", "3"}).out == run({"verify", "--suite", "h0", "--seed", "3"}).out);
    CHECK(run({"verify", "--suite", "nope"}).code == 1);
    // Hidden flag stays out of the help text.
    CHECK(run({"verify", "--help"}).out.find("corrupt") == std::string::npos);
}

TEST_CASE("catalog command and --out") {
    auto r = run({"catalog"});
    CHECK(r.code == 0);
    CHECK(r.json()["entries"].size() == catalog_names().size());
    r = run({"catalog", "lens:5,2"});
    CHECK(r.json()["expected_trivial_dims"] == Json(V{1, 0, 0, 1}));
    auto c = complex_from_json(r.json()["complex"]);
    CHECK(c.boundaries() == catalog_complex("lens", {5, 2}).complex.boundaries());
    CHECK(run({"catalog", "lens:4,2"}).code == 1);

    auto path = (std::filesystem::temp_directory_path() / "twisthom_test_out.json").string();
    r = run({"homology", "--catalog", "t3", "--trivial", "2", "--out", path});
    CHECK(r.out.empty());
    std::ifstream in(path);
    CHECK(Json::parse(in)["dims"] == Json(V{2, 6, 6, 2}));
}

TEST_CASE("JSON round trips") {
    Rational q(Integer(-3), Integer(7));
    CHECK(rational_from_json(to_json(q)) == q);
    CHECK(to_json(Rational(5)) == "5");
    CHECK(rational_from_json(Json(4)) == Rational(4));
    CycloNumber z = CycloNumber::root_of_unity(12, 5) + CycloNumber(Rational(Integer(1), Integer(2)));
    CHECK(cyclo_from_json(to_json(z)) == z);
    LaurentPoly p = LaurentPoly::from_coeffs(-2, {Rational(1), Rational(0), Rational(Integer(-5), Integer(3))});
    CHECK(poly_from_json(to_json(p)) == p);
    Word w{1, -2, 1, 3};
    CHECK(word_from_json(to_json(w)) == w);
    CHECK(to_json(w) == Json::array({1, -2, 1, 3}));
    for (const char* label : {"t3", "quaternion_q8", "free_product_of:lens:3,1+s1xs2", "point"}) {
        auto c = catalog_lookup(label).complex;
        auto back = complex_from_json(to_json(c));
        CHECK(back.group() == c.group());
        CHECK(back.ranks() == c.ranks());
        CHECK(back.boundaries() == c.boundaries());
    }
    auto g = catalog_complex("lens", {6, 1}).complex.group();
    for (const auto& chi : torsion_characters(g)) {
        auto back = rep_from_json(to_json(chi), g);
        CHECK(back.generator_images() == chi.generator_images());
        CHECK(back.conductor() == chi.conductor());
        CHECK(back.provenance() == chi.provenance());
    }
    PermAction a({{1, 2, 0}, {0, 2, 1}});
    CHECK(action_from_json(to_json(a)).images() == a.images());
    CHECK(grading_from_json(Json::array({1, 0, -1})).images == V{1, 0, -1});

    CHECK_THROWS_AS(rational_from_json(Json("1/0")), InputError);
    CHECK_THROWS_AS(word_from_json(Json::array({0})), InputError);
    CHECK_THROWS_AS(cyclo_from_json(Json{{"coeffs", Json::array()}}), InputError);
    CHECK_THROWS_AS(poly_from_json(Json{{"terms", Json{{"x", "1"}}}}), InputError);
    CHECK_THROWS_AS(complex_from_json(Json{{"group", Json{{"generators", 1}}}, {"ranks", V{1, 1}},
                                           {"boundaries", Json::array()}}),
                    InputError);
    CHECK_THROWS_AS(rep_from_json(Json{{"dim", 2}, {"generators", Json::array({Json::array({Json::array({1})})})}}, g),
                    InputError);
}
