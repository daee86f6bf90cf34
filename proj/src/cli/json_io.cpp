#include "twisthom/cli/json_io.hpp"

#include "twisthom/errors.hpp"

#include <fstream>

namespace twisthom {

namespace {

[[noreturn]] void bad(const std::string& what, const Json& j) {
    std::string dump = j.dump();
    if (dump.size() > 60) dump = dump.substr(0, 57) + "...";
    throw InputError(what + ": " + dump);
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"", j);
    return j.at(key);
}

long long_from_json(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer", j);
    return j.get<long>();
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    if (j.is_string()) {
        Rational r = rational_from_json(j);
        if (!r.is_integer()) bad("expected an integer", j);
        return r.numerator();
    }
    bad("expected an integer", j);
}

const Json& array(const Json& j, const char* what) {
    if (!j.is_array()) bad(std::string("expected ") + what, j);
    return j;
}

template <class T, class F>
Json matrix_json(const Matrix<T>& m, F f) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(f(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// Rows of a rows x cols matrix; an empty list stands for any 0-row matrix.
template <class T, class F>
Matrix<T> matrix_from_json(const Json& j, size_t rows, size_t cols, F f) {
    array(j, "a matrix (list of rows)");
    if (j.size() != rows && !(rows == 0 && j.empty())) bad("matrix should have " + std::to_string(rows) + " rows", j);
    Matrix<T> m(rows, cols);
    for (size_t i = 0; i < rows; ++i) {
        const Json& row = array(j[i], "a matrix row");
        if (row.size() != cols) bad("matrix row should have " + std::to_string(cols) + " entries", row);
        for (size_t k = 0; k < cols; ++k) m(i, k) = f(row[k]);
    }
    return m;
}

} // namespace

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.get<long long>()), Integer(1));
    if (!j.is_string()) bad("expected a rational string \"a/b\"", j);
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::exception&) {
        bad("malformed rational", j);
    }
}

Json to_json(const CycloNumber& x) {
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_json(c));
    return Json{{"conductor", x.conductor()}, {"coeffs", coeffs}};
}

CycloNumber cyclo_from_json(const Json& j) {
    if (j.is_number_integer() || j.is_string()) return CycloNumber(rational_from_json(j));
    long n = long_from_json(field(j, "conductor"));
    if (n < 1) bad("conductor must be positive", j);
    std::vector<Rational> coeffs;
    for (const auto& c : array(field(j, "coeffs"), "a coefficient list")) coeffs.push_back(rational_from_json(c));
    return CycloNumber(n, std::move(coeffs));
}

Json to_json(const LaurentPoly& p) {
    Json terms = Json::object();
    for (const auto& [e, c] : p.terms()) terms[std::to_string(e)] = to_json(c);
    return Json{{"terms", terms}};
}

LaurentPoly poly_from_json(const Json& j) {
    const Json& terms = field(j, "terms");
    if (!terms.is_object()) bad("terms must be an object", j);
    std::map<long, Rational> out;
    for (const auto& [k, v] : terms.items()) {
        long e;
        try {
            size_t used = 0;
            e = std::stol(k, &used);
            if (used != k.size()) throw std::invalid_argument(k);
        } catch (const std::exception&) {
            bad("exponent keys must be integers", j);
        }
        out[e] += rational_from_json(v);
    }
    return LaurentPoly::from_terms(out);
}

Json to_json(const Word& w) { return Json(w.codes()); }

Word word_from_json(const Json& j) {
    std::vector<int> codes;
    for (const auto& c : array(j, "a word (list of signed generator numbers)")) {
        long v = long_from_json(c);
        if (v == 0) bad("generator numbers start at 1", j);
        codes.push_back(static_cast<int>(v));
    }
    return Word(codes);
}

Json to_json(const GroupPresentation& p) {
    Json rels = Json::array();
    for (const auto& r : p.relators()) rels.push_back(to_json(r));
    return Json{{"generators", p.num_generators()}, {"relators", rels}};
}

GroupPresentation group_from_json(const Json& j) {
    long n = long_from_json(field(j, "generators"));
    if (n < 0) bad("generator count must be non-negative", j);
    std::vector<Word> rels;
    if (j.contains("relators"))
        for (const auto& r : array(j.at("relators"), "a relator list")) rels.push_back(word_from_json(r));
    return GroupPresentation(static_cast<int>(n), std::move(rels));
}

Json to_json(const PermAction& a) { return Json(a.images()); }

PermAction action_from_json(const Json& j) {
    std::vector<std::vector<int>> images;
    for (const auto& img : array(j, "a list of image arrays")) {
        std::vector<int> v;
        for (const auto& x : array(img, "an image array")) v.push_back(static_cast<int>(long_from_json(x)));
        images.push_back(std::move(v));
    }
    return PermAction(std::move(images));
}

IntGrading grading_from_json(const Json& j) {
    IntGrading g;
    for (const auto& x : array(j, "a grading (integer list)")) g.images.push_back(long_from_json(x));
    return g;
}

Json to_json(const EquivariantComplex& c) {
    Json bds = Json::array();
    for (const auto& d : c.boundaries())
        bds.push_back(matrix_json(d, [](const GroupRingElement& e) {
            Json terms = Json::array();
            for (const auto& [w, coef] : e.terms()) {
                Json pair = Json::array();
                if (coef.fits_int64()) pair.push_back(coef.to_int64());
                else pair.push_back(coef.str());
                pair.push_back(to_json(w));
                terms.push_back(std::move(pair));
            }
            return terms;
        }));
    return Json{{"group", to_json(c.group())}, {"ranks", c.ranks()}, {"boundaries", bds}};
}

EquivariantComplex complex_from_json(const Json& j) {
    GroupPresentation g = group_from_json(field(j, "group"));
    std::vector<int> ranks;
    for (const auto& r : array(field(j, "ranks"), "a rank list")) {
        long v = long_from_json(r);
        if (v < 0) bad("ranks must be non-negative", j);
        ranks.push_back(static_cast<int>(v));
    }
    if (ranks.empty()) bad("complex needs at least one chain group", j);
    const Json& bds = array(field(j, "boundaries"), "a list of boundary matrices");
    if (bds.size() + 1 != ranks.size())
        bad("complex with " + std::to_string(ranks.size()) + " chain groups needs " +
                std::to_string(ranks.size() - 1) + " boundary matrices",
            bds);
    std::vector<RingMatrix> mats;
    for (size_t k = 0; k < bds.size(); ++k)
        mats.push_back(matrix_from_json<GroupRingElement>(
            bds[k], static_cast<size_t>(ranks[k]), static_cast<size_t>(ranks[k + 1]), [](const Json& e) {
                GroupRingElement x;
                for (const auto& pair : array(e, "a list of [coeff, word] pairs")) {
                    if (!pair.is_array() || pair.size() != 2) bad("group-ring term must be [coeff, word]", pair);
                    x += GroupRingElement(word_from_json(pair[1]), integer_from_json(pair[0]));
                }
                return x;
            }));
    return EquivariantComplex(std::move(g), std::move(ranks), std::move(mats));
}

Json to_json(const UnitaryRep& r) {
    Json gens = Json::array();
    for (const auto& m : r.generator_images())
        gens.push_back(matrix_json(m, [](const CycloNumber& x) { return to_json(x); }));
    return Json{{"dim", r.dim()}, {"conductor", r.conductor()}, {"generators", gens},
                {"provenance", provenance_name(r.provenance())}};
}

UnitaryRep rep_from_json(const Json& j, const GroupPresentation& group) {
    long dim = long_from_json(field(j, "dim"));
    if (dim < 1) bad("dim must be at least 1", j);
    long conductor = j.contains("conductor") ? long_from_json(j.at("conductor")) : 1;
    RepProvenance prov =
        j.contains("provenance") ? parse_provenance(j.at("provenance").get<std::string>()) : RepProvenance::explicit_images;
    std::vector<CycloMatrix> images;
    for (const auto& m : array(field(j, "generators"), "a list of generator matrices"))
        images.push_back(matrix_from_json<CycloNumber>(m, static_cast<size_t>(dim), static_cast<size_t>(dim),
                                                       [](const Json& x) { return cyclo_from_json(x); }));
    return UnitaryRep(group, static_cast<size_t>(dim), std::move(images), prov, conductor);
}

Json to_json(const HomologyReport& r) { return Json{{"dims", r.dims}, {"euler", r.euler}, {"acyclic", r.acyclic}}; }

Json to_json(const TorsionData& td) {
    Json degs = Json::array();
    for (size_t i = 0; i < td.degrees.size(); ++i) {
        Json polys = Json::array();
        for (const auto& p : td.degrees[i].torsion_polys) polys.push_back(to_json(p));
        degs.push_back(Json{{"degree", i}, {"free_rank", td.degrees[i].free_rank}, {"torsion_polys", polys}});
    }
    return Json{{"degrees", degs}};
}

Json to_json(const AcyclicityCertificate& cert) {
    return Json{{"z_order", cert.z_order},
                {"z_power", cert.z_power},
                {"torsion", to_json(cert.torsion)},
                {"dims", cert.report.dims},
                {"verified", cert.report.acyclic}};
}

Json to_json(const SuiteReport& r) {
    Json j{{"name", r.name}, {"instances", r.instances}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.passed()) j["first_failure"] = r.first_failure;
    return j;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + " is not valid JSON: " + e.what());
    }
}

} // namespace twisthom
