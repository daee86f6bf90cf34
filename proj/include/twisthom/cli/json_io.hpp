#pragma once

#include "twisthom/alex/alexander.hpp"
#include "twisthom/chain/complex.hpp"
#include "twisthom/grp/perm_action.hpp"
#include "twisthom/rep/unitary_rep.hpp"
#include "twisthom/twist/suites.hpp"
#include "twisthom/twist/twisted.hpp"

#include <json.hpp>

#include <string>

namespace twisthom {

using Json = nlohmann::ordered_json;

// Every *_from_json throws InputError on malformed input.

Json to_json(const Rational& x);  // "a/b", or "a" when integral
Rational rational_from_json(const Json& j);

Json to_json(const CycloNumber& x);  // {"conductor": n, "coeffs": [...]}
CycloNumber cyclo_from_json(const Json& j);

Json to_json(const LaurentPoly& p);  // {"terms": {"exp": "a/b"}}
LaurentPoly poly_from_json(const Json& j);

Json to_json(const Word& w);  // signed 1-based generator numbers
Word word_from_json(const Json& j);

Json to_json(const GroupPresentation& p);  // {"generators": n, "relators": [word, ...]}
GroupPresentation group_from_json(const Json& j);

Json to_json(const PermAction& a);
PermAction action_from_json(const Json& j);

IntGrading grading_from_json(const Json& j);

// {"group": ..., "ranks": [...], "boundaries": [matrix, ...]}; a matrix is a
// list of rows and an entry a list of [coeff, word] pairs.
Json to_json(const EquivariantComplex& c);
EquivariantComplex complex_from_json(const Json& j);

// {"dim": k, "conductor": n, "generators": [matrix, ...], "provenance": "..."}
Json to_json(const UnitaryRep& r);
UnitaryRep rep_from_json(const Json& j, const GroupPresentation& group);

Json to_json(const HomologyReport& r);
Json to_json(const TorsionData& td);
Json to_json(const AcyclicityCertificate& cert);
Json to_json(const SuiteReport& r);

// Reads and parses a JSON file; InputError if it is missing or not JSON.
Json read_json_file(const std::string& path);

} // namespace twisthom
