#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "tequi/bounds.hpp"
#include "tequi/discrepancy.hpp"
#include "tequi/experiments.hpp"
#include "tequi/int_polynomial.hpp"
#include "tequi/orbit.hpp"
#include "tequi/test_function.hpp"

namespace tequi {

using Json = nlohmann::json;

// Whole-file text IO.  Reading a missing or unreadable path throws
// DegenerateInput; writing creates or truncates.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Polynomial file: one line "d: c_0 c_1 ... c_d" with decimal big-integer
// tokens (see IntPolynomial::parse_text).
IntPolynomial load_polynomial(const std::string& path);

// Orbit spec JSON:
//   {"mode": "single",      "poly": "2: -2 0 1", "root_index": 0}
//   {"mode": "product",     "polys": ["2: -2 0 1", "3: -3 0 0 1"]}
//   {"mode": "closed_form", "primes": [17, 19]}
//   {"mode": "explicit",    "tuples": [[[re, im], ...], ...],
//                           "degrees": [d_1, ...], "leading": [c_1, ...]}
// Leading coefficients accept numbers or decimal strings (big integers).
// Shape violations throw DegenerateInput.
OrbitSpec orbit_spec_from_json(const Json& j);
OrbitSpec load_orbit_spec(const std::string& path);

// Corpus file: a JSON array of orbit specs.  An empty array is degenerate.
std::vector<OrbitSpec> load_orbit_corpus(const std::string& path);

// Test-function JSON:
//   {"variant": "character",      "n": [1, 0], "t": [0.5, 0.0]}
//   {"variant": "radial_profile", "gamma": 0.5, "N": 1}
//   {"variant": "holder_radial",  "gamma": 0.5, "N": 1}
//   {"variant": "gaussian",       "n0": [1]}
//   {"variant": "angular_table",  "N": 1,
//    "table": [{"n": [1], "re": 1.0, "im": 0.0}, ...]}
TestFunction function_from_json(const Json& j);
TestFunction load_function(const std::string& path);

// JSON renderers.  Keys are emitted in sorted order and doubles in
// shortest-round-trip form, so a fixed input renders byte-identically.
Json orbit_summary_json(const GaloisOrbit& orbit);
Json degree_report_json(const GaloisOrbit& orbit, PNorm p);
Json bound_report_json(const BoundReport& r);
Json height_report_json(const HeightReport& r);
Json discrepancy_json(const GaloisOrbit& orbit, const DiscrepancyResult& r);
Json verify_report_json(const VerifyReport& r);

// CSV renderers.  Both start with the schema line "# torus-equidist v1" and
// print doubles to 12 significant digits.  Sweep right-hand-side columns are
// named rhs_<name> after the entries of the first row.
std::string sweep_csv(const std::vector<SweepRow>& rows);
std::string discrepancy_csv(const std::vector<DiscrepancySweepRow>& rows);

}  // namespace tequi
