#include "tequi/io.hpp"

#include <fstream>
#include <sstream>

#include "tequi/errors.hpp"
#include "tequi/util.hpp"

namespace tequi {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DegenerateInput("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DegenerateInput("cannot write file: " + path);
    out << content;
    if (!out) throw DegenerateInput("short write to file: " + path);
}

IntPolynomial load_polynomial(const std::string& path) {
    return IntPolynomial::parse_text(read_text_file(path));
}

namespace {

// j.at with a DegenerateInput wrapper so malformed spec files surface as
// input-contract violations rather than raw JSON exceptions.
const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DegenerateInput(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

template <typename T>
T field_as(const Json& j, const char* key) {
    try {
        return field(j, key).get<T>();
    } catch (const Json::exception&) {
        throw DegenerateInput(std::string("field \"") + key + "\" has the wrong shape");
    }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return field_as<T>(j, key);
}

mpz_class parse_leading(const Json& v) {
    if (v.is_number_integer()) return mpz_class(v.get<long>());
    if (v.is_string()) {
        try {
            return mpz_class(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw DegenerateInput("leading coefficient is not a decimal integer");
        }
    }
    throw DegenerateInput("leading coefficients must be integers or decimal strings");
}

}  // namespace

OrbitSpec orbit_spec_from_json(const Json& j) {
    OrbitSpec spec;
    const std::string mode = field_as<std::string>(j, "mode");
    if (mode == "single") {
        spec.mode = OrbitMode::SingleNumber;
        spec.N = 1;
        // Accept "poly" or an equivalent one-element "polys" list.
        if (j.contains("poly")) {
            spec.polys = {IntPolynomial::parse_text(field_as<std::string>(j, "poly"))};
        } else {
            const auto texts = field_as<std::vector<std::string>>(j, "polys");
            if (texts.size() != 1)
                throw DegenerateInput("a single-number orbit takes exactly one polynomial");
            spec.polys = {IntPolynomial::parse_text(texts.front())};
        }
        spec.root_index = field_or<int>(j, "root_index", 0);
    } else if (mode == "product") {
        spec.mode = OrbitMode::ProductOfCoprimeDegrees;
        for (const std::string& text : field_as<std::vector<std::string>>(j, "polys"))
            spec.polys.push_back(IntPolynomial::parse_text(text));
        spec.N = static_cast<int>(spec.polys.size());
    } else if (mode == "closed_form") {
        spec.mode = OrbitMode::ClosedFormXdMinusD;
        spec.primes = field_as<std::vector<long>>(j, "primes");
        spec.N = static_cast<int>(spec.primes.size());
    } else if (mode == "explicit") {
        spec.mode = OrbitMode::ExplicitTuples;
        const Json& tuples = field(j, "tuples");
        if (!tuples.is_array() || tuples.empty())
            throw DegenerateInput("explicit orbits need a nonempty tuple array");
        for (const Json& tup : tuples) {
            if (!tup.is_array() || tup.empty())
                throw DegenerateInput("each orbit tuple must be a nonempty array of (re, im) pairs");
            std::vector<std::complex<double>> point;
            for (const Json& coord : tup) {
                if (!coord.is_array() || coord.size() != 2)
                    throw DegenerateInput("each coordinate must be a [re, im] pair");
                point.emplace_back(coord.at(0).get<double>(), coord.at(1).get<double>());
            }
            spec.tuples.push_back(std::move(point));
        }
        spec.N = static_cast<int>(spec.tuples.front().size());
        spec.degrees = field_as<std::vector<int>>(j, "degrees");
        const Json& leading = field(j, "leading");
        if (!leading.is_array())
            throw DegenerateInput("leading coefficients must form an array");
        for (const Json& v : leading) spec.leading.push_back(parse_leading(v));
    } else {
        throw DegenerateInput("unknown orbit mode \"" + mode + "\"");
    }
    const int declared = field_or<int>(j, "N", spec.N);
    if (declared != spec.N)
        throw DegenerateInput("declared dimension disagrees with the orbit data");
    return spec;
}

OrbitSpec load_orbit_spec(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw DegenerateInput("orbit spec is not valid JSON: " + std::string(e.what()));
    }
    return orbit_spec_from_json(j);
}

std::vector<OrbitSpec> load_orbit_corpus(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw DegenerateInput("corpus is not valid JSON: " + std::string(e.what()));
    }
    if (!j.is_array() || j.empty()) throw DegenerateInput("corpus must be a nonempty JSON array");
    std::vector<OrbitSpec> specs;
    for (const Json& entry : j) specs.push_back(orbit_spec_from_json(entry));
    return specs;
}

TestFunction function_from_json(const Json& j) {
    const std::string variant = field_as<std::string>(j, "variant");
    if (variant == "character")
        return character(field_as<std::vector<long>>(j, "n"),
                         field_as<std::vector<double>>(j, "t"));
    if (variant == "radial_profile")
        return radial_profile(field_as<double>(j, "gamma"), field_or<int>(j, "N", 1));
    if (variant == "holder_radial")
        return holder_radial(field_as<double>(j, "gamma"), field_or<int>(j, "N", 1));
    if (variant == "gaussian") return gaussian_character(field_as<std::vector<long>>(j, "n0"));
    if (variant == "angular_table") {
        std::vector<AngularEntry> entries;
        const Json& table = field(j, "table");
        if (!table.is_array() || table.empty())
            throw DegenerateInput("angular tables need a nonempty entry array");
        for (const Json& e : table)
            entries.push_back({field_as<std::vector<long>>(e, "n"),
                               {field_as<double>(e, "re"), field_or<double>(e, "im", 0.0)}});
        return angular_table(std::move(entries), field_as<int>(j, "N"));
    }
    throw DegenerateInput("unknown test-function variant \"" + variant + "\"");
}

TestFunction load_function(const std::string& path) {
    Json j;
    try {
        j = Json::parse(read_text_file(path));
    } catch (const Json::exception& e) {
        throw DegenerateInput("test-function spec is not valid JSON: " + std::string(e.what()));
    }
    return function_from_json(j);
}

namespace {

const char* mode_name(OrbitMode m) {
    switch (m) {
        case OrbitMode::SingleNumber: return "single";
        case OrbitMode::ProductOfCoprimeDegrees: return "product";
        case OrbitMode::ExplicitTuples: return "explicit";
        case OrbitMode::ClosedFormXdMinusD: return "closed_form";
    }
    return "?";
}

const char* pnorm_name(PNorm p) {
    switch (p) {
        case PNorm::One: return "1";
        case PNorm::Two: return "2";
        case PNorm::Inf: return "inf";
    }
    return "?";
}

Json box_json(const TorusBox& box) {
    Json arcs = Json::array();
    for (const TorusArc& a : box.arcs) arcs.push_back({{"start", a.start}, {"length", a.length}});
    return Json{{"arcs", std::move(arcs)},
                {"convention", box.convention == ArcConvention::Closed ? "closed" : "half_open"}};
}

}  // namespace

Json orbit_summary_json(const GaloisOrbit& orbit) {
    Json degrees = Json::array();
    for (int jx = 0; jx < orbit.dim(); ++jx) degrees.push_back(orbit.coord_degree(jx));
    return Json{{"mode", mode_name(orbit.mode())},
                {"N", orbit.dim()},
                {"size", orbit.size()},
                {"coord_degrees", std::move(degrees)},
                {"height", orbit.height()},
                {"log_sum", orbit_log_sum(orbit)}};
}

Json degree_report_json(const GaloisOrbit& orbit, PNorm p) {
    const DegreeReport gd = generalized_degree(orbit, p);
    return Json{{"p", pnorm_name(p)},
                {"D", gd.D},
                {"height", orbit.height()},
                {"h_D", gd.h_D}};
}

Json bound_report_json(const BoundReport& r) {
    Json parts = Json::object();
    for (const auto& [k, v] : r.parts) parts[k] = v;
    Json constants = Json::object();
    for (const auto& [k, v] : r.constants) constants[k] = v;
    Json cutoffs = Json::object();
    for (const auto& [k, v] : r.cutoffs) cutoffs[k] = v;
    Json j{{"kind", r.kind},
           {"rhs_total", r.rhs_total},
           {"parts", std::move(parts)},
           {"constants", std::move(constants)},
           {"cutoffs", std::move(cutoffs)},
           {"satisfied", r.satisfied}};
    if (r.measured) j["measured"] = *r.measured;
    return j;
}

Json height_report_json(const HeightReport& r) {
    Json roots = Json::array();
    for (const std::complex<double>& z : r.roots) roots.push_back({z.real(), z.imag()});
    Json expsum = Json::array();
    for (const ExpSumRow& e : r.expsum)
        expsum.push_back({{"n", e.n}, {"value", e.value}, {"bound", e.bound}});
    return Json{{"degree", r.degree},
                {"log_mahler", r.log_mahler},
                {"height", r.height},
                {"D", r.D},
                {"h_D", r.h_D},
                {"roots", std::move(roots)},
                {"expsum", std::move(expsum)}};
}

Json discrepancy_json(const GaloisOrbit& orbit, const DiscrepancyResult& r) {
    Json j{{"size", orbit.size()},
           {"value", r.value},
           {"witness", box_json(r.witness)},
           {"half_open_value", r.half_open_value},
           {"half_open_witness", box_json(r.half_open_witness)}};
    if (r.etk_value) j["etk_value"] = *r.etk_value;
    if (r.height_bound) j["height_bound"] = *r.height_bound;
    return j;
}

Json verify_report_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const VerifyCheck& c : r.checks)
        checks.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"margin", c.margin}, {"detail", c.detail}});
    return Json{{"all_pass", r.all_pass}, {"checks", std::move(checks)}};
}

namespace {

constexpr const char* kSchemaLine = "# torus-equidist v1\n";

std::string join_primes(const std::vector<long>& primes) {
    std::string out;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(primes[i]);
    }
    return out;
}

}  // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::string out = kSchemaLine;
    out += "k,primes,size,h,D,h_D,measured,trunc_slack";
    if (!rows.empty())
        for (const auto& [name, v] : rows.front().rhs) out += ",rhs_" + name;
    out += ",lower_target,ratio_power,ratio_lower\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.k) + ',' + join_primes(r.primes) + ',' + std::to_string(r.size);
        for (double v : {r.h, r.D, r.h_D, r.measured, r.trunc_slack})
            out += ',' + format_sig12(v);
        for (const auto& [name, v] : r.rhs) out += ',' + format_sig12(v);
        for (double v : {r.lower_target, r.ratio_power, r.ratio_lower})
            out += ',' + format_sig12(v);
        out += '\n';
    }
    return out;
}

std::string discrepancy_csv(const std::vector<DiscrepancySweepRow>& rows) {
    std::string out = kSchemaLine;
    out += "primes,size,delta_closed,delta_half_open,M,M_is_auto,etk,height_bound,h,D,h_D\n";
    for (const DiscrepancySweepRow& r : rows) {
        out += join_primes(r.primes) + ',' + std::to_string(r.size);
        out += ',' + format_sig12(r.delta_closed) + ',' + format_sig12(r.delta_half_open);
        out += ',' + std::to_string(r.M) + ',' + (r.M_is_auto ? std::string("1") : std::string("0"));
        out += ',' + format_sig12(r.etk);
        out += ',' + (r.height_bound ? format_sig12(*r.height_bound) : std::string());
        for (double v : {r.h, r.D, r.h_D}) out += ',' + format_sig12(v);
        out += '\n';
    }
    return out;
}

}  // namespace tequi
