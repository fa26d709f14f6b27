// torus-equidist: heights, orbits, equidistribution error bounds, box
// discrepancy, and reproducible sharpness sweeps from the command line.
//
// Exit codes: 0 success, 1 invariant or bound failure, 2 usage or input error.

#include <cstdio>
#include <iostream>
#include <string>
#include <typeinfo>
#include <vector>

#include "CLI11.hpp"
#include "tequi/errors.hpp"
#include "tequi/io.hpp"

namespace {

using namespace tequi;

// stdout by default; --out redirects to a file.
void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty())
        std::fputs(body.c_str(), stdout);
    else
        write_text_file(out_path, body);
}

void emit_json(const Json& j, const std::string& out_path) { emit(j.dump(2) + "\n", out_path); }

double bound_exponent(const TestFunction& f) {
    const bool radial =
        f.variant == FnVariant::HolderRadial || f.variant == FnVariant::FourierRadialProfile;
    return radial ? std::min(f.gamma, 0.5) : 0.5;
}

BoundReport dispatch_bound(const std::string& kind, const TestFunction& f,
                           const GaloisOrbit& orbit, double gamma, const QuadratureConfig& q) {
    if (kind == "envelope") {
        const MonotoneEnvelope G = default_truncation_envelope(f);
        return envelope_error_bound(f, orbit, G, G, q);
    }
    if (kind == "power") return power_error_bound(f, orbit, gamma, q);
    if (kind == "tail") return tail_error_bound(f, orbit, default_weight_envelope(), q);
    if (kind == "modulus")
        return modulus_error_bound(f, orbit, default_modulus(f), default_truncation_envelope(f), q);
    if (kind == "holder") return holder_error_bound(f, orbit, gamma, q);
    if (kind == "modulus-tail")
        return modulus_tail_error_bound(f, orbit, default_modulus(f), default_weight_envelope(), q);
    throw DegenerateInput("unknown bound kind \"" + kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"computational toolkit for heights, Galois orbits, equidistribution error "
                 "bounds, and box discrepancy on the algebraic torus"};
    app.require_subcommand(1);

    std::string poly_path, spec_path, fn_path, corpus_path, out_path, pnorm = "1";
    std::string bound_kind;
    double gamma = 0.5;
    int N = 1, kmin = 4, kmax = 12;
    std::vector<long> primes;
    long expl_M = 0, cap = 512, sweep_cap = 4096;
    bool auto_M = false, inject = false;
    std::uint64_t seed = 2026;
    int random_polys = 30;
    QuadratureConfig quad;
    quad.abs_tol = 0.05;  // radial-profile quadrature at report accuracy

    CLI::App* c_height = app.add_subcommand(
        "height", "Mahler measure, height, roots, and character-sum bounds of a polynomial");
    c_height->add_option("polyfile", poly_path, "polynomial file: \"d: c_0 c_1 ... c_d\"")
        ->required();
    c_height->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* c_orbit =
        app.add_subcommand("orbit", "summary invariants of a Galois orbit spec (JSON)");
    c_orbit->add_option("specfile", spec_path, "orbit spec JSON file")->required();
    c_orbit->add_option("--out", out_path, "write the JSON summary here instead of stdout");

    CLI::App* c_dgen =
        app.add_subcommand("dgen", "generalized degree and adjusted height of an orbit");
    c_dgen->add_option("specfile", spec_path, "orbit spec JSON file")->required();
    c_dgen->add_option("--p", pnorm, "norm for the degree minimization")
        ->check(CLI::IsMember({"1", "2", "inf"}));
    c_dgen->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* c_bound = app.add_subcommand(
        "bound", "equidistribution error bound report for a test function and an orbit");
    c_bound
        ->add_option("kind", bound_kind,
                     "one of: envelope, power, tail, modulus, holder, modulus-tail")
        ->required();
    c_bound->add_option("fnfile", fn_path, "test-function JSON file")->required();
    c_bound->add_option("specfile", spec_path, "orbit spec JSON file")->required();
    CLI::Option* gamma_opt = c_bound->add_option(
        "--gamma", gamma, "power/Holder exponent (default: the function's own, capped at 1/2)");
    c_bound->add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance");
    c_bound->add_option("--radius", quad.radius, "explicit profile truncation radius");
    c_bound->add_option("--budget", quad.budget, "quadrature evaluation budget");
    c_bound->add_option("--out", out_path, "write the JSON report here instead of stdout");

    const auto add_sweep_options = [&](CLI::App* c, int def_kmax) {
        c->add_option("--gamma", gamma, "radial exponent in (0, 1/2]");
        c->add_option("--N", N, "torus dimension");
        c->add_option("--kmin", kmin, "first dyadic window index");
        c->add_option("--kmax", kmax, "last dyadic window index")->default_val(def_kmax);
        c->add_option("--primes", primes,
                      "explicit primes (groups of N per row) instead of dyadic windows");
        c->add_option("--out", out_path, "write the CSV here instead of stdout");
    };
    CLI::App* c_s51 = app.add_subcommand(
        "sharpness51", "radial-profile error sweep over dyadic prime windows (CSV)");
    add_sweep_options(c_s51, 12);
    c_s51->add_option("--abs-tol", quad.abs_tol, "quadrature absolute tolerance");
    c_s51->add_option("--radius", quad.radius, "explicit profile truncation radius");
    c_s51->add_option("--budget", quad.budget, "quadrature evaluation budget");
    CLI::App* c_s52 = app.add_subcommand(
        "sharpness52", "closed-form radial power error sweep over dyadic prime windows (CSV)");
    add_sweep_options(c_s52, 12);

    CLI::App* c_disc =
        app.add_subcommand("discrepancy", "exact box discrepancy and majorants of one orbit");
    c_disc->add_option("specfile", spec_path, "orbit spec JSON file")->required();
    CLI::Option* m_opt =
        c_disc->add_option("--M", expl_M, "character-sum truncation order")->check(CLI::NonNegativeNumber);
    c_disc->add_flag("--auto-M", auto_M, "choose the truncation order from the adjusted height")
        ->excludes(m_opt);
    c_disc->add_option("--cap", cap, "largest orbit size evaluated exactly");
    c_disc->add_option("--out", out_path, "write the JSON report here instead of stdout");

    CLI::App* c_dsweep = app.add_subcommand(
        "discrepancy-sweep", "exact discrepancy and majorants over dyadic prime windows (CSV)");
    add_sweep_options(c_dsweep, 8);
    c_dsweep->add_option("--cap", sweep_cap, "largest orbit size evaluated exactly");

    CLI::App* c_verify =
        app.add_subcommand("verify", "run the property-verification corpus (JSON report)");
    c_verify->add_option("corpus", corpus_path, "orbit corpus JSON file (array of specs)");
    c_verify->add_option("--seed", seed, "seed for the random corpus draws");
    c_verify->add_option("--random-polys", random_polys, "random polynomials per check");
    c_verify->add_flag("--inject-bound-defect", inject,
                       "deliberately break the character-sum bound (harness self-test)");
    c_verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_height->parsed()) {
            emit_json(height_report_json(run_height_report(load_polynomial(poly_path))), out_path);
        } else if (c_orbit->parsed()) {
            emit_json(orbit_summary_json(build_orbit(load_orbit_spec(spec_path))), out_path);
        } else if (c_dgen->parsed()) {
            const PNorm p =
                pnorm == "1" ? PNorm::One : (pnorm == "2" ? PNorm::Two : PNorm::Inf);
            emit_json(degree_report_json(build_orbit(load_orbit_spec(spec_path)), p), out_path);
        } else if (c_bound->parsed()) {
            const TestFunction f = load_function(fn_path);
            const GaloisOrbit orbit = build_orbit(load_orbit_spec(spec_path));
            if (gamma_opt->count() == 0) gamma = bound_exponent(f);
            const BoundReport r = dispatch_bound(bound_kind, f, orbit, gamma, quad);
            emit_json(bound_report_json(r), out_path);
            if (!r.satisfied) {
                std::cerr << "bound violated: measured error exceeds the right-hand side\n";
                return 1;
            }
        } else if (c_s51->parsed() || c_s52->parsed()) {
            ExperimentConfig cfg;
            cfg.id = c_s51->parsed() ? "sharpness51" : "sharpness52";
            cfg.gamma = gamma;
            cfg.N = N;
            cfg.kmin = kmin;
            cfg.kmax = kmax;
            cfg.primes = primes;
            cfg.quad = quad;
            emit(sweep_csv(c_s51->parsed() ? run_sharpness_51(cfg) : run_sharpness_52(cfg)),
                 out_path);
        } else if (c_disc->parsed()) {
            const GaloisOrbit orbit = build_orbit(load_orbit_spec(spec_path));
            DiscrepancyResult r = discrepancy_report(orbit, cap);
            long used_M = 0;
            bool used_auto = false;
            if (m_opt->count() > 0) {
                used_M = expl_M;
                r.etk_value = etk_bound(orbit, expl_M);
            } else if (auto_M) {
                const AutoM am = etk_auto_M(orbit);  // PreconditionHeight -> usage error
                used_M = am.M;
                used_auto = true;
                r.etk_value = am.bound;
            } else {
                try {
                    used_M = etk_auto_M(orbit).M;
                    used_auto = true;
                } catch (const PreconditionHeight&) {
                    used_M = 1;
                }
            }
            Json j = discrepancy_json(orbit, r);
            j["M"] = used_M;
            j["M_is_auto"] = used_auto;
            emit_json(j, out_path);
            if (r.height_bound && !(r.value <= *r.height_bound + 1e-9))
                throw Error("exact discrepancy violates the height-only bound");
        } else if (c_dsweep->parsed()) {
            ExperimentConfig cfg;
            cfg.id = "discrepancy-sweep";
            cfg.N = N;
            cfg.kmin = kmin;
            cfg.kmax = kmax;
            cfg.primes = primes;
            cfg.cap = sweep_cap;
            emit(discrepancy_csv(run_discrepancy_sweep(cfg)), out_path);
        } else if (c_verify->parsed()) {
            VerifyConfig cfg;
            cfg.seed = seed;
            cfg.random_polys = random_polys;
            cfg.inject_bound_defect = inject;
            if (!corpus_path.empty()) cfg.corpus = load_orbit_corpus(corpus_path);
            const VerifyReport rep = run_verify(cfg);
            emit_json(verify_report_json(rep), out_path);
            if (!rep.all_pass) {
                for (const VerifyCheck& c : rep.checks)
                    if (!c.pass) std::cerr << "failed check: " << c.name << "\n";
                return 1;
            }
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        // Plain Error marks a violated invariant; every subclass is an
        // input-contract or computability failure.
        return typeid(e) == typeid(Error) ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
