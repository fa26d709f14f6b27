#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tequi/bounds.hpp"
#include "tequi/discrepancy.hpp"
#include "tequi/orbit.hpp"
#include "tequi/quadrature.hpp"
#include "tequi/util.hpp"

namespace tequi {

// The first `count` primes in the dyadic window (2^k, 2^(k+1)), ascending,
// by a deterministic sieve.  Throws DegenerateInput for k outside [1, 22] or
// count < 1 and NoPrimesInWindow when the window is too thin (it never is for
// count <= 2 and k >= 2, but the guard stays).
std::vector<long> primes_in_window(int k, int count);

// Uniform random integer polynomial of the exact degree with coefficients in
// [-coeff_bound, coeff_bound], nonzero leading and trailing coefficients, and
// no repeated complex root.  Rerolls until square-free; throws DegenerateInput
// when 200 rerolls fail (practically unreachable for coeff_bound >= 2).
IntPolynomial random_squarefree_poly(Rng& rng, int degree, long coeff_bound);

// Sweep configuration shared by the experiment drivers.  `primes`, when
// nonempty, overrides the k-range: the list is cut into consecutive groups of
// N, one orbit per group.  `quad.radius == 0` lets profile rows derive a
// truncation radius from the oscillation scale (see run_sharpness_51).
struct ExperimentConfig {
    std::string id;     // which experiment the config feeds (informational)
    double gamma = 0.5; // radial exponent, in (0, 1/2]
    int N = 1;
    int kmin = 4;
    int kmax = 12;
    std::vector<long> primes;  // explicit orbits instead of dyadic windows
    PNorm p = PNorm::One;      // norm used for the generalized degree
    QuadratureConfig quad;
    long cap = 4096;  // exact-discrepancy size cap (sweep rows only)
    std::string out;  // CSV destination; empty leaves output to the caller
};

// One sweep row: the orbit's invariants, the measured equidistribution error,
// every applicable right-hand side, and the lower-rate target
// h_D^gamma / (|log h_D| (log|log h_D|)^2).  Emitting code re-asserts
// measured <= rhs + 1e-9 for every entry and that the ratios are finite.
struct SweepRow {
    int k = 0;  // dyadic window index; 0 for explicit prime groups
    std::vector<long> primes;
    long long size = 0;  // orbit cardinality
    double h = 0.0;
    double D = 0.0;
    double h_D = 0.0;
    double measured = 0.0;     // equidistribution error (see trunc_slack)
    double trunc_slack = 0.0;  // analytic bound on truncated-away mass, 0 when exact
    std::vector<std::pair<std::string, double>> rhs;
    double lower_target = 0.0;
    double ratio_power = 0.0;  // measured / h_D^gamma
    double ratio_lower = 0.0;  // measured / lower_target
};

// Power-rate sweep for the radial-profile function over closed-form prime
// orbits.  Each row integrates the profile error on a truncated domain a
// fixed number of oscillation half-periods wide (measured therefore sits at
// most trunc_slack below the untruncated error, and under the bound a
// fortiori) and compares it against the pure power right-hand side, whose
// rate constant is computed once per sweep.  N in {1, 2}; k caps 20 (N = 1)
// and 9 (N = 2) keep rows at desk scale.
std::vector<SweepRow> run_sharpness_51(const ExperimentConfig& cfg);

// Closed-form sweep for the radial power |s|^gamma over the same orbits: the
// measured error is an exact finite average equal to
// (sum_j (log d_j / d_j)^2)^(gamma/2), asserted to match that closed form to
// 1e-12.  Rows carry the Holder-constant power right-hand side; the ratio
// measured / h_D^gamma is asserted to lie in [1/2, 1 + 1e-9] across the
// sweep, and measured / lower_target >= 1/2 is asserted for k >= 10.
// N caps at 4 (orbit size stays below ~2^22).
std::vector<SweepRow> run_sharpness_52(const ExperimentConfig& cfg);

// One discrepancy row per orbit: exact values under both endpoint
// conventions, the character-sum majorant (automatic order when h_D <= 1/e,
// order 1 otherwise), and the height-only bound when available.  Dominations
// are re-asserted at emit time.
struct DiscrepancySweepRow {
    std::vector<long> primes;
    long long size = 0;
    double delta_closed = 0.0;
    double delta_half_open = 0.0;
    long M = 0;               // character-sum truncation order actually used
    bool M_is_auto = false;   // order chosen from the height (vs fallback 1)
    double etk = 0.0;
    std::optional<double> height_bound;
    double h = 0.0;
    double D = 0.0;
    double h_D = 0.0;
};

std::vector<DiscrepancySweepRow> run_discrepancy_sweep(const ExperimentConfig& cfg);

// Height report for one integer polynomial, read as the minimal polynomial of
// a single algebraic number: Mahler measure, height, roots, the adjusted
// height of the conjugate orbit, and the character-sum bound against the
// measured |exp_sum| for frequencies 1..5.
struct ExpSumRow {
    long n = 0;
    double value = 0.0;  // |exp_sum(orbit, n)|
    double bound = 0.0;  // 2 sqrt(6 n) h_D^(1/2)
};

struct HeightReport {
    int degree = 0;
    double log_mahler = 0.0;
    double height = 0.0;
    double D = 0.0;
    double h_D = 0.0;
    std::vector<std::complex<double>> roots;
    std::vector<ExpSumRow> expsum;
};

HeightReport run_height_report(const IntPolynomial& p);

// Default weights for the bound drivers: power envelopes matched to the
// function (exponent min(gamma, 1/2), or 1/2 for variants without one).
MonotoneEnvelope default_truncation_envelope(const TestFunction& f);
MonotoneEnvelope default_weight_envelope();

// Smallest stock modulus of continuity dominating the variant's radial
// defect: L x^gamma for the radial power, sqrt(pi) x for the Gaussian factor,
// 2 pi |t|_2 x for a character (zero when t = 0), zero for angular tables.
// The radial profile has no stock modulus (UnsupportedVariant).
ModulusOfContinuity default_modulus(const TestFunction& f);

// Property-verification harness.  Runs every check regardless of failures;
// a check that throws is reported failed with the error text.  `corpus`
// replaces the built-in orbit family when nonempty.  `inject_bound_defect`
// deliberately scales the character-sum bound by 1/100 so the harness can be
// seen to fail: the named check goes red and nothing else changes.
struct VerifyConfig {
    std::uint64_t seed = 2026;
    int random_polys = 30;
    bool inject_bound_defect = false;
    std::vector<OrbitSpec> corpus;
};

struct VerifyCheck {
    std::string name;
    bool pass = true;
    // Worst slack among the comparisons the check completed: negative means a
    // comparison failed by that much.  0 when the check is exact or errored
    // (see detail).
    double margin = 0.0;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass = true;
};

VerifyReport run_verify(const VerifyConfig& cfg);

// The built-in verification corpus: seeded random quadratics and cubics, the
// closed-form prime orbits for d in {5, 13, 101}, and the coprime product of
// the degree-2 and degree-3 radicals.
std::vector<OrbitSpec> builtin_corpus(std::uint64_t seed);

}  // namespace tequi
