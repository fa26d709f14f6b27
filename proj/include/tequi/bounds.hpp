#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tequi/orbit.hpp"
#include "tequi/test_function.hpp"

namespace tequi {

// Nondecreasing weight used in the truncated-defect bounds.  One type serves
// three roles: the radial truncation weight G, the angular truncation weight
// H (both need value/sqrt(x) nonincreasing), and the cutoff schedule W (needs
// value(x)/x -> 0).  Role hypotheses are checked by the validators below, not
// at construction.
enum class EnvelopeKind { Power, Log, UserTable };

struct MonotoneEnvelope {
    EnvelopeKind kind = EnvelopeKind::Power;
    double gamma = 0.5;                            // Power: x^gamma
    std::vector<std::pair<double, double>> knots;  // UserTable: (x, value)
};

MonotoneEnvelope envelope_power(double gamma);
MonotoneEnvelope envelope_log();  // log(2 + x)
// Piecewise-linear table, clamped to the first value below the first knot and
// to the last value beyond the last knot.  Knot abscissae must be
// nonnegative and strictly increasing, values finite and nonnegative.
MonotoneEnvelope envelope_table(std::vector<std::pair<double, double>> knots);

// Evaluates the envelope; x may be +infinity (Power/Log give +infinity, a
// table gives its final value).
double envelope_value(const MonotoneEnvelope& e, double x);

// Truncation role (G or H): nondecreasing and value/sqrt(x) nonincreasing.
// Power needs gamma <= 1/2; a table needs positive values and, per linear
// segment of slope m over [x0, x1], m*(x0 + x1) <= value(x0).  Throws
// InvalidEnvelope.
void validate_truncation_envelope(const MonotoneEnvelope& e);

// Cutoff-schedule role (W): nondecreasing with value(x)/x -> 0.  Power needs
// gamma < 1; a table needs nondecreasing values (the constant extension
// already gives value(x)/x -> 0).  Throws InvalidEnvelope.
void validate_weight_envelope(const MonotoneEnvelope& e);

// Modulus of continuity for the defect of a test function off the unit
// polycircle: nondecreasing, concave, omega(0+) = 0.
enum class ModulusKind { Holder, ConcaveTable };

struct ModulusOfContinuity {
    ModulusKind kind = ModulusKind::Holder;
    double L = 1.0;     // Holder: L * x^gamma
    double gamma = 1.0;
    std::vector<std::pair<double, double>> knots;  // ConcaveTable
};

ModulusOfContinuity holder_omega(double L, double gamma);  // L > 0, gamma in (0,1]
// Concave piecewise-linear modulus.  The first knot must be (0, 0), values
// nondecreasing, slopes nonincreasing; beyond the last knot the final slope
// extends the table (every concave extension lies below that ray, so the
// extension is a sound upper estimate).  A single knot {(0,0)} is the zero
// modulus, for functions with no dependence on the radial variable.
ModulusOfContinuity concave_table(std::vector<std::pair<double, double>> knots);

double modulus_value(const ModulusOfContinuity& w, double x);

// One evaluated right-hand side together with everything that went into it.
// `parts` are the summands of rhs_total, `constants` the function-dependent
// factors, `cutoffs` the internal truncation thresholds (recorded for
// transparency; the proofs fix them, they are not tunable).  `measured` is
// the equidistribution error when the pair (function, orbit) admits one; a
// report without a measurement is vacuously satisfied.
struct BoundReport {
    std::string kind;
    double rhs_total = 0.0;
    std::vector<std::pair<std::string, double>> parts;
    std::vector<std::pair<std::string, double>> constants;
    std::vector<std::pair<std::string, double>> cutoffs;
    std::optional<double> measured;
    bool satisfied = true;  // !measured || *measured <= rhs_total + 1e-9
};

// Radially weighted transform mass: sum over angular frequencies n of
// Int |F^(n,t)| G(||t||_inf) dt.  Closed or quadrature forms per variant; the
// radial-profile case integrates to a truncation radius and adds the analytic
// tail majorant, so the result is a sound upper estimate.  For N = 2 profiles
// the integrand uses G(||t||_2) >= G(||t||_inf), again an upper estimate.
// Throws NonIntegrableTransform (character, radial power), DivergentConstant
// (Power weight growing faster than the profile decays), DimensionUnsupported
// (N > 2 quadrature).
double constant_C1(const TestFunction& f, const MonotoneEnvelope& G,
                   const QuadratureConfig& q = {});

// Angularly weighted coefficient mass of the torus restriction:
// sum over n != 0 of |F^_0(n)| H(||n||_1).  Exact finite sum for every
// variant (repeated table frequencies are summed per entry, an upper estimate
// by the triangle inequality).
double constant_C2(const TestFunction& f, const MonotoneEnvelope& H);

// Smallest L with |F(theta, s) - F(theta, 0)| <= L ||s||_2^gamma, anchored at
// the torus section.  Closed forms: radial power (1 when gamma matches, else
// DivergentConstant), angular table (0), character (0 for t = 0, else a
// one-dimensional maximization solved by bisection), Gaussian factor
// (bisection).  The radial profile has no closed form: UnknownHolderConstant.
double holder_seminorm(const TestFunction& f, double gamma);

// Truncated-defect bound with caller-chosen truncation envelopes:
//   2 C1(F,G) / G(1/(8 pi h))  +  C2(F,H) / H(1/(24 h_D)).
// When h = 0 every orbit point lies on the unit polycircle and the radial
// defect vanishes, so the first term is 0 (the limit of the formula, G being
// unbounded along the power/log hypotheses).
BoundReport envelope_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                 const MonotoneEnvelope& G, const MonotoneEnvelope& H,
                                 const QuadratureConfig& q = {});

// Pure power-rate form: rhs = C(F) h_D^gamma with
//   C(F) = 2 (8 pi)^gamma C1(F, x^gamma) + 24^gamma C2(F, x^gamma),
// gamma in (0, 1/2].
BoundReport power_error_bound(const TestFunction& f, const GaloisOrbit& orbit, double gamma,
                              const QuadratureConfig& q = {});

// Integrable-transform bound with cutoff schedule W:
//   2 (sqrt(8 pi) + sqrt(6)) sqrt(h_D W(1/h_D)) ||F^||_1 + 3 nu_F^(W(1/h_D)).
BoundReport tail_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                             const MonotoneEnvelope& W, const QuadratureConfig& q = {});

// Modulus-of-continuity bound: omega(2h) + C2(F,H) / H(1/(24 h_D)).  The
// modulus must dominate the function's radial defect; this is checked for the
// radial power (which needs a Holder modulus of matching exponent and L >= 1)
// and taken on faith for the other variants.
BoundReport modulus_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                const ModulusOfContinuity& omega, const MonotoneEnvelope& H,
                                const QuadratureConfig& q = {});

// Holder-constant power form: rhs = C(F) h_D^gamma with
//   C(F) = 2^gamma L_gamma(F) + 24^gamma sum |F^_0(n)| ||n||_1^gamma.
BoundReport holder_error_bound(const TestFunction& f, const GaloisOrbit& orbit, double gamma,
                               const QuadratureConfig& q = {});

// Modulus + angular-tail bound:
//   omega(2h) + 2 sqrt(6) sqrt(h_D W(1/h_D)) ||F^_0||_1 + nu_F^_0(W(1/h_D)).
BoundReport modulus_tail_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                     const ModulusOfContinuity& omega, const MonotoneEnvelope& W,
                                     const QuadratureConfig& q = {});

// Character-sum bound for a single algebraic number (dimension-1 orbit):
// 2 sqrt(6|n|) (h + log(2d)/(3d))^(1/2), n != 0.
double expsum_bound(const GaloisOrbit& orbit, long n);

}  // namespace tequi
