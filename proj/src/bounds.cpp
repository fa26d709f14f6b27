#include "tequi/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "tequi/errors.hpp"
#include "tequi/quadrature.hpp"

namespace tequi {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kRadiusCap = 8589934592.0;  // 2^33

double norm1(const std::vector<long>& n) {
    double acc = 0.0;
    for (long v : n) acc += std::abs(static_cast<double>(v));
    return acc;
}

void require_same_dim(const TestFunction& f, const GaloisOrbit& orbit) {
    if (f.N != orbit.dim())
        throw DegenerateInput("test function and orbit dimensions differ");
}

}  // namespace

MonotoneEnvelope envelope_power(double gamma) {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw InvalidEnvelope("power envelope needs a positive finite exponent");
    MonotoneEnvelope e;
    e.kind = EnvelopeKind::Power;
    e.gamma = gamma;
    return e;
}

MonotoneEnvelope envelope_log() {
    MonotoneEnvelope e;
    e.kind = EnvelopeKind::Log;
    return e;
}

MonotoneEnvelope envelope_table(std::vector<std::pair<double, double>> knots) {
    if (knots.empty()) throw InvalidEnvelope("envelope table needs at least one knot");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
            throw InvalidEnvelope("envelope knots must be finite");
        if (knots[i].first < 0.0) throw InvalidEnvelope("envelope knots need nonnegative x");
        if (knots[i].second < 0.0) throw InvalidEnvelope("envelope values must be nonnegative");
        if (i > 0 && !(knots[i].first > knots[i - 1].first))
            throw InvalidEnvelope("envelope knots must be strictly increasing in x");
    }
    MonotoneEnvelope e;
    e.kind = EnvelopeKind::UserTable;
    e.knots = std::move(knots);
    return e;
}

double envelope_value(const MonotoneEnvelope& e, double x) {
    switch (e.kind) {
        case EnvelopeKind::Power:
            return std::pow(x, e.gamma);
        case EnvelopeKind::Log:
            return std::log(2.0 + x);
        case EnvelopeKind::UserTable: {
            const auto& k = e.knots;
            if (x <= k.front().first) return k.front().second;
            if (x >= k.back().first) return k.back().second;
            std::size_t hi = 1;
            while (k[hi].first < x) ++hi;
            const auto& a = k[hi - 1];
            const auto& b = k[hi];
            const double w = (x - a.first) / (b.first - a.first);
            return a.second + w * (b.second - a.second);
        }
    }
    std::abort();
}

void validate_truncation_envelope(const MonotoneEnvelope& e) {
    switch (e.kind) {
        case EnvelopeKind::Power:
            // value/sqrt(x) = x^(gamma - 1/2) must be nonincreasing.
            if (e.gamma > 0.5)
                throw InvalidEnvelope("truncation envelope exponent must be at most 1/2");
            return;
        case EnvelopeKind::Log:
            // log(2+x)/sqrt(x) is nonincreasing: its derivative has the sign
            // of x/(2+x) - log(2+x)/2, whose maximum over x > 0 is negative.
            return;
        case EnvelopeKind::UserTable: {
            const auto& k = e.knots;
            if (!(k.front().second > 0.0))
                throw InvalidEnvelope("truncation envelope tables need positive values");
            for (std::size_t i = 1; i < k.size(); ++i) {
                const double x0 = k[i - 1].first, v0 = k[i - 1].second;
                const double x1 = k[i].first, v1 = k[i].second;
                const double m = (v1 - v0) / (x1 - x0);
                if (m < 0.0)
                    throw InvalidEnvelope("truncation envelope must be nondecreasing");
                // On a linear segment, value/sqrt(x) is nonincreasing exactly
                // when 2 m x <= value(x) throughout, worst at x = x1.
                if (m * (x0 + x1) > v0)
                    throw InvalidEnvelope(
                        "truncation envelope table grows faster than sqrt(x) allows");
            }
            return;
        }
    }
    std::abort();
}

void validate_weight_envelope(const MonotoneEnvelope& e) {
    switch (e.kind) {
        case EnvelopeKind::Power:
            if (e.gamma >= 1.0)
                throw InvalidEnvelope("cutoff schedule needs value(x)/x -> 0: exponent below 1");
            return;
        case EnvelopeKind::Log:
            return;
        case EnvelopeKind::UserTable: {
            const auto& k = e.knots;
            for (std::size_t i = 1; i < k.size(); ++i)
                if (k[i].second < k[i - 1].second)
                    throw InvalidEnvelope("cutoff schedule must be nondecreasing");
            // The constant extension past the last knot gives value(x)/x -> 0.
            return;
        }
    }
    std::abort();
}

ModulusOfContinuity holder_omega(double L, double gamma) {
    if (!(L > 0.0) || !std::isfinite(L))
        throw InvalidModulus("Holder modulus needs a positive finite constant");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw InvalidModulus("Holder modulus needs an exponent in (0, 1]");
    ModulusOfContinuity w;
    w.kind = ModulusKind::Holder;
    w.L = L;
    w.gamma = gamma;
    return w;
}

ModulusOfContinuity concave_table(std::vector<std::pair<double, double>> knots) {
    if (knots.empty()) throw InvalidModulus("modulus table needs at least one knot");
    if (knots.front().first != 0.0 || knots.front().second != 0.0)
        throw InvalidModulus("modulus table must start at (0, 0)");
    double prev_slope = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < knots.size(); ++i) {
        if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
            throw InvalidModulus("modulus knots must be finite");
        if (i == 0) continue;
        if (!(knots[i].first > knots[i - 1].first))
            throw InvalidModulus("modulus knots must be strictly increasing in x");
        if (knots[i].second < knots[i - 1].second)
            throw InvalidModulus("modulus values must be nondecreasing");
        const double m =
            (knots[i].second - knots[i - 1].second) / (knots[i].first - knots[i - 1].first);
        if (m > prev_slope) throw InvalidModulus("modulus table must be concave");
        prev_slope = m;
    }
    ModulusOfContinuity w;
    w.kind = ModulusKind::ConcaveTable;
    w.knots = std::move(knots);
    return w;
}

double modulus_value(const ModulusOfContinuity& w, double x) {
    if (x <= 0.0) return 0.0;
    switch (w.kind) {
        case ModulusKind::Holder:
            return w.L * std::pow(x, w.gamma);
        case ModulusKind::ConcaveTable: {
            const auto& k = w.knots;
            if (x >= k.back().first) {
                // Extend with the final slope: every concave continuation lies
                // below this ray, so the extension is a sound upper estimate.
                const std::size_t m = k.size();
                const double slope =
                    m == 1 ? 0.0
                           : (k[m - 1].second - k[m - 2].second) /
                                 (k[m - 1].first - k[m - 2].first);
                return k.back().second + slope * (x - k.back().first);
            }
            std::size_t hi = 1;
            while (k[hi].first < x) ++hi;
            const auto& a = k[hi - 1];
            const auto& b = k[hi];
            const double t = (x - a.first) / (b.first - a.first);
            return a.second + t * (b.second - a.second);
        }
    }
    std::abort();
}

namespace {

// The modulus must dominate |F(theta,s) - F(theta,0)|; only the radial power
// has a named validity condition, the other variants trust the caller.
void validate_modulus_for(const TestFunction& f, const ModulusOfContinuity& w) {
    if (f.variant != FnVariant::HolderRadial) return;
    if (w.kind == ModulusKind::Holder) {
        if (w.gamma != f.gamma || w.L < 1.0)
            throw InvalidModulus(
                "the radial power needs a Holder modulus with matching exponent and L >= 1");
        return;
    }
    // A finite-slope concave table cannot dominate x^g near 0 when g < 1.
    // For g = 1 it dominates the identity exactly when every knot sits on or
    // above it and the extension slope is at least 1.
    if (f.gamma != 1.0)
        throw InvalidModulus("no concave table dominates x^g near 0 for g < 1");
    const auto& k = w.knots;
    for (const auto& knot : k)
        if (knot.second < knot.first)
            throw InvalidModulus("modulus table falls below the radial power");
    const std::size_t m = k.size();
    const double slope =
        m == 1 ? 0.0 : (k[m - 1].second - k[m - 2].second) / (k[m - 1].first - k[m - 2].first);
    if (slope < 1.0) throw InvalidModulus("modulus table falls below the radial power");
}

// Upper bound on surface * Int_R^inf r^(N-1) prof(r) G(r) dr, using
// r^(N-1) prof(r) <= r^(-1-gamma) / (log(20+r^2) (log log(20+r^2))^2).
double profile_weighted_tail(const TestFunction& f, const MonotoneEnvelope& G, double R) {
    const double surface = f.N == 1 ? 2.0 : kTwoPi;
    const double lg = std::log(20.0 + R * R);
    const double llg = std::log(lg);
    switch (G.kind) {
        case EnvelopeKind::Power: {
            if (G.gamma == f.gamma)
                // The integrand is at most 1/(r L(r)); substituting
                // w = log log(20 + r^2) bounds the tail by
                // (1 + 20/R^2)/2 / log log(20 + R^2).
                return surface * (1.0 + 20.0 / (R * R)) / (2.0 * llg);
            const double delta = f.gamma - G.gamma;  // positive: divergence checked upstream
            return surface * std::pow(R, -delta) / (delta * lg * llg * llg);
        }
        case EnvelopeKind::Log:
            // log(2 + r) <= log(20 + r^2) cancels one log factor.
            return surface * std::pow(R, -f.gamma) / (f.gamma * llg * llg);
        case EnvelopeKind::UserTable:
            return G.knots.back().second * profile_tail_bound(f, R);
    }
    std::abort();
}

double profile_weighted_mass(const TestFunction& f, const MonotoneEnvelope& G,
                             const QuadratureConfig& q) {
    if (f.N > 2) throw DimensionUnsupported("profile mass quadrature supports N <= 2");
    if (G.kind == EnvelopeKind::Power && G.gamma > f.gamma)
        throw DivergentConstant("power weight outgrows the profile decay");
    double R = q.radius > 0.0 ? q.radius : 16.0;
    if (q.radius <= 0.0)
        while (profile_weighted_tail(f, G, R) > q.abs_tol / 10.0 && R < kRadiusCap) R *= 2.0;
    const double tail = profile_weighted_tail(f, G, R);
    const double surface = f.N == 1 ? 2.0 : kTwoPi;
    const bool planar = f.N == 2;
    AdaptiveIntegrator integ(q.budget);
    const double ptol = std::min(q.abs_tol / 10.0, 1e-9);
    const double value = integ.integrate_dyadic(
        [&](double r) {
            return surface * (planar ? r : 1.0) * profile_density(f, r) * envelope_value(G, r);
        },
        0.0, R, ptol);
    // Adding the analytic tail keeps the weighted mass an upper estimate even
    // when the slowly converging equal-exponent tail pins R at the cap.
    return value + tail;
}

}  // namespace

double constant_C1(const TestFunction& f, const MonotoneEnvelope& G, const QuadratureConfig& q) {
    validate_truncation_envelope(G);
    switch (f.variant) {
        case FnVariant::Character:
            throw NonIntegrableTransform(
                "a pure character's transform is a point mass in t; use a one-entry angular "
                "table for the t = 0 case");
        case FnVariant::HolderRadial:
            throw NonIntegrableTransform("the radial power has no integrable transform");
        case FnVariant::AngularTable: {
            // All mass sits at t = 0.
            double acc = 0.0;
            for (const AngularEntry& e : f.table) acc += std::abs(e.coeff);
            return acc * envelope_value(G, 0.0);
        }
        case FnVariant::GaussianCharacter: {
            if (f.N > 2) throw DimensionUnsupported("Gaussian mass quadrature supports N <= 2");
            AdaptiveIntegrator integ(q.budget);
            const double ptol = std::min(q.abs_tol / 10.0, 1e-9);
            if (f.N == 1)
                // Int e^{-pi t^2} G(|t|) dt; mass beyond radius 16 is below
                // e^{-256 pi}, far under any tolerance.
                return integ.integrate_dyadic(
                    [&](double t) { return 2.0 * std::exp(-kPi * t * t) * envelope_value(G, t); },
                    0.0, 16.0, ptol);
            // For N = 2 the sup-norm radius a has density 4 e^{-pi a^2} erf(sqrt(pi) a),
            // the derivative of erf(sqrt(pi) a)^2, so the weighted mass is exact.
            return integ.integrate_dyadic(
                [&](double a) {
                    return 4.0 * std::exp(-kPi * a * a) * std::erf(std::sqrt(kPi) * a) *
                           envelope_value(G, a);
                },
                0.0, 16.0, ptol);
        }
        case FnVariant::FourierRadialProfile:
            return profile_weighted_mass(f, G, q);
    }
    std::abort();
}

double constant_C2(const TestFunction& f, const MonotoneEnvelope& H) {
    validate_truncation_envelope(H);
    switch (f.variant) {
        case FnVariant::Character:
        case FnVariant::GaussianCharacter: {
            const double n1 = norm1(f.n);
            return n1 > 0.0 ? envelope_value(H, n1) : 0.0;
        }
        case FnVariant::HolderRadial:
        case FnVariant::FourierRadialProfile:
            // The torus restriction is constant, so no nonzero coefficients.
            return 0.0;
        case FnVariant::AngularTable: {
            double acc = 0.0;
            for (const AngularEntry& e : f.table) {
                const double n1 = norm1(e.n);
                if (n1 > 0.0) acc += std::abs(e.coeff) * envelope_value(H, n1);
            }
            return acc;
        }
    }
    std::abort();
}

double holder_seminorm(const TestFunction& f, double gamma) {
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw DegenerateInput("Holder seminorm needs an exponent in (0, 1]");
    switch (f.variant) {
        case FnVariant::AngularTable:
            return 0.0;  // no dependence on the radial variable
        case FnVariant::HolderRadial:
            if (f.gamma != gamma)
                throw DivergentConstant(
                    "sup |s|^g / |s|^g' is infinite when the exponents differ");
            return 1.0;
        case FnVariant::Character: {
            double t2 = 0.0;
            for (double v : f.t) t2 += v * v;
            t2 = std::sqrt(t2);
            if (t2 == 0.0) return 0.0;
            if (gamma == 1.0) return kTwoPi * t2;  // sup of 2 sin(u)/u at u -> 0
            // sup_s 2|sin(pi t.s)| / |s|^g = 2 (pi |t|_2)^g max sin(u)/u^g over
            // (0, pi/2]; the maximizer solves u cos u = g sin u.
            double lo = 1e-12, hi = kPi / 2.0 - 1e-12;
            for (int i = 0; i < 200; ++i) {
                const double u = 0.5 * (lo + hi);
                (u * std::cos(u) > gamma * std::sin(u) ? lo : hi) = u;
            }
            const double u = 0.5 * (lo + hi);
            return 2.0 * std::pow(kPi * t2, gamma) * std::sin(u) / std::pow(u, gamma);
        }
        case FnVariant::GaussianCharacter: {
            // sup_r (1 - e^{-pi r^2}) / r^g.  The stationarity condition
            // 2 pi r^2 e^{-pi r^2} = g (1 - e^{-pi r^2}) has its unique root
            // after the left side's peak at r = sqrt((2-g)/(2 pi)).
            double lo = std::sqrt((2.0 - gamma) / kTwoPi), hi = 10.0;
            for (int i = 0; i < 200; ++i) {
                const double r = 0.5 * (lo + hi);
                const double e = std::exp(-kPi * r * r);
                (kTwoPi * r * r * e > gamma * (1.0 - e) ? lo : hi) = r;
            }
            const double r = 0.5 * (lo + hi);
            return (1.0 - std::exp(-kPi * r * r)) / std::pow(r, gamma);
        }
        case FnVariant::FourierRadialProfile:
            throw UnknownHolderConstant("the radial profile has no closed-form Holder constant");
    }
    std::abort();
}

namespace {

struct Heights {
    double h;
    double hD;
};

Heights orbit_heights(const GaloisOrbit& orbit) {
    return {orbit.height(), generalized_degree(orbit, PNorm::One).h_D};
}

std::optional<double> measured_error(const TestFunction& f, const GaloisOrbit& orbit,
                                     const QuadratureConfig& q) {
    if (f.variant == FnVariant::FourierRadialProfile) {
        if (orbit.mode() == OrbitMode::ClosedFormXdMinusD)
            return radial_profile_error(f.gamma, orbit, q);
        return std::nullopt;  // no pointwise values away from the closed-form family
    }
    return equidist_error(f, orbit);
}

BoundReport finish(const char* kind, std::vector<std::pair<std::string, double>> parts,
                   std::vector<std::pair<std::string, double>> constants,
                   std::vector<std::pair<std::string, double>> cutoffs, const TestFunction& f,
                   const GaloisOrbit& orbit, const QuadratureConfig& q) {
    BoundReport r;
    r.kind = kind;
    r.parts = std::move(parts);
    r.constants = std::move(constants);
    r.cutoffs = std::move(cutoffs);
    r.rhs_total = 0.0;
    for (const auto& p : r.parts) r.rhs_total += p.second;
    r.measured = measured_error(f, orbit, q);
    r.satisfied = !r.measured || *r.measured <= r.rhs_total + 1e-9;
    return r;
}

}  // namespace

BoundReport envelope_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                 const MonotoneEnvelope& G, const MonotoneEnvelope& H,
                                 const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    validate_truncation_envelope(G);
    validate_truncation_envelope(H);
    const Heights ht = orbit_heights(orbit);
    const double C1 = constant_C1(f, G, q);
    const double C2 = constant_C2(f, H);
    const double M2 = 1.0 / (24.0 * ht.hD);
    const double angular = C2 > 0.0 ? C2 / envelope_value(H, M2) : 0.0;
    std::vector<std::pair<std::string, double>> cutoffs;
    double defect = 0.0;
    if (ht.h > 0.0) {
        const double M1 = 1.0 / (8.0 * kPi * ht.h);
        defect = 2.0 * C1 / envelope_value(G, M1);
        cutoffs.emplace_back("radial_M", M1);
    }
    // h = 0 puts the whole orbit on the unit polycircle: the radial defect
    // vanishes and the first term is the G -> infinity limit, 0.
    cutoffs.emplace_back("angular_M", M2);
    return finish("envelope", {{"defect_part", defect}, {"angular_part", angular}},
                  {{"C1", C1}, {"C2", C2}}, std::move(cutoffs), f, orbit, q);
}

BoundReport power_error_bound(const TestFunction& f, const GaloisOrbit& orbit, double gamma,
                              const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw DegenerateInput("power rate needs an exponent in (0, 1/2]");
    const MonotoneEnvelope P = envelope_power(gamma);
    const Heights ht = orbit_heights(orbit);
    const double C1 = constant_C1(f, P, q);
    const double C2 = constant_C2(f, P);
    const double C = 2.0 * std::pow(8.0 * kPi, gamma) * C1 + std::pow(24.0, gamma) * C2;
    const double rhs = C * std::pow(ht.hD, gamma);
    std::vector<std::pair<std::string, double>> cutoffs;
    if (ht.h > 0.0) cutoffs.emplace_back("radial_M", 1.0 / (8.0 * kPi * ht.h));
    cutoffs.emplace_back("angular_M", 1.0 / (24.0 * ht.hD));
    return finish("power", {{"power_part", rhs}}, {{"C1", C1}, {"C2", C2}, {"C", C}},
                  std::move(cutoffs), f, orbit, q);
}

BoundReport tail_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                             const MonotoneEnvelope& W, const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    validate_weight_envelope(W);
    const double l1 = fourier_l1(f, q);
    const Heights ht = orbit_heights(orbit);
    const double y = envelope_value(W, 1.0 / ht.hD);
    const double mass = 2.0 * (std::sqrt(8.0 * kPi) + std::sqrt(6.0)) * std::sqrt(ht.hD * y) * l1;
    const double nu = nu_tail(f, y, q);
    return finish("tail", {{"mass_part", mass}, {"tail_part", 3.0 * nu}},
                  {{"fhat_l1", l1}, {"nu", nu}}, {{"tail_cutoff", y}}, f, orbit, q);
}

BoundReport modulus_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                const ModulusOfContinuity& omega, const MonotoneEnvelope& H,
                                const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    validate_modulus_for(f, omega);
    validate_truncation_envelope(H);
    const Heights ht = orbit_heights(orbit);
    const double C2 = constant_C2(f, H);
    const double M2 = 1.0 / (24.0 * ht.hD);
    const double angular = C2 > 0.0 ? C2 / envelope_value(H, M2) : 0.0;
    const double mod = modulus_value(omega, 2.0 * ht.h);
    return finish("modulus", {{"modulus_part", mod}, {"angular_part", angular}}, {{"C2", C2}},
                  {{"angular_M", M2}}, f, orbit, q);
}

BoundReport holder_error_bound(const TestFunction& f, const GaloisOrbit& orbit, double gamma,
                               const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    if (!(gamma > 0.0 && gamma <= 0.5))
        throw DegenerateInput("power rate needs an exponent in (0, 1/2]");
    const double L = holder_seminorm(f, gamma);
    const double S = constant_C2(f, envelope_power(gamma));
    const double C = std::pow(2.0, gamma) * L + std::pow(24.0, gamma) * S;
    const Heights ht = orbit_heights(orbit);
    const double rhs = C * std::pow(ht.hD, gamma);
    return finish("holder", {{"power_part", rhs}},
                  {{"L", L}, {"angular_sum", S}, {"C", C}}, {}, f, orbit, q);
}

BoundReport modulus_tail_error_bound(const TestFunction& f, const GaloisOrbit& orbit,
                                     const ModulusOfContinuity& omega, const MonotoneEnvelope& W,
                                     const QuadratureConfig& q) {
    require_same_dim(f, orbit);
    validate_modulus_for(f, omega);
    validate_weight_envelope(W);
    const double l1 = nu_tail_F0(f, -1.0, q);
    const Heights ht = orbit_heights(orbit);
    const double y = envelope_value(W, 1.0 / ht.hD);
    const double mod = modulus_value(omega, 2.0 * ht.h);
    const double mass = 2.0 * std::sqrt(6.0) * std::sqrt(ht.hD * y) * l1;
    const double nu0 = nu_tail_F0(f, y, q);
    return finish("modulus-tail",
                  {{"modulus_part", mod}, {"mass_part", mass}, {"tail_part", nu0}},
                  {{"f0hat_l1", l1}, {"nu0", nu0}}, {{"tail_cutoff", y}}, f, orbit, q);
}

double expsum_bound(const GaloisOrbit& orbit, long n) {
    if (orbit.dim() != 1)
        throw DegenerateInput("the character-sum bound applies to a single algebraic number");
    if (n == 0) throw DegenerateInput("the character-sum bound needs a nonzero frequency");
    return exp_sum_height_bound(orbit.height(), orbit.coord_degree(0), n);
}

}  // namespace tequi
