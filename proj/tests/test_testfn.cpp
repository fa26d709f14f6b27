#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "tequi/errors.hpp"
#include "tequi/orbit.hpp"
#include "tequi/quadrature.hpp"
#include "tequi/test_function.hpp"

using namespace tequi;
using cd = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

OrbitSpec single(std::vector<long> coeffs) {
    OrbitSpec s;
    s.mode = OrbitMode::SingleNumber;
    s.polys = {IntPolynomial::from_coeffs(std::move(coeffs))};
    return s;
}

OrbitSpec product(std::vector<std::vector<long>> coeff_lists) {
    OrbitSpec s;
    s.mode = OrbitMode::ProductOfCoprimeDegrees;
    s.N = static_cast<int>(coeff_lists.size());
    for (auto& c : coeff_lists) s.polys.push_back(IntPolynomial::from_coeffs(std::move(c)));
    return s;
}

OrbitSpec closed_form(std::vector<long> primes) {
    OrbitSpec s;
    s.mode = OrbitMode::ClosedFormXdMinusD;
    s.N = static_cast<int>(primes.size());
    s.primes = std::move(primes);
    return s;
}

// Independent fixed-grid midpoint rule used as a quadrature oracle.
template <typename F>
double midpoint(F f, double a, double b, long panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double acc = 0.0;
    for (long i = 0; i < panels; ++i) acc += f(a + (static_cast<double>(i) + 0.5) * h);
    return acc * h;
}

double profile_at(double r, double gamma, int N) {
    const double lg = std::log(20.0 + r * r);
    const double llg = std::log(lg);
    return std::pow(1.0 + r * r, -(N + gamma) / 2.0) / (lg * llg * llg);
}

}  // namespace

TEST_CASE("adaptive Simpson integrates polynomials and sin exactly enough") {
    AdaptiveIntegrator integ(100000);
    CHECK(integ.integrate([](double x) { return x * x * x; }, 0.0, 1.0, 1e-12) ==
          doctest::Approx(0.25).epsilon(1e-13));
    CHECK(integ.integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, 0.0, 2.0,
                          1e-12) == doctest::Approx(6.0).epsilon(1e-13));
    CHECK(integ.integrate([](double x) { return std::sin(x); }, 0.0, kPi, 1e-11) ==
          doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("dyadic segmentation sees a bump that sparse probing would miss") {
    AdaptiveIntegrator integ(1000000);
    const auto bump = [](double x) { return std::exp(-(x - 13.0) * (x - 13.0)); };
    // Plain Simpson's first three probes (0, 20, 40) all see ~0 here.
    CHECK(integ.integrate_dyadic(bump, 0.0, 40.0, 1e-10) ==
          doctest::Approx(std::sqrt(kPi)).epsilon(1e-9));
    CHECK(integ.integrate_dyadic([](double x) { return std::exp(-x); }, 0.0, 40.0, 1e-10) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("exhausting the evaluation budget throws") {
    AdaptiveIntegrator integ(10);
    CHECK_THROWS_AS(integ.integrate([](double x) { return std::sin(100.0 * x) / (1.0 + x); },
                                    0.0, 50.0, 1e-14),
                    QuadratureBudgetExceeded);
}

TEST_CASE("profile density, tail bound, and derived radius") {
    const auto f = radial_profile(0.5, 1);
    const double lg = std::log(20.0);
    const double llg = std::log(lg);
    CHECK(profile_density(f, 0.0) == doctest::Approx(1.0 / (lg * llg * llg)).epsilon(1e-14));
    CHECK(profile_density(f, 3.0) ==
          doctest::Approx(std::pow(10.0, -0.75) /
                          (std::log(29.0) * std::pow(std::log(std::log(29.0)), 2.0)))
              .epsilon(1e-14));

    // The tail bound decreases and really dominates the tail mass.
    CHECK(profile_tail_bound(f, 8.0) > profile_tail_bound(f, 16.0));
    const double piece = 2.0 * midpoint([&](double r) { return profile_density(f, r); }, 16.0,
                                        4096.0, 400000);
    CHECK(piece < profile_tail_bound(f, 16.0));

    const double R = profile_truncation_radius(f, 1e-3);
    CHECK(profile_tail_bound(f, R) <= 1e-3);
    CHECK(profile_tail_bound(f, R / 2.0) > 1e-3);

    CHECK_THROWS_AS(profile_tail_bound(f, 0.0), DegenerateInput);
    CHECK_THROWS_AS(radial_profile(0.7, 1), DegenerateInput);
    CHECK_THROWS_AS(radial_profile(0.5, 0), DegenerateInput);
}

TEST_CASE("haar integrals have their closed forms") {
    CHECK(haar_integral(character({0, 0}, {0.0, 0.0})) == cd(1.0, 0.0));
    CHECK(haar_integral(character({1, 0}, {0.3, -2.0})) == cd(0.0, 0.0));
    CHECK(haar_integral(holder_radial(0.5, 1)) == cd(0.0, 0.0));
    CHECK(haar_integral(gaussian_character({0})) == cd(1.0, 0.0));
    CHECK(haar_integral(gaussian_character({1})) == cd(0.0, 0.0));
    const auto table = angular_table({{{0}, cd(0.25, -1.0)}, {{2}, cd(3.0, 0.0)}}, 1);
    CHECK(haar_integral(table) == cd(0.25, -1.0));
}

TEST_CASE("haar integral of the radial profile sits between truncated mass and mass+tail") {
    // Oracle: midpoint mass on [0, 4096] brackets the full integral together
    // with the analytic tail bound at 4096.
    const auto f = radial_profile(0.5, 1);
    const double mid =
        2.0 * midpoint([&](double r) { return profile_density(f, r); }, 0.0, 4096.0, 2000000);
    const double haar = haar_integral(f).real();
    CHECK(haar >= mid - 1e-7);
    CHECK(haar <= mid + profile_tail_bound(f, 4096.0) + 1e-7);

    const auto f2 = radial_profile(0.5, 2);
    const double mid2 = 2.0 * kPi *
                        midpoint([&](double r) { return r * profile_density(f2, r); }, 0.0,
                                 4096.0, 2000000);
    const double haar2 = haar_integral(f2).real();
    CHECK(haar2 >= mid2 - 1e-7);
    CHECK(haar2 <= mid2 + profile_tail_bound(f2, 4096.0) + 1e-7);

    CHECK_THROWS_AS(haar_integral(radial_profile(0.5, 3)), DimensionUnsupported);
    QuadratureConfig bad;
    bad.radius = 1.0;  // tail bound at 1 is far above abs_tol/10
    CHECK_THROWS_AS(haar_integral(f, bad), DegenerateInput);
}

TEST_CASE("orbit averages: characters reduce to exponential sums") {
    const auto o = build_orbit(product({{-2, 0, 1}, {-3, 0, 0, 1}}));
    for (std::vector<long> n : {std::vector<long>{1, 0}, {0, 1}, {2, 3}, {-1, 2}}) {
        const cd via_fn = orbit_average(character(n, {0.0, 0.0}), o);
        const cd via_orbit = exp_sum(o, n);
        CHECK(std::abs(via_fn - via_orbit) <= 1e-14);
    }
    // With a nonzero t the distance to the pure sum is exactly the defect.
    const std::vector<long> n{1, 2};
    const std::vector<double> t{0.7, -0.3};
    const cd with_t = orbit_average(character(n, t), o);
    const cd without = exp_sum(o, n);
    CHECK(std::abs(with_t - without) == doctest::Approx(char_defect(o, n, t).value).epsilon(1e-12));
}

TEST_CASE("orbit averages: radial power closed forms") {
    const auto o5 = build_orbit(closed_form({5}));
    CHECK(orbit_average(holder_radial(0.5, 1), o5).real() ==
          doctest::Approx(std::sqrt(std::log(5.0) / 5.0)).epsilon(1e-13));

    const auto o23 = build_orbit(closed_form({2, 3}));
    const double v2 = std::log(2.0) / 2.0;
    const double v3 = std::log(3.0) / 3.0;
    CHECK(orbit_average(holder_radial(0.25, 2), o23).real() ==
          doctest::Approx(std::pow(v2 * v2 + v3 * v3, 0.125)).epsilon(1e-13));

    // Non-constant-|s| orbit: brute-force the finite average.
    const auto og = build_orbit(product({{1, -3, 1}, {-3, 0, 0, 1}}));  // x^2-3x+1, x^3-3
    const auto f = holder_radial(0.5, 2);
    double brute = 0.0;
    for (long long i = 0; i < og.size(); ++i) {
        double s2 = 0.0;
        for (int j = 0; j < 2; ++j) s2 += og.s(i, j) * og.s(i, j);
        brute += std::pow(s2, 0.25);
    }
    brute /= static_cast<double>(og.size());
    CHECK(orbit_average(f, og).real() == doctest::Approx(brute).epsilon(1e-13));
}

TEST_CASE("orbit averages: Gaussian weight factorizes consistently") {
    const auto o = build_orbit(product({{-2, 0, 1}, {-3, 0, 0, 1}}));
    OrbitSpec flat;
    flat.mode = OrbitMode::ExplicitTuples;
    flat.N = 2;
    for (long long i = 0; i < o.size(); ++i) flat.tuples.push_back({o.value(i, 0), o.value(i, 1)});
    flat.degrees = {2, 3};
    const auto oe = build_orbit(flat);
    const auto f = gaussian_character({1, -1});
    CHECK(std::abs(orbit_average(f, o) - orbit_average(f, oe)) <= 1e-12);

    // Unit-circle orbit: s = 0, so the Gaussian weight is 1 and the mean-zero
    // frequency averages to 1 only at n0 = 0.
    const auto cyc = build_orbit(single({1, 1, 1, 1, 1}));  // 5th cyclotomic
    CHECK(orbit_average(gaussian_character({0}), cyc) == cd(1.0, 0.0));
    CHECK(std::abs(orbit_average(gaussian_character({5}), cyc) - cd(1.0, 0.0)) <= 1e-14);
}

TEST_CASE("orbit averages: angular tables and rejections") {
    const auto o = build_orbit(single({-2, 0, 1}));
    const auto table = angular_table({{{1}, cd(2.0, 0.0)}, {{0}, cd(0.0, 1.0)}}, 1);
    const cd expect = cd(2.0, 0.0) * exp_sum(o, {1}) + cd(0.0, 1.0);
    CHECK(std::abs(orbit_average(table, o) - expect) <= 1e-14);

    CHECK_THROWS_AS(orbit_average(radial_profile(0.5, 1), o), UnsupportedVariant);
    CHECK_THROWS_AS(orbit_average(holder_radial(0.5, 2), o), DegenerateInput);
}

TEST_CASE("equidistribution errors") {
    const auto o5 = build_orbit(single({-5, 0, 0, 0, 0, 1}));  // x^5 - 5
    CHECK(equidist_error(character({1}, {0.0}), o5) <= 1e-14);
    for (long n : {1L, 2L, 3L}) {
        const auto f = character({n}, {0.0});
        CHECK(equidist_error(f, o5) ==
              doctest::Approx(std::abs(exp_sum(o5, {n}))).epsilon(1e-12));
    }
    CHECK(equidist_error(holder_radial(0.5, 1), build_orbit(closed_form({5}))) ==
          doctest::Approx(std::sqrt(std::log(5.0) / 5.0)).epsilon(1e-13));
    // Roots of unity have s = 0: every radial function has zero error.
    const auto cyc = build_orbit(single({1, 1, 1, 1, 1}));
    CHECK(equidist_error(holder_radial(0.3, 1), cyc) <= 1e-15);
    CHECK(equidist_error(gaussian_character({0}), cyc) <= 1e-15);
}

TEST_CASE("profile error agrees with a midpoint oracle in one dimension") {
    const auto o5 = build_orbit(closed_form({5}));
    QuadratureConfig q;
    q.radius = 600.0;
    q.abs_tol = 0.05;  // tail bound at 600 is ~3.9e-3 <= abs_tol/10
    const double lib = radial_profile_error(0.5, o5, q);

    const double v = std::log(5.0) / 5.0;
    const double oracle = 4.0 * midpoint(
                                    [&](double t) {
                                        const double sn = std::sin(kPi * v * t);
                                        return profile_at(t, 0.5, 1) * sn * sn;
                                    },
                                    0.0, 600.0, 1000000);
    CHECK(std::fabs(lib - oracle) <= 1e-6);
    CHECK(lib > 0.0);
}

TEST_CASE("profile error in two dimensions matches a planar tensor oracle") {
    const auto o = build_orbit(closed_form({2, 3}));
    QuadratureConfig q;
    q.radius = 40.0;
    q.abs_tol = 0.7;  // tail bound at 40 is ~0.067 <= abs_tol/10
    const double lib = radial_profile_error(0.5, o, q);

    // Direct midpoint grid over the disk of radius 40 (the same truncation the
    // library uses), integrating 2 * prof(|t|) sin^2(pi t.v).
    const double v1 = std::log(2.0) / 2.0;
    const double v2 = std::log(3.0) / 3.0;
    const double h = 0.02;
    const long m = static_cast<long>(40.0 / h);
    double oracle = 0.0;
    for (long i = -m; i < m; ++i) {
        const double t1 = (static_cast<double>(i) + 0.5) * h;
        for (long j = -m; j < m; ++j) {
            const double t2 = (static_cast<double>(j) + 0.5) * h;
            const double r = std::hypot(t1, t2);
            if (r > 40.0) continue;
            const double sn = std::sin(kPi * (v1 * t1 + v2 * t2));
            oracle += profile_at(r, 0.5, 2) * sn * sn;
        }
    }
    oracle *= 2.0 * h * h;
    CHECK(std::fabs(lib - oracle) <= 5e-3);
    CHECK(lib > 0.0);
}

TEST_CASE("profile error vanishes as the prime grows and validates its inputs") {
    QuadratureConfig q;
    q.abs_tol = 0.05;
    const double big = radial_profile_error(0.5, build_orbit(closed_form({10007})), q);
    CHECK(big > 0.0);
    CHECK(big < 0.02);
    const double small = radial_profile_error(0.5, build_orbit(closed_form({5})), q);
    CHECK(small > big);

    CHECK_THROWS_AS(radial_profile_error(0.5, build_orbit(single({-2, 0, 1})), q),
                    UnsupportedVariant);
    CHECK_THROWS_AS(radial_profile_error(0.7, build_orbit(closed_form({5})), q), DegenerateInput);
    CHECK_THROWS_AS(radial_profile_error(0.5, build_orbit(closed_form({2, 3, 5})), q),
                    DimensionUnsupported);
    QuadratureConfig bad;
    bad.radius = 1.0;
    bad.abs_tol = 1e-6;
    CHECK_THROWS_AS(radial_profile_error(0.5, build_orbit(closed_form({5})), bad),
                    DegenerateInput);
    QuadratureConfig tiny;
    tiny.radius = 600.0;
    tiny.abs_tol = 0.05;
    tiny.budget = 100;
    CHECK_THROWS_AS(radial_profile_error(0.5, build_orbit(closed_form({5})), tiny),
                    QuadratureBudgetExceeded);
}

TEST_CASE("Fourier coefficients of the angular restriction") {
    CHECK(fourier_coeff_F0(gaussian_character({1}), {1}) == cd(1.0, 0.0));
    CHECK(fourier_coeff_F0(gaussian_character({1}), {0}) == cd(0.0, 0.0));
    CHECK(fourier_coeff_F0(holder_radial(0.5, 1), {0}) == cd(0.0, 0.0));
    CHECK(fourier_coeff_F0(character({1, 2}, {0.5, 0.5}), {1, 2}) == cd(1.0, 0.0));
    CHECK(fourier_coeff_F0(character({1, 2}, {0.5, 0.5}), {1, 1}) == cd(0.0, 0.0));

    const auto f = radial_profile(0.5, 1);
    CHECK(fourier_coeff_F0(f, {3}) == cd(0.0, 0.0));
    CHECK(fourier_coeff_F0(f, {0}).real() == doctest::Approx(haar_integral(f).real()));

    // Duplicate table entries accumulate.
    const auto table = angular_table({{{2}, cd(1.0, 0.0)}, {{2}, cd(0.0, 1.0)}}, 1);
    CHECK(fourier_coeff_F0(table, {2}) == cd(1.0, 1.0));
    CHECK_THROWS_AS(fourier_coeff_F0(table, {0, 0}), DegenerateInput);
}

TEST_CASE("nu tails: Gaussian mass against an independent oracle") {
    const auto g1 = gaussian_character({1});
    CHECK(nu_tail(g1, 0.0) == doctest::Approx(1.0));
    CHECK(nu_tail(g1, 1.0) == doctest::Approx(1.0));  // the atom itself carries norm 1
    const double lib = nu_tail(g1, 1.5);
    const double oracle =
        2.0 * midpoint([](double t) { return std::exp(-kPi * t * t); }, 0.5, 8.0, 400000);
    CHECK(lib == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(nu_tail(g1, 60.0) == doctest::Approx(0.0));

    // N = 2 diamond complement against a nested midpoint oracle (the inner
    // upper limit is exact, so no boundary raggedness).
    const auto g2 = gaussian_character({0, 0});
    const double lib2 = nu_tail(g2, 1.0);
    const long m = 2000;
    const double h = 1.0 / static_cast<double>(m);
    double inside = 0.0;
    for (long i = 0; i < m; ++i) {
        const double t1 = (static_cast<double>(i) + 0.5) * h;
        const double hi = (1.0 - t1) / static_cast<double>(m);
        double inner = 0.0;
        for (long j = 0; j < m; ++j) {
            const double t2 = (static_cast<double>(j) + 0.5) * hi;
            inner += std::exp(-kPi * (t1 * t1 + t2 * t2));
        }
        inside += inner * hi;
    }
    inside *= 4.0 * h;
    CHECK(lib2 == doctest::Approx(1.0 - inside).epsilon(1e-6));
    CHECK_THROWS_AS(nu_tail(gaussian_character({0, 0, 0}), 1.0), DimensionUnsupported);
}

TEST_CASE("nu tails: radial profile mass and monotonicity") {
    const auto f = radial_profile(0.5, 1);
    const double total = fourier_l1(f);
    CHECK(nu_tail(f, 0.0) == doctest::Approx(total));
    const double inside = 2.0 * midpoint([&](double r) { return profile_density(f, r); }, 0.0,
                                         1.0, 200000);
    CHECK(nu_tail(f, 1.0) == doctest::Approx(total - inside).epsilon(1e-7));

    double prev = total + 1e-12;
    for (double y : {0.0, 0.5, 1.0, 2.0, 4.0, 8.0}) {
        const double cur = nu_tail(f, y);
        CHECK(cur <= prev + 1e-12);
        prev = cur;
    }

    const auto f2 = radial_profile(0.5, 2);
    const double tot2 = fourier_l1(f2);
    const double nu2 = nu_tail(f2, 1.0);
    CHECK(nu2 < tot2);
    CHECK(nu2 > 0.0);
    // Diamond mass via a nested midpoint oracle with exact inner limits.
    const long m = 2000;
    const double h = 1.0 / static_cast<double>(m);
    double diamond = 0.0;
    for (long i = 0; i < m; ++i) {
        const double t1 = (static_cast<double>(i) + 0.5) * h;
        const double hi = (1.0 - t1) / static_cast<double>(m);
        double inner = 0.0;
        for (long j = 0; j < m; ++j)
            inner += profile_at(std::hypot(t1, (static_cast<double>(j) + 0.5) * hi), 0.5, 2);
        diamond += inner * hi;
    }
    diamond *= 4.0 * h;
    CHECK(nu2 == doctest::Approx(tot2 - diamond).epsilon(1e-5));
}

TEST_CASE("nu tails: atomic variants and rejections") {
    CHECK_THROWS_AS(nu_tail(character({1}, {0.0}), 1.0), NonIntegrableTransform);
    CHECK_THROWS_AS(nu_tail(holder_radial(0.5, 1), 1.0), NonIntegrableTransform);
    CHECK_THROWS_AS(fourier_l1(character({1}, {0.0})), NonIntegrableTransform);

    const auto table =
        angular_table({{{2}, cd(0.5, 0.0)}, {{-1}, cd(0.0, 0.25)}, {{0}, cd(1.0, 0.0)}}, 1);
    CHECK(nu_tail(table, 0.0) == doctest::Approx(0.75));
    CHECK(nu_tail(table, 1.0) == doctest::Approx(0.5));
    CHECK(nu_tail(table, 2.0) == doctest::Approx(0.0));
    CHECK(fourier_l1(table) == doctest::Approx(1.75));  // includes the constant atom
    CHECK(fourier_l1(gaussian_character({7})) == doctest::Approx(1.0));
}

TEST_CASE("angular nu tails") {
    CHECK(nu_tail_F0(character({2}, {0.0}), 1.0) == doctest::Approx(1.0));
    CHECK(nu_tail_F0(character({2}, {0.0}), 2.0) == doctest::Approx(0.0));
    CHECK(nu_tail_F0(gaussian_character({1}), 0.5) == doctest::Approx(1.0));
    CHECK(nu_tail_F0(gaussian_character({1}), 1.0) == doctest::Approx(0.0));
    CHECK(nu_tail_F0(holder_radial(0.5, 1), 0.0) == doctest::Approx(0.0));
    const auto f = radial_profile(0.5, 1);
    CHECK(nu_tail_F0(f, -0.5) == doctest::Approx(haar_integral(f).real()));
    CHECK(nu_tail_F0(f, 0.0) == doctest::Approx(0.0));
}
