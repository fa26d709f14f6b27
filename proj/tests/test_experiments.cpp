#include <cmath>
#include <vector>

#include "doctest.h"
#include "tequi/errors.hpp"
#include "tequi/experiments.hpp"
#include "tequi/util.hpp"

using namespace tequi;

TEST_CASE("dyadic prime windows come from a deterministic sieve") {
    CHECK(primes_in_window(4, 5) == std::vector<long>{17, 19, 23, 29, 31});
    CHECK(primes_in_window(1, 1) == std::vector<long>{3});
    CHECK(primes_in_window(2, 2) == std::vector<long>{5, 7});
    CHECK(primes_in_window(10, 1) == std::vector<long>{1031});

    CHECK_THROWS_AS(primes_in_window(1, 2), NoPrimesInWindow);  // (2,4) holds only 3
    CHECK_THROWS_AS(primes_in_window(0, 1), DegenerateInput);
    CHECK_THROWS_AS(primes_in_window(23, 1), DegenerateInput);
    CHECK_THROWS_AS(primes_in_window(4, 0), DegenerateInput);
}

TEST_CASE("random square-free polynomials respect their contract") {
    Rng rng(7u);
    for (int deg : {2, 5, 12}) {
        const IntPolynomial p = random_squarefree_poly(rng, deg, 9);
        CHECK(p.degree() == deg);
        CHECK(p.leading() != 0);
        CHECK(p.trailing() != 0);
        CHECK(squarefree_check(p));
        for (int j = 0; j <= deg; ++j) {
            CHECK(p.coeff(j) <= 9);
            CHECK(p.coeff(j) >= -9);
        }
    }
    Rng a(42u), b(42u);
    CHECK(random_squarefree_poly(a, 6, 20) == random_squarefree_poly(b, 6, 20));
    CHECK_THROWS_AS(random_squarefree_poly(rng, 0, 9), DegenerateInput);
    CHECK_THROWS_AS(random_squarefree_poly(rng, 3, 0), DegenerateInput);
}

TEST_CASE("radial power sweep reproduces its closed form") {
    ExperimentConfig cfg;
    cfg.gamma = 0.5;
    cfg.N = 1;
    cfg.primes = {5};
    const std::vector<SweepRow> rows = run_sharpness_52(cfg);
    REQUIRE(rows.size() == 1);
    // Exactly the expression the orbit stores, so the match is bitwise.
    CHECK(rows[0].measured == std::pow(std::log(5.0) / 5.0, 0.5));
    CHECK(rows[0].measured == doctest::Approx(0.567351).epsilon(1e-6));
    CHECK(rows[0].k == 0);
    CHECK(rows[0].size == 5);
    CHECK(rows[0].h == doctest::Approx(std::log(5.0) / 5.0).epsilon(1e-15));
    REQUIRE(rows[0].rhs.size() == 1);
    CHECK(rows[0].rhs[0].first == "holder");
    // Cor-6 style constant: 2^gamma for the pure radial power.
    CHECK(rows[0].rhs[0].second ==
          doctest::Approx(std::sqrt(2.0) * std::sqrt(rows[0].h_D)).epsilon(1e-12));
    CHECK(rows[0].measured <= rows[0].rhs[0].second);
    CHECK(rows[0].ratio_power == doctest::Approx(rows[0].measured / std::sqrt(rows[0].h_D)));
}

TEST_CASE("radial power sweep window and lower-rate invariants hold") {
    for (double g : {0.25, 0.5}) {
        for (int N : {1, 2, 4}) {
            ExperimentConfig cfg;
            cfg.gamma = g;
            cfg.N = N;
            cfg.kmin = 4;
            cfg.kmax = N == 1 ? 12 : 8;
            const std::vector<SweepRow> rows = run_sharpness_52(cfg);
            CHECK(rows.size() == static_cast<std::size_t>(cfg.kmax - cfg.kmin + 1));
            for (const SweepRow& r : rows) {
                CHECK(r.ratio_power >= 0.5);
                CHECK(r.ratio_power <= 1.0 + 1e-9);
                CHECK(r.measured <= r.rhs[0].second + 1e-9);
                CHECK(r.trunc_slack == 0.0);  // closed form, nothing truncated
            }
        }
    }
    ExperimentConfig deep;
    deep.gamma = 0.5;
    deep.N = 1;
    deep.kmin = 10;
    deep.kmax = 13;
    for (const SweepRow& r : run_sharpness_52(deep)) CHECK(r.ratio_lower >= 0.5);
}

TEST_CASE("radial power sweep validates its configuration") {
    ExperimentConfig cfg;
    cfg.gamma = 0.7;  // outside (0, 1/2]
    CHECK_THROWS_AS(run_sharpness_52(cfg), DegenerateInput);
    cfg.gamma = 0.5;
    cfg.N = 5;
    CHECK_THROWS_AS(run_sharpness_52(cfg), DimensionUnsupported);
    cfg.N = 1;
    cfg.kmin = 4;
    cfg.kmax = 21;  // beyond the desk-scale cap
    CHECK_THROWS_AS(run_sharpness_52(cfg), DegenerateInput);
    cfg.kmax = 3;  // empty range
    CHECK_THROWS_AS(run_sharpness_52(cfg), DegenerateInput);
    cfg.kmin = 4;
    cfg.kmax = 12;
    cfg.primes = {17, 19, 23};  // not a multiple of N = 2
    cfg.N = 2;
    CHECK_THROWS_AS(run_sharpness_52(cfg), DegenerateInput);
    cfg.N = 2;
    cfg.primes = {3037000507L, 3037000493L};  // one orbit, product over 2^62
    CHECK_THROWS_AS(run_sharpness_52(cfg), CapExceeded);
}

TEST_CASE("profile error sweep stays under its power bound and trends down") {
    ExperimentConfig cfg;
    cfg.gamma = 0.5;
    cfg.N = 1;
    cfg.kmin = 4;
    cfg.kmax = 8;
    const std::vector<SweepRow> rows = run_sharpness_51(cfg);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].primes == std::vector<long>{17});
    CHECK(rows[0].h == doctest::Approx(std::log(17.0) / 17.0).epsilon(1e-15));
    for (const SweepRow& r : rows) {
        CHECK(r.measured > 0.0);
        CHECK(r.trunc_slack > 0.0);
        REQUIRE(r.rhs.size() == 1);
        CHECK(r.rhs[0].first == "power");
        CHECK(r.measured <= r.rhs[0].second + 1e-9);
    }
    CHECK(rows.back().measured < rows.front().measured);
    // One rate constant for the whole sweep.
    CHECK(rows[0].rhs[0].second / std::pow(rows[0].h_D, 0.5) ==
          doctest::Approx(rows[4].rhs[0].second / std::pow(rows[4].h_D, 0.5)).epsilon(1e-12));
}

TEST_CASE("profile error sweep covers dimension two") {
    ExperimentConfig cfg;
    cfg.gamma = 0.5;
    cfg.N = 2;
    cfg.kmin = 4;
    cfg.kmax = 4;
    const std::vector<SweepRow> rows = run_sharpness_51(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].primes == std::vector<long>{17, 19});
    CHECK(rows[0].size == 323);
    CHECK(rows[0].measured > 0.0);
    CHECK(rows[0].measured <= rows[0].rhs[0].second);

    cfg.N = 3;
    CHECK_THROWS_AS(run_sharpness_51(cfg), DimensionUnsupported);
    cfg.N = 2;
    cfg.kmax = 10;  // beyond the N = 2 cap
    CHECK_THROWS_AS(run_sharpness_51(cfg), DegenerateInput);
}

TEST_CASE("discrepancy sweep rows carry exact values and majorants") {
    ExperimentConfig cfg;
    cfg.N = 1;
    cfg.primes = {101};
    const std::vector<DiscrepancySweepRow> rows = run_discrepancy_sweep(cfg);
    REQUIRE(rows.size() == 1);
    const DiscrepancySweepRow& r = rows[0];
    CHECK(r.size == 101);
    CHECK(r.delta_closed == doctest::Approx(1.0 / 101.0).epsilon(1e-12));
    CHECK(r.delta_half_open <= 1e-14);
    CHECK(r.M == 0);  // the height formula rounds down to zero here
    CHECK(r.M_is_auto);
    CHECK(r.etk == doctest::Approx(3.0).epsilon(1e-12));
    REQUIRE(r.height_bound.has_value());
    CHECK(*r.height_bound == doctest::Approx(27.5 * std::cbrt(r.h_D)).epsilon(1e-12));
    CHECK(r.delta_closed <= *r.height_bound);
}

TEST_CASE("discrepancy sweep falls back to order one above the height cutoff") {
    ExperimentConfig cfg;
    cfg.N = 2;
    cfg.primes = {17, 19};
    const std::vector<DiscrepancySweepRow> rows = run_discrepancy_sweep(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].size == 323);
    CHECK(rows[0].M == 1);
    CHECK_FALSE(rows[0].M_is_auto);
    CHECK(rows[0].etk == doctest::Approx(2.25).epsilon(1e-12));
    CHECK_FALSE(rows[0].height_bound.has_value());

    cfg.primes.clear();
    cfg.kmin = 4;
    cfg.kmax = 6;  // beyond the N = 2 window cap
    CHECK_THROWS_AS(run_discrepancy_sweep(cfg), DegenerateInput);
}

TEST_CASE("height report reproduces closed forms") {
    const HeightReport r = run_height_report(IntPolynomial::parse_text("2: -2 0 1"));
    CHECK(r.degree == 2);
    CHECK(r.height == doctest::Approx(0.34657359028).epsilon(1e-10));
    CHECK(r.D == 2.0);
    CHECK(r.h_D == doctest::Approx(0.577622650467).epsilon(1e-10));
    CHECK(r.roots.size() == 2);
    REQUIRE(r.expsum.size() == 5);
    CHECK(r.expsum[0].n == 1);
    CHECK(r.expsum[0].value <= 1e-12);  // the two conjugates cancel
    CHECK(r.expsum[1].value == doctest::Approx(1.0).epsilon(1e-12));
    for (const ExpSumRow& e : r.expsum) {
        CHECK(e.bound == doctest::Approx(2.0 * std::sqrt(6.0 * static_cast<double>(e.n) * r.h_D))
                             .epsilon(1e-12));
        CHECK(e.value <= e.bound);
    }
}

TEST_CASE("height report handles the rational point") {
    const HeightReport r = run_height_report(IntPolynomial::parse_text("1: -1 1"));
    CHECK(r.height == 0.0);
    CHECK(r.log_mahler == 0.0);
    CHECK(r.expsum[0].value == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.expsum[0].bound ==
          doctest::Approx(2.0 * std::sqrt(6.0 * std::log(2.0) / 3.0)).epsilon(1e-12));
    CHECK(r.expsum[0].value <= r.expsum[0].bound);
}

TEST_CASE("stock moduli match the variants they dominate") {
    const ModulusOfContinuity holder = default_modulus(holder_radial(0.25, 1));
    CHECK(modulus_value(holder, 0.5) == doctest::Approx(std::pow(0.5, 0.25)).epsilon(1e-15));

    const ModulusOfContinuity gauss = default_modulus(gaussian_character({1}));
    // sqrt(pi) x dominates 1 - e^{-pi x^2} with equality slope at zero.
    for (double x : {0.01, 0.1, 0.5, 1.0, 3.0})
        CHECK(modulus_value(gauss, x) >= 1.0 - std::exp(-M_PI * x * x));

    const ModulusOfContinuity flat = default_modulus(character({1}, {0.0}));
    CHECK(modulus_value(flat, 10.0) == 0.0);

    const ModulusOfContinuity lin = default_modulus(character({1}, {0.5}));
    CHECK(modulus_value(lin, 1.0) == doctest::Approx(M_PI).epsilon(1e-12));

    const ModulusOfContinuity table =
        default_modulus(angular_table({{{1}, {1.0, 0.0}}}, 1));
    CHECK(modulus_value(table, 2.0) == 0.0);

    CHECK_THROWS_AS(default_modulus(radial_profile(0.5, 1)), UnsupportedVariant);
}

TEST_CASE("verification corpus passes and is deterministic") {
    VerifyConfig cfg;
    const VerifyReport rep = run_verify(cfg);
    CHECK(rep.all_pass);
    CHECK(rep.checks.size() == 10);
    for (const VerifyCheck& c : rep.checks) {
        CHECK(c.pass);
        CHECK(!c.detail.empty());
    }

    const VerifyReport again = run_verify(cfg);
    REQUIRE(again.checks.size() == rep.checks.size());
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        CHECK(again.checks[i].name == rep.checks[i].name);
        CHECK(again.checks[i].margin == rep.checks[i].margin);
        CHECK(again.checks[i].detail == rep.checks[i].detail);
    }
}

TEST_CASE("an injected bound defect fails exactly the named check") {
    VerifyConfig cfg;
    cfg.inject_bound_defect = true;
    const VerifyReport rep = run_verify(cfg);
    CHECK_FALSE(rep.all_pass);
    int failing = 0;
    for (const VerifyCheck& c : rep.checks) {
        if (!c.pass) {
            ++failing;
            CHECK(c.name == "character-sum-bound");
            CHECK(c.margin < 0.0);
        }
    }
    CHECK(failing == 1);
}

TEST_CASE("the built-in corpus is seeded and well formed") {
    const std::vector<OrbitSpec> corpus = builtin_corpus(2026);
    CHECK(corpus.size() == 8);
    const std::vector<OrbitSpec> again = builtin_corpus(2026);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(corpus[i].mode == again[i].mode);
        CHECK(corpus[i].polys == again[i].polys);
        CHECK(corpus[i].primes == again[i].primes);
        // Every entry builds.
        CHECK(build_orbit(corpus[i]).size() >= 1);
    }
}
