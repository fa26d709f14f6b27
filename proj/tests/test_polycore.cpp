#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "tequi/errors.hpp"
#include "tequi/int_polynomial.hpp"
#include "tequi/mahler.hpp"
#include "tequi/roots.hpp"

using namespace tequi;
using testsupport::cyclotomic;
using testsupport::power_minus;
using testsupport::random_squarefree;
using cd = std::complex<double>;

TEST_CASE("polynomial text format round-trips") {
    const auto p = IntPolynomial::parse_text("2: -2 0 1");
    CHECK(p.degree() == 2);
    CHECK(p.coeff(0) == -2);
    CHECK(p.coeff(1) == 0);
    CHECK(p.coeff(2) == 1);
    CHECK(p.to_text() == "2: -2 0 1");
    CHECK(IntPolynomial::parse_text(p.to_text()) == p);

    CHECK_THROWS_AS(IntPolynomial::parse_text("2: 1 2"), DegenerateInput);
    CHECK_THROWS_AS(IntPolynomial::parse_text("2: 1 2 3 4"), DegenerateInput);
    CHECK_THROWS_AS(IntPolynomial::parse_text("0: 7"), DegenerateInput);
    CHECK_THROWS_AS(IntPolynomial::parse_text("2: 1 2 0"), DegenerateInput);
    CHECK_THROWS_AS(IntPolynomial::parse_text("2: 1 x 1"), DegenerateInput);
    CHECK_THROWS_AS(IntPolynomial::parse_text("nope"), DegenerateInput);
}

TEST_CASE("text format accepts big-integer tokens") {
    const auto p = IntPolynomial::parse_text("1: -340282366920938463463374607431768211456 1");
    CHECK(p.coeff(0) == mpz_class("-340282366920938463463374607431768211456"));
    CHECK(p.to_text() == "1: -340282366920938463463374607431768211456 1");
}

TEST_CASE("Horner evaluation matches direct expansion") {
    const auto p = IntPolynomial::from_coeffs({-2, 0, 1});  // x^2 - 2
    CHECK(p.evaluate({3.0, 0.0}).real() == doctest::Approx(7.0));
    const cd z{1.5, -2.0};
    const cd expect = z * z - 2.0;
    CHECK(std::abs(p.evaluate(z) - expect) < 1e-12);

    cd v, dv;
    p.evaluate_with_derivative(z, v, dv);
    CHECK(std::abs(v - expect) < 1e-12);
    CHECK(std::abs(dv - 2.0 * z) < 1e-12);
}

TEST_CASE("derivative, product, reflect, reverse") {
    const auto p = IntPolynomial::from_coeffs({1, 2, 3});     // 3x^2+2x+1
    const auto dp = p.derivative();
    CHECK(dp.degree() == 1);
    CHECK(dp.coeff(0) == 2);
    CHECK(dp.coeff(1) == 6);

    const auto q = IntPolynomial::from_coeffs({-1, 1});       // x-1
    const auto pq = p * q;
    CHECK(pq.degree() == 3);
    CHECK(pq.coeff(0) == -1);
    CHECK(pq.coeff(3) == 3);

    const auto r = p.reflected();                             // 3x^2-2x+1
    CHECK(r.coeff(1) == -2);
    CHECK(r.coeff(2) == 3);

    const auto rev = p.reversed();                            // x^2+2x+3
    CHECK(rev.coeff(0) == 3);
    CHECK(rev.coeff(2) == 1);
}

TEST_CASE("squarefree check: exact gcd with the derivative") {
    CHECK(squarefree_check(IntPolynomial::from_coeffs({-2, 0, 1})));
    CHECK_FALSE(squarefree_check(IntPolynomial::from_coeffs({1, -2, 1})));  // (x-1)^2
    CHECK_FALSE(squarefree_check(IntPolynomial::from_coeffs({0, 0, 0, 1})));  // x^3
    CHECK(squarefree_check(IntPolynomial::from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})));
    CHECK(squarefree_check(cyclotomic(12)));
    // (x^2-2)^2 * (x^3-3), large enough to force real coefficient growth
    const auto p2 = IntPolynomial::from_coeffs({-2, 0, 1});
    const auto p3 = IntPolynomial::from_coeffs({-3, 0, 0, 1});
    CHECK_FALSE(squarefree_check(p2 * p2 * p3));
    CHECK(squarefree_check(p2 * p3));

    Rng rng(20240917);
    for (int it = 0; it < 50; ++it) {
        const auto p = random_squarefree(rng, 3 + static_cast<int>(rng.below(10)), 20);
        CHECK_FALSE(squarefree_check(p * p));
    }
}

TEST_CASE("roots of x^2 - 2") {
    const auto rs = find_roots(IntPolynomial::from_coeffs({-2, 0, 1}));
    REQUIRE(rs.roots.size() == 2);
    const double s2 = std::sqrt(2.0);
    std::vector<double> re{rs.roots[0].real(), rs.roots[1].real()};
    std::sort(re.begin(), re.end());
    CHECK(re[0] == doctest::Approx(-s2).epsilon(1e-13));
    CHECK(re[1] == doctest::Approx(s2).epsilon(1e-13));
    CHECK(rs.roots[0].imag() == 0.0);
    CHECK(rs.roots[1].imag() == 0.0);
    CHECK(rs.certified_gap == doctest::Approx(2.0 * s2).epsilon(1e-12));
    for (double r : rs.residuals) CHECK(r <= 0x1p-40);
}

TEST_CASE("roots of x^2 + x + 2 sit at modulus sqrt(2), exactly conjugate") {
    const auto rs = find_roots(IntPolynomial::from_coeffs({2, 1, 1}));
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0] == std::conj(rs.roots[1]));
    for (const auto& z : rs.roots) {
        CHECK(std::abs(z) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-13));
        CHECK(z.real() == doctest::Approx(-0.5).epsilon(1e-13));
        CHECK(std::fabs(z.imag()) == doctest::Approx(std::sqrt(7.0) / 2.0).epsilon(1e-13));
    }
}

TEST_CASE("roots of x^d - d: modulus d^(1/d), angles at the d-th roots of unity") {
    for (int d : {5, 13, 101}) {
        const auto rs = find_roots(power_minus(d, d));
        REQUIRE(rs.roots.size() == static_cast<std::size_t>(d));
        const double radius = std::pow(static_cast<double>(d), 1.0 / d);
        std::vector<int> seen(static_cast<std::size_t>(d), 0);
        for (const auto& z : rs.roots) {
            CHECK(std::abs(z) == doctest::Approx(radius).epsilon(1e-12));
            const double turns = std::arg(z) / (2.0 * std::numbers::pi);
            const double k = turns * d;
            const double kround = std::round(k);
            CHECK(std::fabs(k - kround) < 1e-8);
            int ki = static_cast<int>(kround);
            if (ki < 0) ki += d;
            ++seen[static_cast<std::size_t>(ki)];
        }
        for (int c : seen) CHECK(c == 1);  // all d angle slots hit exactly once
        for (double r : rs.residuals) CHECK(r <= 0x1p-40);
        CHECK(rs.certified_gap ==
              doctest::Approx(2.0 * radius * std::sin(std::numbers::pi / d)).epsilon(1e-9));
    }
}

TEST_CASE("repeated roots are merged into clusters with shared multiplicity") {
    // (x-1)^2 (x-3)
    const auto p = IntPolynomial::from_coeffs({1, -2, 1}) * IntPolynomial::from_coeffs({-3, 1});
    const auto rs = find_roots(p);
    REQUIRE(rs.roots.size() == 3);
    int ones = 0, threes = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(rs.roots[i] - cd(1.0, 0.0)) < 1e-5) {
            ++ones;
            CHECK(rs.multiplicity[i] == 2);
        } else {
            ++threes;
            CHECK(std::abs(rs.roots[i] - cd(3.0, 0.0)) < 1e-9);
            CHECK(rs.multiplicity[i] == 1);
        }
    }
    CHECK(ones == 2);
    CHECK(threes == 1);
    CHECK(rs.certified_gap == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("exact zero roots are deflated, not iterated") {
    // x^2 (x - 2)
    const auto rs = find_roots(IntPolynomial::from_coeffs({0, 0, -2, 1}));
    REQUIRE(rs.roots.size() == 3);
    int zeros = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        if (rs.roots[i] == cd(0.0, 0.0)) {
            ++zeros;
            CHECK(rs.residuals[i] == 0.0);
            CHECK(rs.multiplicity[i] == 2);
        } else {
            CHECK(rs.roots[i].real() == doctest::Approx(2.0).epsilon(1e-12));
        }
    }
    CHECK(zeros == 2);
}

TEST_CASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(find_roots(IntPolynomial::from_coeffs({7})), DegenerateInput);
    CHECK_THROWS_AS(find_roots(IntPolynomial()), DegenerateInput);
    CHECK_THROWS_AS(root_height(IntPolynomial::from_coeffs({7})), DegenerateInput);
}

TEST_CASE("root sums and products match the coefficients on random input") {
    Rng rng(424242);
    for (int it = 0; it < 60; ++it) {
        const int deg = 2 + static_cast<int>(rng.below(29));
        const auto p = random_squarefree(rng, deg, 50);
        const auto rs = find_roots(p);
        cd sum = 0.0, prod = 1.0;
        for (const auto& z : rs.roots) {
            sum += z;
            prod *= z;
        }
        const double cd_ = p.leading().get_d();
        const cd expect_sum = -p.coeff(deg - 1).get_d() / cd_;
        const double sgn = (deg % 2 == 0) ? 1.0 : -1.0;
        const cd expect_prod = sgn * p.trailing().get_d() / cd_;
        const double scale_sum = 1.0 + std::abs(expect_sum);
        const double scale_prod = 1.0 + std::abs(expect_prod);
        CHECK(std::abs(sum - expect_sum) / scale_sum < 1e-8);
        CHECK(std::abs(prod - expect_prod) / scale_prod < 1e-8);
        // conjugation closure is exact
        for (const auto& z : rs.roots) {
            const bool has_conj =
                std::any_of(rs.roots.begin(), rs.roots.end(), [&](cd w) { return w == std::conj(z); });
            CHECK(has_conj);
        }
    }
}

TEST_CASE("Mahler measure closed forms") {
    CHECK(log_mahler_measure(IntPolynomial::from_coeffs({-2, 1})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
    // x^d - d has measure log d
    for (int d : {2, 5, 13, 101})
        CHECK(log_mahler_measure(power_minus(d, d)) ==
              doctest::Approx(std::log(static_cast<double>(d))).epsilon(1e-12));
    // Lehmer's degree-10 polynomial: measure is the log of its Salem number
    const auto lehmer = IntPolynomial::from_coeffs({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
    CHECK(log_mahler_measure(lehmer) ==
          doctest::Approx(std::log(1.176280818259917506544070338)).epsilon(1e-12));
    // 2x - 1 has measure log 2 (all roots inside the circle; leading term only)
    CHECK(log_mahler_measure(IntPolynomial::from_coeffs({-1, 2})) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-14));
}

TEST_CASE("cyclotomic polynomials have Mahler measure 0") {
    for (int n : {1, 2, 3, 4, 5, 6, 7, 12, 15, 24, 30})
        CHECK(std::fabs(log_mahler_measure(cyclotomic(n))) < 1e-8);
}

TEST_CASE("Mahler measure is multiplicative and reflection/reversal invariant") {
    Rng rng(987654321);
    for (int it = 0; it < 25; ++it) {
        const auto p = random_squarefree(rng, 2 + static_cast<int>(rng.below(8)), 30);
        const auto q = random_squarefree(rng, 2 + static_cast<int>(rng.below(8)), 30);
        const double mp = log_mahler_measure(p);
        const double mq = log_mahler_measure(q);
        CHECK(log_mahler_measure(p * q) == doctest::Approx(mp + mq).epsilon(1e-9));
        CHECK(log_mahler_measure(p.reflected()) == doctest::Approx(mp).epsilon(1e-9));
        CHECK(log_mahler_measure(p.reversed()) == doctest::Approx(mp).epsilon(1e-9));
        CHECK(mp >= -1e-12);  // integer polynomials: measure never negative
    }
}

TEST_CASE("height of x^d - d is log(d)/d") {
    for (int d : {2, 3, 5, 17})
        CHECK(root_height(power_minus(d, d)) ==
              doctest::Approx(std::log(static_cast<double>(d)) / d).epsilon(1e-12));
    CHECK(root_height(IntPolynomial::from_coeffs({-2, 0, 1})) ==
          doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-13));
}

TEST_CASE("extended-precision polish keeps unit-circle roots honest") {
    // |roots| = 1 exactly; the near-circle trigger must leave measure ~ 0
    const auto p = cyclotomic(7) * cyclotomic(12);
    const auto rs = find_roots(p);
    for (const auto& z : rs.roots) CHECK(std::fabs(std::abs(z) - 1.0) < 1e-13);
    PrecisionProfile forced;
    forced.force_extended = true;
    const auto rs2 = find_roots(p, forced);
    for (const auto& z : rs2.roots) CHECK(std::fabs(std::abs(z) - 1.0) < 1e-14);
}
