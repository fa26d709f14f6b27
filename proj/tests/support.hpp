#pragma once

#include <complex>
#include <vector>

#include "tequi/int_polynomial.hpp"
#include "tequi/util.hpp"

namespace testsupport {

// Exact division of integer polynomials; quotient must be exact.
inline tequi::IntPolynomial exact_divide(const tequi::IntPolynomial& num,
                                         const tequi::IntPolynomial& den) {
    std::vector<mpz_class> r;
    for (int j = 0; j <= num.degree(); ++j) r.push_back(num.coeff(j));
    std::vector<mpz_class> q(static_cast<std::size_t>(num.degree() - den.degree()) + 1);
    for (int k = num.degree() - den.degree(); k >= 0; --k) {
        mpz_class c = r[static_cast<std::size_t>(k + den.degree())] / den.leading();
        q[static_cast<std::size_t>(k)] = c;
        for (int j = 0; j <= den.degree(); ++j) r[static_cast<std::size_t>(k + j)] -= c * den.coeff(j);
    }
    return tequi::IntPolynomial(std::move(q));
}

// n-th cyclotomic polynomial via x^n - 1 = prod over d|n of Phi_d.
inline tequi::IntPolynomial cyclotomic(int n) {
    std::vector<mpz_class> xn(static_cast<std::size_t>(n) + 1);
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    tequi::IntPolynomial result{std::move(xn)};
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = exact_divide(result, cyclotomic(d));
    }
    return result;
}

// x^d - a
inline tequi::IntPolynomial power_minus(int d, long a) {
    std::vector<mpz_class> c(static_cast<std::size_t>(d) + 1);
    c[0] = -a;
    c[static_cast<std::size_t>(d)] = 1;
    return tequi::IntPolynomial(std::move(c));
}

// Random polynomial with |coeffs| <= bound, exact degree deg, nonzero constant
// term, no repeated roots.
inline tequi::IntPolynomial random_squarefree(tequi::Rng& rng, int deg, long bound) {
    while (true) {
        std::vector<long> c(static_cast<std::size_t>(deg) + 1);
        for (auto& v : c) v = rng.range(-bound, bound);
        if (c[0] == 0 || c[static_cast<std::size_t>(deg)] == 0) continue;
        auto p = tequi::IntPolynomial::from_coeffs(c);
        if (tequi::squarefree_check(p)) return p;
    }
}

}  // namespace testsupport
