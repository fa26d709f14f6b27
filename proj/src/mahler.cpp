#include "tequi/mahler.hpp"

#include <cmath>
#include <numbers>

#include "tequi/errors.hpp"

namespace tequi {

double log_abs(const mpz_class& v) {
    if (v == 0) throw DegenerateInput("log_abs(0)");
    long e = 0;
    const double m = mpz_get_d_2exp(&e, v.get_mpz_t());
    return std::log(std::fabs(m)) + static_cast<double>(e) * std::numbers::ln2;
}

double log_mahler_measure(const IntPolynomial& p, const RootSet& roots) {
    double m = log_abs(p.leading());
    for (const auto& z : roots.roots) {
        const double a = std::abs(z);
        if (a > 1.0) m += std::log(a);
    }
    return m;
}

double log_mahler_measure(const IntPolynomial& p) {
    return log_mahler_measure(p, find_roots(p));
}

double root_height(const IntPolynomial& p) {
    if (p.degree() < 1) throw DegenerateInput("height needs degree >= 1");
    return log_mahler_measure(p) / p.degree();
}

}  // namespace tequi
