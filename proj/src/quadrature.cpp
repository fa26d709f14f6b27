#include "tequi/quadrature.hpp"

#include <algorithm>
#include <cmath>

#include "tequi/errors.hpp"

namespace tequi {

void AdaptiveIntegrator::spend(long n) {
    left_ -= n;
    if (left_ < 0) throw QuadratureBudgetExceeded("quadrature evaluation budget exhausted");
}

double AdaptiveIntegrator::adapt(const std::function<double(double)>& f, double a, double m,
                                 double b, double fa, double fm, double fb, double whole,
                                 double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    spend(2);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double s2 = left + right;
    // Richardson acceptance; at depth 60 the interval is below the double
    // resolution of the endpoints, so further splitting cannot help.
    if (depth >= 60 || std::fabs(s2 - whole) <= 15.0 * tol)
        return s2 + (s2 - whole) / 15.0;
    return adapt(f, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           adapt(f, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

double AdaptiveIntegrator::integrate(const std::function<double(double)>& f, double a, double b,
                                     double tol) {
    if (!(a < b)) return 0.0;
    spend(3);
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adapt(f, a, m, b, fa, fm, fb, whole, tol, 0);
}

double AdaptiveIntegrator::integrate_cuts(const std::function<double(double)>& f,
                                          const std::vector<double>& cuts, double tol) {
    if (cuts.size() < 2) return 0.0;
    const double share = tol / static_cast<double>(cuts.size() - 1);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate(f, cuts[i], cuts[i + 1], share);
    return total;
}

double AdaptiveIntegrator::integrate_dyadic(const std::function<double(double)>& f, double a,
                                            double b, double tol) {
    if (!(a < b)) return 0.0;
    std::vector<double> cuts{a};
    double step = 1.0;
    while (cuts.back() < b) {
        cuts.push_back(std::min(cuts.back() + step, b));
        step *= 2.0;
    }
    return integrate_cuts(f, cuts, tol);
}

}  // namespace tequi
