#pragma once

#include <functional>
#include <vector>

namespace tequi {

struct QuadratureConfig {
    // Truncation radius for improper integrals; 0 means derive it from the
    // integrand's analytic tail bound and abs_tol.
    double radius = 0.0;
    // Maximum integrand evaluations per top-level quantity.
    long budget = 8'000'000;
    // Total absolute error target (truncation share is kept below a tenth of
    // this; panel refinement targets min(abs_tol/10, 1e-9), so reported values
    // are far more accurate than abs_tol whenever the budget allows).
    double abs_tol = 1e-6;
};

// Adaptive Simpson with Richardson acceptance and a shared evaluation budget.
// Serial and deterministic.  Throws QuadratureBudgetExceeded when a target
// cannot be met within the budget.
class AdaptiveIntegrator {
  public:
    explicit AdaptiveIntegrator(long budget) : left_(budget) {}

    // Integral over [a, b] with absolute tolerance tol.
    double integrate(const std::function<double(double)>& f, double a, double b, double tol);

    // Integral over consecutive segments [cuts[0], cuts[1], ...]; each segment
    // gets an equal share of tol.  Useful when oscillation periods are known.
    double integrate_cuts(const std::function<double(double)>& f, const std::vector<double>& cuts,
                          double tol);

    // Integral over [a, b] for smooth decaying integrands where b may be very
    // large: dyadic segments growing from a prevent a sparse first probe from
    // accepting a spurious zero.
    double integrate_dyadic(const std::function<double(double)>& f, double a, double b,
                            double tol);

    long evals_left() const { return left_; }

  private:
    double adapt(const std::function<double(double)>& f, double a, double m, double b, double fa,
                 double fm, double fb, double whole, double tol, int depth);
    void spend(long n);
    long left_;
};

}  // namespace tequi
