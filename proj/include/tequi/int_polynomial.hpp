#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

namespace tequi {

// Dense univariate polynomial with exact integer coefficients.  Coefficients
// are arbitrary-precision so that exact divisibility arguments (subresultant
// remainder sequences) never overflow.  Indexing is by power: coeff(j) is the
// coefficient of x^j.
class IntPolynomial {
  public:
    IntPolynomial() = default;  // zero polynomial, degree() == -1
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    static IntPolynomial from_coeffs(const std::vector<long>& coeffs);

    // Parses the text format "d: c_0 c_1 ... c_d" (decimal big-integer
    // tokens).  Requires d >= 1 and a nonzero leading coefficient; throws
    // DegenerateInput otherwise.
    static IntPolynomial parse_text(const std::string& text);
    std::string to_text() const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const mpz_class& coeff(int j) const;
    const mpz_class& leading() const { return c_.back(); }
    const mpz_class& trailing() const { return c_.front(); }

    IntPolynomial derivative() const;
    IntPolynomial operator*(const IntPolynomial& rhs) const;
    IntPolynomial reflected() const;  // P(-x)
    IntPolynomial reversed() const;   // x^d * P(1/x); requires c_0 != 0

    // Horner evaluation in double precision.  Forward error is bounded by
    // 2d * 2^-52 * sum_j |c_j| max(1,|z|)^j, i.e. roughly
    // max(1,|z|)^d * ||P||_1 * 2^-50 for the degrees used here.
    std::complex<double> evaluate(std::complex<double> z) const;
    void evaluate_with_derivative(std::complex<double> z, std::complex<double>& p,
                                  std::complex<double>& dp) const;

    // Coefficients scaled by a common power of two so the largest magnitude
    // lands in [0.5, 1).  Scaling by a constant does not move roots, so the
    // root finder works on this view to avoid overflow.  `nonzero` lists the
    // indices of nonzero coefficients (ascending); `norm1` is the scaled
    // 1-norm used to normalize residuals.
    struct DoubleView {
        std::vector<double> coeffs;
        std::vector<int> nonzero;
        double norm1 = 0.0;
    };
    DoubleView double_view() const;

    bool operator==(const IntPolynomial& rhs) const { return c_ == rhs.c_; }

  private:
    void trim();
    std::vector<mpz_class> c_;
};

// True iff gcd(P, P') is constant over the rationals, i.e. P has no repeated
// complex root.  Computed with an exact integer subresultant remainder
// sequence; no floating point is involved.
bool squarefree_check(const IntPolynomial& p);

}  // namespace tequi
