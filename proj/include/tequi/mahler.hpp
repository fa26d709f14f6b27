#pragma once

#include "tequi/int_polynomial.hpp"
#include "tequi/roots.hpp"

namespace tequi {

// log|c_d| + sum over roots of log+ |root|.  Always >= 0 for integer
// polynomials (|c_d| >= 1).  Roots at 0 contribute nothing.
double log_mahler_measure(const IntPolynomial& p);
double log_mahler_measure(const IntPolynomial& p, const RootSet& roots);

// log_mahler_measure / degree: the height of any root of an irreducible p.
double root_height(const IntPolynomial& p);

// Exact log of a nonzero big integer's absolute value.
double log_abs(const mpz_class& v);

}  // namespace tequi
