#pragma once

#include <complex>
#include <vector>

#include "tequi/int_polynomial.hpp"

namespace tequi {

struct PrecisionProfile {
    int max_sweeps = 120;
    // Residual target: |P(z)| <= residual_tol * ||P||_1 * max(1,|z|)^deg.
    double residual_tol = 0x1p-40;
    // Run the extended-precision (double-double) polish on every root, not
    // just the ones near the unit circle or above the residual target.
    bool force_extended = false;
};

struct RootSet {
    // Multiplicity-expanded: size() == degree.  Entries of a merged cluster
    // all carry the cluster representative.  For real input polynomials the
    // set is exactly closed under conjugation.
    std::vector<std::complex<double>> roots;
    // |P(z)| / (||P||_1 * max(1,|z|)^deg), evaluated on the power-of-two
    // scaled coefficients (scaling does not move roots).
    std::vector<double> residuals;
    std::vector<int> multiplicity;
    // Minimum distance between distinct cluster centers; +infinity when only
    // one distinct root exists.
    double certified_gap = 0.0;
};

// Simultaneous (Aberth-Ehrlich) iteration from convex-hull initial points,
// followed by Newton polishing.  Roots within 1e-6 of the unit circle, and any
// root that misses the residual target in double precision, get a
// double-double Newton polish.  Roots whose Newton inclusion disks
// D(z, deg*|P(z)/P'(z)|) overlap are merged into a cluster and reported with
// shared multiplicity; the disk radius scales with a multiple root's split
// distance, so merging does not depend on a fixed tolerance.  Throws
// NonConvergence if the residual target is still unmet after the
// extended-precision retry.
RootSet find_roots(const IntPolynomial& p, const PrecisionProfile& profile = {});

}  // namespace tequi
