#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tequi/orbit.hpp"

namespace tequi {

enum class ArcConvention { Closed, HalfOpen };

// One circular arc on T = R/Z: the set of length `length` starting at `start`
// and running forward, wrapping through 0 when start + length > 1.
struct TorusArc {
    double start = 0.0;
    double length = 0.0;
};

// A product of per-coordinate arcs with a common endpoint convention.
struct TorusBox {
    std::vector<TorusArc> arcs;
    ArcConvention convention = ArcConvention::Closed;
    double volume() const;
};

// Box discrepancy of a finite angle set.  `value` is the supremum over all
// products of intervals (the closed convention: degenerate arcs carrying
// atoms are included, so the supremum is attained on the candidate set).
// For measure-heavy witnesses the supremum is the limit of closed boxes
// lying strictly inside the reported arcs; the witness records the limiting
// arc endpoints.  `half_open_value` is the maximum over boxes of left-closed
// right-open arcs with endpoints in the coordinate values; it is reported
// for information and can be strictly smaller.
struct DiscrepancyResult {
    double value = 0.0;
    TorusBox witness;
    double half_open_value = 0.0;
    TorusBox half_open_witness;
    std::optional<double> etk_value;     // filled by discrepancy_report
    std::optional<double> height_bound;  // filled when h_D <= 1/e
};

// Exact box discrepancy for N in {1, 2}.  Candidate arc endpoints run over
// the distinct coordinate values; counts are evaluated both inclusively and
// exclusively, which realizes the supremum over the full box family.  N = 1
// costs O(D^2) after sorting, N = 2 costs O(D^4) time and O(D^2) memory.
// Point sets larger than `cap` are refused (CapExceeded); dimensions over 2
// are refused (DimensionUnsupported).
DiscrepancyResult exact_discrepancy(const std::vector<std::vector<double>>& points,
                                    long cap = 512);

// Character-sum discrepancy majorant at truncation order M >= 0:
//   (3/2)^N (2/(M+1) + sum_{0 < |n|_inf <= M} |exp_sum(n)| / r(n)),
// with r(n) the product of max(1, |n_i|).  M = 0 leaves the empty sum.
double etk_bound(const GaloisOrbit& orbit, long M);

// Truncation order chosen from the adjusted height,
//   M = floor(e^{-3/2} h_D^{-1/3} |log h_D|^{-2(N-1)/3}),
// together with the majorant at that order.  Requires h_D <= 1/e
// (PreconditionHeight otherwise).
struct AutoM {
    long M = 0;
    double bound = 0.0;
};
AutoM etk_auto_M(const GaloisOrbit& orbit);

// Fully explicit discrepancy bound in terms of the adjusted height alone:
//   (9 (3/2)^N + 14 N) h_D^{1/3} |log h_D|^{2(N-1)/3},
// valid for h_D <= 1/e (PreconditionHeight otherwise).
double discrepancy_height_bound(const GaloisOrbit& orbit);

// Exact discrepancy of the orbit's angle set plus the two majorants.
// `etk_value` uses the automatic truncation order when h_D <= 1/e and falls
// back to order 1 otherwise; `height_bound` is present only when its
// precondition holds.
DiscrepancyResult discrepancy_report(const GaloisOrbit& orbit, long cap = 512);

// LOWER BOUND only: best value found over random boxes refined by snapping
// endpoints to nearby coordinate values.  For N >= 3 where the exact
// supremum is out of reach; never valid as an upper estimate and never used
// in invariant assertions.  Deterministic for a fixed seed.
double stochastic_discrepancy_lower_bound(const std::vector<std::vector<double>>& points,
                                          long trials, std::uint64_t seed);

}  // namespace tequi
