#pragma once

#include <stdexcept>
#include <string>

namespace tequi {

// Base class for all library failures.  Every throw site uses one of the
// concrete kinds below so callers can discriminate without string matching.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad polynomial text, zero leading
// coefficient where one is required, empty orbit, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

// Iterative root refinement hit its sweep cap without meeting the residual
// target, even after the extended-precision retry.
struct NonConvergence : Error {
    using Error::Error;
};

// An orbit build needed roots but the solver failed on one coordinate.
struct RootFindingFailure : Error {
    using Error::Error;
};

// Product-orbit coordinate degrees must be pairwise coprime.
struct CoprimalityViolation : Error {
    using Error::Error;
};

// Value clustering could not produce equal-sized classes whose count divides
// the orbit size.
struct AmbiguousClustering : Error {
    using Error::Error;
};

// Operation not defined for this test-function variant.
struct UnsupportedVariant : Error {
    using Error::Error;
};

// The requested transform tail does not exist as an absolutely convergent
// integral/sum for this variant.
struct NonIntegrableTransform : Error {
    using Error::Error;
};

// Adaptive quadrature exceeded its evaluation budget before reaching the
// requested tolerance.
struct QuadratureBudgetExceeded : Error {
    using Error::Error;
};

// A weighted transform integral is provably divergent for the given weight.
struct DivergentConstant : Error {
    using Error::Error;
};

// No Holder constant is available for this variant/exponent.
struct UnknownHolderConstant : Error {
    using Error::Error;
};

// Envelope table fails its monotonicity hypotheses.
struct InvalidEnvelope : Error {
    using Error::Error;
};

// Modulus-of-continuity table fails nondecreasing/concavity/zero-limit checks,
// or does not dominate the variant it is paired with.
struct InvalidModulus : Error {
    using Error::Error;
};

// Operation only implemented for N in {1,2}.
struct DimensionUnsupported : Error {
    using Error::Error;
};

// Input size exceeds the configured work cap for an exact algorithm.
struct CapExceeded : Error {
    using Error::Error;
};

// A bound requires the adjusted height to be at most 1/e.
struct PreconditionHeight : Error {
    using Error::Error;
};

// A dyadic window (2^k, 2^(k+1)) holds fewer primes than requested.
struct NoPrimesInWindow : Error {
    using Error::Error;
};

}  // namespace tequi
