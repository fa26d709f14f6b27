#pragma once

#include <complex>
#include <vector>

#include "tequi/int_polynomial.hpp"

namespace tequi {

enum class OrbitMode {
    SingleNumber,             // one algebraic number, orbit = all conjugates
    ProductOfCoprimeDegrees,  // tuple of numbers with pairwise-coprime degrees
    ExplicitTuples,           // user-supplied orbit with declared degrees
    ClosedFormXdMinusD        // coordinates d^(1/d) for distinct primes d
};

struct OrbitSpec {
    OrbitMode mode = OrbitMode::SingleNumber;
    int N = 1;
    std::vector<IntPolynomial> polys;  // SingleNumber: 1 entry; Product: N entries
    int root_index = 0;                // SingleNumber: which conjugate is the chosen one
    std::vector<long> primes;          // ClosedFormXdMinusD
    std::vector<std::vector<std::complex<double>>> tuples;  // ExplicitTuples
    std::vector<int> degrees;          // ExplicitTuples: declared per-coordinate degrees
    std::vector<mpz_class> leading;    // ExplicitTuples: minimal-poly leading coefficients
};

// Orbit of an N-tuple of algebraic numbers in logarithmic-polar coordinates:
// theta in turns ([0,1)) and s = log|value| in nats.  Orbits with product
// structure (single numbers, coprime-degree products, the closed-form prime
// family) are stored per coordinate and tuples are decoded on demand, so |S|
// may exceed what could be materialized.
class GaloisOrbit {
  public:
    int dim() const { return static_cast<int>(coord_deg_.size()); }
    long long size() const { return size_; }
    double height() const { return height_; }
    int coord_degree(int j) const { return coord_deg_[static_cast<std::size_t>(j)]; }
    int min_coord_degree() const;
    bool product_form() const { return product_form_; }

    // Log-polar coordinates of tuple i (mixed-radix decode in product form).
    double theta(long long i, int j) const;
    double s(long long i, int j) const;
    std::complex<double> value(long long i, int j) const;

    // Per-coordinate root data, product form only (size = coord_degree(j)).
    const std::vector<double>& coord_theta(int j) const {
        return ctheta_[static_cast<std::size_t>(j)];
    }
    const std::vector<double>& coord_s(int j) const { return cs_[static_cast<std::size_t>(j)]; }

    bool constant_s() const { return constant_s_; }  // every tuple has the same s vector
    OrbitMode mode() const { return mode_; }
    const std::vector<long>& closed_form_primes() const { return primes_; }

  private:
    friend GaloisOrbit build_orbit(const OrbitSpec&);
    OrbitMode mode_ = OrbitMode::SingleNumber;
    bool product_form_ = true;
    bool constant_s_ = false;
    long long size_ = 0;
    double height_ = 0.0;
    std::vector<int> coord_deg_;
    std::vector<long> primes_;                 // ClosedFormXdMinusD only
    std::vector<std::vector<double>> ctheta_;  // product form: per coordinate
    std::vector<std::vector<double>> cs_;
    std::vector<double> etheta_;  // explicit form: tuple-major, |S| x N
    std::vector<double> es_;
};

// Enumerates the orbit.  Height is the sum over coordinates of
// (log Mahler measure)/degree.  Throws CoprimalityViolation when product
// degrees share a factor or closed-form primes repeat, RootFindingFailure when
// the root finder cannot certify a minimal polynomial's roots, and
// DegenerateInput for structurally bad specs (zero coordinates, non-squarefree
// polynomials, non-prime closed-form entries, inconsistent explicit data).
GaloisOrbit build_orbit(const OrbitSpec& spec);

// Normalized character sum (1/|S|) sum_alpha e^{2 pi i n.theta(alpha)}.
// Modulus is at most 1; factorizes over coordinates in product form.
std::complex<double> exp_sum(const GaloisOrbit& orbit, const std::vector<long>& n);

struct CharDefect {
    double value;  // |(1/|S|) sum e^{2 pi i n.theta}(e^{2 pi i t.s} - 1)| in [0,2]
    double bound;  // min{2 sqrt(8 pi h ||t||_inf), 2}
};
CharDefect char_defect(const GaloisOrbit& orbit, const std::vector<long>& n,
                       const std::vector<double>& t);

// Distinct values of chi^n(alpha) = prod_j alpha_j^(n_j) over the orbit, with
// the shared multiplicity |S|/count.  Clustering is gap-based on the exact
// log-polar images (relative gap 1e-6, circular in the angle); the cluster
// count must divide |S| with equal cardinalities or AmbiguousClustering is
// thrown.  Requires n != 0.
struct ChiValues {
    std::vector<std::complex<double>> values;
    long long count_each;
};
ChiValues chi_values(const GaloisOrbit& orbit, const std::vector<long>& n);
long long chi_degree(const GaloisOrbit& orbit, const std::vector<long>& n);

enum class PNorm { One, Two, Inf };

struct DegreeReport {
    double D;                   // min ||n||_p * deg(chi^n); integral for p in {1,inf}
    std::vector<long> witness;  // minimizing lattice vector
    PNorm p;
    double h_D;  // height() + log(2D)/(3D)
};

// Exhaustive minimization of ||n||_p * deg(chi^n(xi)) over nonzero integer
// vectors.  Any candidate beating the unit vectors satisfies
// ||n||_1 <= N^(1-1/p) * min_j deg_j, which bounds the search; shells of
// ||n||_1 are scanned in increasing order with an early exit.  Ties prefer
// smaller ||n||_1, then the lexicographically greater vector.  Closed-form
// shortcut: for coordinates d^(1/d) the minimum is the smallest prime; for
// N = 1 the minimum is deg(xi) at witness (1).
DegreeReport generalized_degree(const GaloisOrbit& orbit, PNorm p = PNorm::One);

// h + log(2D)/(3D), the degree-adjusted height.
double adjusted_height(double h, double D);

// (1/|S|) sum_alpha ||s(alpha)||_1; at most 2*height().
double orbit_log_sum(const GaloisOrbit& orbit);

// Fraction of orbit tuples with ||s(alpha)||_1 > delta; at most 2*height()/delta.
double gamma_delta_fraction(const GaloisOrbit& orbit, double delta);

// Character-sum bound for a single algebraic number of degree d and height h:
// 2 sqrt(6|n|) * (h + log(2d)/(3d))^(1/2).
double exp_sum_height_bound(double h, long d, long n = 1);

// Character-sum bound through the generalized degree:
// min{2 sqrt(6 h_D ||n||_1), 1}.
double exp_sum_degree_bound(double h_D, long n_l1);

}  // namespace tequi
