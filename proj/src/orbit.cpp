#include "tequi/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tequi/errors.hpp"
#include "tequi/mahler.hpp"
#include "tequi/roots.hpp"

namespace tequi {

namespace {

using cd = std::complex<double>;
constexpr double tau = 2.0 * std::numbers::pi;

double to_turns(cd z) {
    double t = std::arg(z) / tau;
    if (t < 0.0) t += 1.0;
    if (t >= 1.0) t = 0.0;  // guard against arg = -epsilon rounding up
    return t;
}

bool is_prime(long d) {
    if (d < 2) return false;
    for (long q = 2; q * q <= d; ++q)
        if (d % q == 0) return false;
    return true;
}

long long checked_product(const std::vector<int>& degs) {
    long long p = 1;
    for (int d : degs) {
        if (p > (1LL << 62) / d) throw CapExceeded("orbit size exceeds the supported range");
        p *= d;
    }
    return p;
}

// Gap clustering of log-polar values: split on relative magnitude gaps above
// 1e-6, then on angular gaps above 1e-6 turns with circular wraparound.
std::vector<std::vector<std::size_t>> cluster_log_polar(const std::vector<double>& lm,
                                                        const std::vector<double>& ang) {
    const std::size_t n = lm.size();
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return lm[a] < lm[b]; });
    double scale = 1.0;
    for (double v : lm) scale = std::max(scale, std::fabs(v));
    const double tol_m = 1e-6 * scale;
    const double tol_a = 1e-6;

    std::vector<std::vector<std::size_t>> out;
    std::size_t lo = 0;
    while (lo < n) {
        std::size_t hi = lo + 1;
        while (hi < n && lm[idx[hi]] - lm[idx[hi - 1]] <= tol_m) ++hi;
        // same magnitude band: order by angle, split on circular gaps
        std::vector<std::size_t> band(idx.begin() + static_cast<long>(lo),
                                      idx.begin() + static_cast<long>(hi));
        std::sort(band.begin(), band.end(),
                  [&](std::size_t a, std::size_t b) { return ang[a] < ang[b]; });
        const std::size_t first_out = out.size();
        std::size_t a0 = 0;
        for (std::size_t a1 = 1; a1 <= band.size(); ++a1) {
            if (a1 == band.size() || ang[band[a1]] - ang[band[a1 - 1]] > tol_a) {
                out.emplace_back(band.begin() + static_cast<long>(a0),
                                 band.begin() + static_cast<long>(a1));
                a0 = a1;
            }
        }
        // wraparound: the group ending near 1 turn may continue at 0
        if (out.size() - first_out >= 2) {
            const auto& first = out[first_out];
            auto& last = out.back();
            if (ang[first.front()] + 1.0 - ang[last.back()] <= tol_a) {
                out[first_out].insert(out[first_out].end(), last.begin(), last.end());
                out.pop_back();
            }
        }
        lo = hi;
    }
    return out;
}

void require_dim(const GaloisOrbit& orbit, std::size_t got, const char* what) {
    if (static_cast<int>(got) != orbit.dim())
        throw DegenerateInput(std::string(what) + ": vector length must equal the dimension");
}

struct CoordRoots {
    std::vector<double> theta, s;
    double log_measure;
};

CoordRoots analyze_minpoly(const IntPolynomial& p) {
    if (p.degree() < 1) throw DegenerateInput("minimal polynomial must have degree >= 1");
    if (p.trailing() == 0) throw DegenerateInput("zero is not on the torus (constant term vanishes)");
    if (!squarefree_check(p)) throw DegenerateInput("minimal polynomial must be squarefree");
    RootSet rs;
    try {
        rs = find_roots(p);
    } catch (const NonConvergence& e) {
        throw RootFindingFailure(e.what());
    }
    CoordRoots out;
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        if (rs.multiplicity[i] != 1)
            throw RootFindingFailure("conjugates of a squarefree polynomial were not separated");
        out.theta.push_back(to_turns(rs.roots[i]));
        out.s.push_back(std::log(std::abs(rs.roots[i])));
    }
    out.log_measure = log_mahler_measure(p, rs);
    return out;
}

// Equal up to the last few ulps: independently converged conjugates of one
// modulus (e.g. +-sqrt(2)) land within rounding of each other, not bitwise.
bool all_equal(const std::vector<double>& v) {
    const double tol = 1e-12 * (1.0 + std::fabs(v.front()));
    return std::all_of(v.begin(), v.end(),
                       [&](double x) { return std::fabs(x - v.front()) <= tol; });
}

}  // namespace

int GaloisOrbit::min_coord_degree() const {
    return *std::min_element(coord_deg_.begin(), coord_deg_.end());
}

double GaloisOrbit::theta(long long i, int j) const {
    if (!product_form_) return etheta_[static_cast<std::size_t>(i) * dim() + j];
    long long q = i;
    for (int c = 0; c < j; ++c) q /= coord_deg_[static_cast<std::size_t>(c)];
    return ctheta_[static_cast<std::size_t>(j)]
                  [static_cast<std::size_t>(q % coord_deg_[static_cast<std::size_t>(j)])];
}

double GaloisOrbit::s(long long i, int j) const {
    if (!product_form_) return es_[static_cast<std::size_t>(i) * dim() + j];
    long long q = i;
    for (int c = 0; c < j; ++c) q /= coord_deg_[static_cast<std::size_t>(c)];
    return cs_[static_cast<std::size_t>(j)]
              [static_cast<std::size_t>(q % coord_deg_[static_cast<std::size_t>(j)])];
}

std::complex<double> GaloisOrbit::value(long long i, int j) const {
    return std::polar(std::exp(s(i, j)), tau * theta(i, j));
}

GaloisOrbit build_orbit(const OrbitSpec& spec) {
    GaloisOrbit o;
    o.mode_ = spec.mode;
    switch (spec.mode) {
        case OrbitMode::SingleNumber: {
            if (spec.polys.size() != 1)
                throw DegenerateInput("single-number mode takes exactly one polynomial");
            const auto cr = analyze_minpoly(spec.polys[0]);
            const int d = static_cast<int>(cr.theta.size());
            if (spec.root_index < 0 || spec.root_index >= d)
                throw DegenerateInput("chosen root index out of range");
            o.coord_deg_ = {d};
            o.ctheta_ = {cr.theta};
            o.cs_ = {cr.s};
            o.height_ = cr.log_measure / d;
            break;
        }
        case OrbitMode::ProductOfCoprimeDegrees: {
            if (spec.polys.empty()) throw DegenerateInput("product mode needs polynomials");
            for (const auto& p : spec.polys) {
                const auto cr = analyze_minpoly(p);
                const int d = static_cast<int>(cr.theta.size());
                o.coord_deg_.push_back(d);
                o.ctheta_.push_back(cr.theta);
                o.cs_.push_back(cr.s);
                o.height_ += cr.log_measure / d;
            }
            for (std::size_t a = 0; a < o.coord_deg_.size(); ++a)
                for (std::size_t b = a + 1; b < o.coord_deg_.size(); ++b)
                    if (std::gcd(o.coord_deg_[a], o.coord_deg_[b]) != 1)
                        throw CoprimalityViolation("coordinate degrees must be pairwise coprime");
            break;
        }
        case OrbitMode::ClosedFormXdMinusD: {
            if (spec.primes.empty()) throw DegenerateInput("closed-form mode needs primes");
            for (std::size_t a = 0; a < spec.primes.size(); ++a)
                for (std::size_t b = a + 1; b < spec.primes.size(); ++b)
                    if (spec.primes[a] == spec.primes[b])
                        throw CoprimalityViolation("closed-form primes must be pairwise distinct");
            for (long d : spec.primes) {
                if (!is_prime(d)) throw DegenerateInput("closed-form entries must be prime");
                std::vector<double> th(static_cast<std::size_t>(d));
                for (long k = 0; k < d; ++k)
                    th[static_cast<std::size_t>(k)] =
                        static_cast<double>(k) / static_cast<double>(d);
                const double sv = std::log(static_cast<double>(d)) / static_cast<double>(d);
                o.coord_deg_.push_back(static_cast<int>(d));
                o.ctheta_.push_back(std::move(th));
                o.cs_.push_back(std::vector<double>(static_cast<std::size_t>(d), sv));
                o.height_ += sv;
            }
            o.primes_ = spec.primes;
            break;
        }
        case OrbitMode::ExplicitTuples: {
            if (spec.tuples.empty()) throw DegenerateInput("explicit mode needs tuples");
            const std::size_t N = spec.tuples.front().size();
            if (N == 0) throw DegenerateInput("tuples must have at least one coordinate");
            if (spec.degrees.size() != N)
                throw DegenerateInput("explicit mode needs one declared degree per coordinate");
            if (!spec.leading.empty() && spec.leading.size() != N)
                throw DegenerateInput("leading coefficients must match the dimension");
            for (const auto& t : spec.tuples)
                if (t.size() != N) throw DegenerateInput("tuples must share one dimension");
            const std::size_t S = spec.tuples.size();
            o.product_form_ = false;
            o.size_ = static_cast<long long>(S);
            o.etheta_.resize(S * N);
            o.es_.resize(S * N);
            for (std::size_t i = 0; i < S; ++i) {
                for (std::size_t j = 0; j < N; ++j) {
                    const cd v = spec.tuples[i][j];
                    if (std::abs(v) == 0.0) throw DegenerateInput("zero is not on the torus");
                    o.etheta_[i * N + j] = to_turns(v);
                    o.es_[i * N + j] = std::log(std::abs(v));
                }
            }
            for (std::size_t j = 0; j < N; ++j) {
                const int dj = spec.degrees[j];
                if (dj < 1) throw DegenerateInput("declared degrees must be positive");
                std::vector<double> lm(S), ang(S);
                for (std::size_t i = 0; i < S; ++i) {
                    lm[i] = o.es_[i * N + j];
                    ang[i] = o.etheta_[i * N + j];
                }
                const auto groups = cluster_log_polar(lm, ang);
                if (static_cast<int>(groups.size()) != dj)
                    throw DegenerateInput(
                        "distinct coordinate values do not match the declared degree");
                double m = 0.0;
                if (!spec.leading.empty()) {
                    if (spec.leading[j] == 0)
                        throw DegenerateInput("leading coefficients must be nonzero");
                    mpz_class a = abs(spec.leading[j]);
                    m += log_abs(a);
                }
                for (const auto& g : groups) {
                    double mean = 0.0;
                    for (std::size_t i : g) mean += lm[i];
                    m += std::max(0.0, mean / static_cast<double>(g.size()));
                }
                o.coord_deg_.push_back(dj);
                o.height_ += m / dj;
            }
            break;
        }
    }
    if (o.product_form_) o.size_ = checked_product(o.coord_deg_);
    // constant-s detection enables closed-form fast paths downstream
    if (o.product_form_) {
        o.constant_s_ = std::all_of(o.cs_.begin(), o.cs_.end(), all_equal);
    } else {
        o.constant_s_ = true;
        const auto N = static_cast<std::size_t>(o.dim());
        for (std::size_t i = 1; i < o.es_.size() / N && o.constant_s_; ++i)
            for (std::size_t j = 0; j < N; ++j) {
                const double tol = 1e-12 * (1.0 + std::fabs(o.es_[j]));
                if (std::fabs(o.es_[i * N + j] - o.es_[j]) > tol) {
                    o.constant_s_ = false;
                    break;
                }
            }
    }
    return o;
}

std::complex<double> exp_sum(const GaloisOrbit& orbit, const std::vector<long>& n) {
    require_dim(orbit, n.size(), "exp_sum");
    if (orbit.mode() == OrbitMode::ClosedFormXdMinusD) {
        // (1/d) sum_k e^{2 pi i n k / d} is exactly the divisibility indicator
        for (int j = 0; j < orbit.dim(); ++j)
            if (n[static_cast<std::size_t>(j)] %
                    orbit.closed_form_primes()[static_cast<std::size_t>(j)] !=
                0)
                return 0.0;
        return 1.0;
    }
    if (orbit.product_form()) {
        cd prod = 1.0;
        for (int j = 0; j < orbit.dim(); ++j) {
            const long nj = n[static_cast<std::size_t>(j)];
            if (nj == 0) continue;
            cd f = 0.0;
            for (double th : orbit.coord_theta(j)) f += std::polar(1.0, tau * nj * th);
            prod *= f / static_cast<double>(orbit.coord_degree(j));
        }
        return prod;
    }
    cd sum = 0.0;
    for (long long i = 0; i < orbit.size(); ++i) {
        double phase = 0.0;
        for (int j = 0; j < orbit.dim(); ++j)
            phase += static_cast<double>(n[static_cast<std::size_t>(j)]) * orbit.theta(i, j);
        sum += std::polar(1.0, tau * phase);
    }
    return sum / static_cast<double>(orbit.size());
}

CharDefect char_defect(const GaloisOrbit& orbit, const std::vector<long>& n,
                       const std::vector<double>& t) {
    require_dim(orbit, n.size(), "char_defect");
    require_dim(orbit, t.size(), "char_defect");
    double value;
    if (orbit.product_form()) {
        cd with = 1.0, without = 1.0;
        for (int j = 0; j < orbit.dim(); ++j) {
            const auto ju = static_cast<std::size_t>(j);
            const auto& th = orbit.coord_theta(j);
            const auto& sv = orbit.coord_s(j);
            cd a = 0.0, b = 0.0;
            for (std::size_t k = 0; k < th.size(); ++k) {
                a += std::polar(1.0, tau * (n[ju] * th[k] + t[ju] * sv[k]));
                b += std::polar(1.0, tau * (n[ju] * th[k]));
            }
            with *= a / static_cast<double>(th.size());
            without *= b / static_cast<double>(th.size());
        }
        value = std::abs(with - without);
    } else {
        cd sum = 0.0;
        for (long long i = 0; i < orbit.size(); ++i) {
            double phase_n = 0.0, phase_t = 0.0;
            for (int j = 0; j < orbit.dim(); ++j) {
                phase_n += static_cast<double>(n[static_cast<std::size_t>(j)]) * orbit.theta(i, j);
                phase_t += t[static_cast<std::size_t>(j)] * orbit.s(i, j);
            }
            sum += std::polar(1.0, tau * phase_n) * (std::polar(1.0, tau * phase_t) - 1.0);
        }
        value = std::abs(sum) / static_cast<double>(orbit.size());
    }
    double tinf = 0.0;
    for (double tv : t) tinf = std::max(tinf, std::fabs(tv));
    const double bound =
        std::min(2.0 * std::sqrt(8.0 * std::numbers::pi * orbit.height() * tinf), 2.0);
    return {value, bound};
}

namespace {

constexpr long long kChiEnumerationCap = 2'000'000;

bool n_is_zero(const std::vector<long>& n) {
    return std::all_of(n.begin(), n.end(), [](long v) { return v == 0; });
}

}  // namespace

ChiValues chi_values(const GaloisOrbit& orbit, const std::vector<long>& n) {
    require_dim(orbit, n.size(), "chi_values");
    if (n_is_zero(n)) throw DegenerateInput("chi needs a nonzero exponent vector");
    if (orbit.mode() == OrbitMode::ClosedFormXdMinusD) {
        // chi^n values are M e^{2 pi i r/Q}, Q = prod of primes not dividing n_j
        long long Q = 1;
        double lm = 0.0;
        for (int j = 0; j < orbit.dim(); ++j) {
            const long d = orbit.closed_form_primes()[static_cast<std::size_t>(j)];
            const long nj = n[static_cast<std::size_t>(j)];
            lm += static_cast<double>(nj) * std::log(static_cast<double>(d)) /
                  static_cast<double>(d);
            if (nj % d != 0) Q *= d;
        }
        if (Q > kChiEnumerationCap)
            throw CapExceeded("distinct chi values exceed the enumeration cap");
        ChiValues out;
        const double M = std::exp(lm);
        for (long long r = 0; r < Q; ++r)
            out.values.push_back(
                std::polar(M, tau * static_cast<double>(r) / static_cast<double>(Q)));
        out.count_each = orbit.size() / Q;
        return out;
    }
    if (orbit.size() > kChiEnumerationCap)
        throw CapExceeded("orbit too large to enumerate chi values");
    const auto S = static_cast<std::size_t>(orbit.size());
    std::vector<double> lm(S), ang(S);
    for (std::size_t i = 0; i < S; ++i) {
        double m = 0.0, a = 0.0;
        for (int j = 0; j < orbit.dim(); ++j) {
            const auto nj = static_cast<double>(n[static_cast<std::size_t>(j)]);
            m += nj * orbit.s(static_cast<long long>(i), j);
            a += nj * orbit.theta(static_cast<long long>(i), j);
        }
        a -= std::floor(a);
        if (a >= 1.0) a = 0.0;
        lm[i] = m;
        ang[i] = a;
    }
    const auto groups = cluster_log_polar(lm, ang);
    const std::size_t c = groups.front().size();
    for (const auto& g : groups)
        if (g.size() != c)
            throw AmbiguousClustering("chi value clusters have unequal cardinalities");
    if (c * groups.size() != S)
        throw AmbiguousClustering("chi value cluster count does not divide the orbit size");
    ChiValues out;
    out.count_each = static_cast<long long>(c);
    for (const auto& g : groups) {
        cd mean = 0.0;
        for (std::size_t i : g) mean += std::polar(std::exp(lm[i]), tau * ang[i]);
        out.values.push_back(mean / static_cast<double>(g.size()));
    }
    return out;
}

long long chi_degree(const GaloisOrbit& orbit, const std::vector<long>& n) {
    require_dim(orbit, n.size(), "chi_degree");
    if (n_is_zero(n)) throw DegenerateInput("chi needs a nonzero exponent vector");
    if (orbit.mode() == OrbitMode::ClosedFormXdMinusD) {
        long long Q = 1;
        for (int j = 0; j < orbit.dim(); ++j) {
            const long d = orbit.closed_form_primes()[static_cast<std::size_t>(j)];
            if (n[static_cast<std::size_t>(j)] % d != 0) Q *= d;
        }
        return Q;
    }
    return static_cast<long long>(chi_values(orbit, n).values.size());
}

double adjusted_height(double h, double D) { return h + std::log(2.0 * D) / (3.0 * D); }

namespace {

// Lattice vectors with ||n||_1 = r in lexicographically descending order, so
// the first minimum found is the tie-break winner.
template <typename F>
void enumerate_shell(std::vector<long>& n, std::size_t c, long rem, F&& emit) {
    if (c + 1 == n.size()) {
        n[c] = rem;
        emit();
        if (rem != 0) {
            n[c] = -rem;
            emit();
        }
        return;
    }
    for (long v = rem; v >= -rem; --v) {
        n[c] = v;
        enumerate_shell(n, c + 1, rem - std::labs(v), emit);
    }
}

}  // namespace

DegreeReport generalized_degree(const GaloisOrbit& orbit, PNorm p) {
    const int N = orbit.dim();
    const int min_deg = orbit.min_coord_degree();

    if (N == 1) {  // |n| deg(chi^n) >= deg for every n; n = 1 attains it
        const double D = orbit.coord_degree(0);
        return {D, {1}, p, adjusted_height(orbit.height(), D)};
    }
    if (orbit.mode() == OrbitMode::ClosedFormXdMinusD) {
        // unit vector at the smallest prime: every other candidate has
        // ||n||_p >= 1 and chi degree >= min prime, or chi degree 1 at
        // ||n||_1 >= min prime
        const auto& ds = orbit.closed_form_primes();
        const auto arg = static_cast<std::size_t>(
            std::min_element(ds.begin(), ds.end()) - ds.begin());
        std::vector<long> witness(static_cast<std::size_t>(N), 0);
        witness[arg] = 1;
        const double D = static_cast<double>(ds[arg]);
        return {D, std::move(witness), p, adjusted_height(orbit.height(), D)};
    }

    const double shell_factor = p == PNorm::One    ? 1.0
                                : p == PNorm::Two  ? std::sqrt(static_cast<double>(N))
                                                   : static_cast<double>(N);
    // Integer comparison keys avoid float ties: p=1: ||n||_1*deg,
    // p=2: ||n||_2^2*deg^2, p=inf: ||n||_inf*deg.
    using key_t = unsigned __int128;
    key_t best_key = 0;
    bool have_best = false;
    double best_value = 0.0;
    std::vector<long> best_n;

    const long rmax = static_cast<long>(std::ceil(shell_factor * min_deg)) + 1;
    std::vector<long> n(static_cast<std::size_t>(N), 0);
    for (long r = 1; r <= rmax; ++r) {
        if (have_best && static_cast<double>(r) / shell_factor >= best_value) break;
        enumerate_shell(n, 0, r, [&] {
            key_t lb = 0;  // key with deg(chi^n) = 1
            long long sq = 0, mx = 0;
            for (long v : n) {
                sq += static_cast<long long>(v) * v;
                mx = std::max(mx, static_cast<long long>(std::labs(v)));
            }
            switch (p) {
                case PNorm::One: lb = static_cast<key_t>(r); break;
                case PNorm::Two: lb = static_cast<key_t>(sq); break;
                case PNorm::Inf: lb = static_cast<key_t>(mx); break;
            }
            if (have_best && lb >= best_key) return;
            const auto deg = static_cast<unsigned long long>(chi_degree(orbit, n));
            key_t key = 0;
            double value = 0.0;
            switch (p) {
                case PNorm::One:
                    key = static_cast<key_t>(r) * deg;
                    value = static_cast<double>(r) * static_cast<double>(deg);
                    break;
                case PNorm::Two:
                    key = static_cast<key_t>(sq) * deg * deg;
                    value = std::sqrt(static_cast<double>(sq)) * static_cast<double>(deg);
                    break;
                case PNorm::Inf:
                    key = static_cast<key_t>(mx) * deg;
                    value = static_cast<double>(mx) * static_cast<double>(deg);
                    break;
            }
            if (!have_best || key < best_key) {
                have_best = true;
                best_key = key;
                best_value = value;
                best_n = n;
            }
        });
    }
    return {best_value, std::move(best_n), p, adjusted_height(orbit.height(), best_value)};
}

double orbit_log_sum(const GaloisOrbit& orbit) {
    if (orbit.product_form()) {
        double total = 0.0;
        for (int j = 0; j < orbit.dim(); ++j) {
            double m = 0.0;
            for (double sv : orbit.coord_s(j)) m += std::fabs(sv);
            total += m / static_cast<double>(orbit.coord_degree(j));
        }
        return total;
    }
    double total = 0.0;
    for (long long i = 0; i < orbit.size(); ++i)
        for (int j = 0; j < orbit.dim(); ++j) total += std::fabs(orbit.s(i, j));
    return total / static_cast<double>(orbit.size());
}

double gamma_delta_fraction(const GaloisOrbit& orbit, double delta) {
    if (!(delta > 0.0)) throw DegenerateInput("delta must be positive");
    if (orbit.constant_s()) {
        double l1 = 0.0;
        for (int j = 0; j < orbit.dim(); ++j)
            l1 += std::fabs(orbit.product_form() ? orbit.coord_s(j).front()
                                                 : orbit.s(0, j));
        return l1 > delta ? 1.0 : 0.0;
    }
    if (!orbit.product_form() || orbit.dim() == 1) {
        long long count = 0;
        for (long long i = 0; i < orbit.size(); ++i) {
            double l1 = 0.0;
            for (int j = 0; j < orbit.dim(); ++j) l1 += std::fabs(orbit.s(i, j));
            if (l1 > delta) ++count;
        }
        return static_cast<double>(count) / static_cast<double>(orbit.size());
    }
    if (orbit.dim() == 2) {  // sort one coordinate, binary-search the other
        std::vector<double> y;
        for (double sv : orbit.coord_s(1)) y.push_back(std::fabs(sv));
        std::sort(y.begin(), y.end());
        long long count = 0;
        for (double sv : orbit.coord_s(0)) {
            const double need = delta - std::fabs(sv);
            count += y.end() - std::upper_bound(y.begin(), y.end(), need);
        }
        return static_cast<double>(count) / static_cast<double>(orbit.size());
    }
    if (orbit.size() > kChiEnumerationCap)
        throw CapExceeded("orbit too large to enumerate tail fractions");
    long long count = 0;
    for (long long i = 0; i < orbit.size(); ++i) {
        double l1 = 0.0;
        for (int j = 0; j < orbit.dim(); ++j) l1 += std::fabs(orbit.s(i, j));
        if (l1 > delta) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(orbit.size());
}

double exp_sum_height_bound(double h, long d, long n) {
    return 2.0 * std::sqrt(6.0 * static_cast<double>(std::labs(n)) *
                           adjusted_height(h, static_cast<double>(d)));
}

double exp_sum_degree_bound(double h_D, long n_l1) {
    return std::min(2.0 * std::sqrt(6.0 * h_D * static_cast<double>(n_l1)), 1.0);
}

}  // namespace tequi
