#include "tequi/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "tequi/errors.hpp"
#include "tequi/util.hpp"

namespace tequi {
namespace {

double wrap(double x) {
    double w = x - std::floor(x);
    if (w >= 1.0) w = 0.0;  // guard against rounding at the seam
    return w;
}

// One coordinate axis: sorted distinct values with multiplicity prefix sums.
struct Axis {
    std::vector<double> u;   // distinct coordinate values, ascending
    std::vector<long> pref;  // pref[i] = number of points with value index < i
    long m = 0;

    long count_leq(long i) const { return pref[static_cast<std::size_t>(i) + 1]; }
    long mult(long i) const {
        return pref[static_cast<std::size_t>(i) + 1] - pref[static_cast<std::size_t>(i)];
    }
    // Points with value index in the cyclic range [i..j].
    long count_span(long i, long j, long total) const {
        if (i <= j) return pref[static_cast<std::size_t>(j) + 1] - pref[static_cast<std::size_t>(i)];
        return total - (pref[static_cast<std::size_t>(i)] - pref[static_cast<std::size_t>(j) + 1]);
    }
    // Forward arc length from u[i] to u[j]; 0 for the degenerate arc.
    double len(long i, long j) const {
        if (i == j) return 0.0;
        if (i < j) return u[static_cast<std::size_t>(j)] - u[static_cast<std::size_t>(i)];
        return 1.0 - (u[static_cast<std::size_t>(i)] - u[static_cast<std::size_t>(j)]);
    }
};

Axis build_axis(const std::vector<std::vector<double>>& pts, int axis) {
    Axis a;
    std::vector<double> v;
    v.reserve(pts.size());
    for (const auto& p : pts) v.push_back(wrap(p[static_cast<std::size_t>(axis)]));
    std::sort(v.begin(), v.end());
    a.pref.push_back(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (a.u.empty() || v[i] != a.u.back()) {
            a.u.push_back(v[i]);
            a.pref.push_back(a.pref.back());
        }
        ++a.pref.back();
    }
    a.m = static_cast<long>(a.u.size());
    return a;
}

struct Best {
    double value = -1.0;
    TorusBox box;
    void offer(double v, const TorusBox& b) {
        if (v > value) {
            value = v;
            box = b;
        }
    }
};

TorusBox box1(double start, double length, ArcConvention c) {
    TorusBox b;
    b.arcs = {{start, length}};
    b.convention = c;
    return b;
}

DiscrepancyResult exact_1d(const std::vector<std::vector<double>>& pts) {
    const Axis ax = build_axis(pts, 0);
    const long D = static_cast<long>(pts.size());
    const double dd = static_cast<double>(D);
    Best closed, half;
    half.offer(0.0, box1(0.0, 1.0, ArcConvention::HalfOpen));  // full circle

    for (long i = 0; i < ax.m; ++i) {
        // Degenerate closed arc carrying the atom at u[i].
        closed.offer(static_cast<double>(ax.mult(i)) / dd,
                     box1(ax.u[static_cast<std::size_t>(i)], 0.0, ArcConvention::Closed));
        for (long j = 0; j < ax.m; ++j) {
            if (j == i) continue;
            const long incl = ax.count_span(i, j, D);
            const double len = ax.len(i, j);
            const TorusBox arc = box1(ax.u[static_cast<std::size_t>(i)], len,
                                      ArcConvention::Closed);
            closed.offer(static_cast<double>(incl) / dd - len, arc);
            const long excl = incl - ax.mult(i) - ax.mult(j);
            closed.offer(len - static_cast<double>(excl) / dd, arc);
            // Half-open candidate [u_i, u_j).
            const long ho = incl - ax.mult(j);
            half.offer(std::fabs(static_cast<double>(ho) / dd - len),
                       box1(ax.u[static_cast<std::size_t>(i)], len, ArcConvention::HalfOpen));
        }
    }
    DiscrepancyResult r;
    r.value = closed.value;
    r.witness = closed.box;
    r.half_open_value = half.value;
    r.half_open_witness = half.box;
    return r;
}

// One candidate arc of an axis: a cyclic index range (up to two linear
// pieces, possibly empty) for counting, plus the witness geometry.
struct AxisArc {
    long lo1 = 0, hi1 = -1;  // first piece, empty when hi1 < lo1
    long lo2 = 0, hi2 = -1;  // second piece
    double len = 0.0;
    double start = 0.0;
};

AxisArc make_span(const Axis& ax, long i, long j) {
    AxisArc a;
    a.start = ax.u[static_cast<std::size_t>(i)];
    a.len = ax.len(i, j);
    if (i <= j) {
        a.lo1 = i;
        a.hi1 = j;
    } else {
        a.lo1 = i;
        a.hi1 = ax.m - 1;
        a.lo2 = 0;
        a.hi2 = j;
    }
    return a;
}

// Strict interior of the forward arc u[i] -> u[j] (i != j).
AxisArc make_open(const Axis& ax, long i, long j) {
    AxisArc a;
    a.start = ax.u[static_cast<std::size_t>(i)];
    a.len = ax.len(i, j);
    if (i < j) {
        a.lo1 = i + 1;
        a.hi1 = j - 1;
    } else {
        a.lo1 = i + 1;
        a.hi1 = ax.m - 1;
        a.lo2 = 0;
        a.hi2 = j - 1;
    }
    return a;
}

// The full circle with the single value u[i] removed.
AxisArc make_complement(const Axis& ax, long i) {
    AxisArc a;
    a.start = ax.u[static_cast<std::size_t>(i)];
    a.len = 1.0;
    if (i + 1 <= ax.m - 1) {
        a.lo1 = i + 1;
        a.hi1 = ax.m - 1;
    }
    a.lo2 = 0;
    a.hi2 = i - 1;
    return a;
}

AxisArc make_full(const Axis& ax) {
    AxisArc a;
    a.lo1 = 0;
    a.hi1 = ax.m - 1;
    a.len = 1.0;
    a.start = 0.0;
    return a;
}

// Half-open span [u_i, u_j): indices i..j-1 cyclically.
AxisArc make_half_open(const Axis& ax, long i, long j) {
    AxisArc a;
    a.start = ax.u[static_cast<std::size_t>(i)];
    a.len = ax.len(i, j);
    if (i < j) {
        a.lo1 = i;
        a.hi1 = j - 1;
    } else {
        a.lo1 = i;
        a.hi1 = ax.m - 1;
        a.lo2 = 0;
        a.hi2 = j - 1;
    }
    return a;
}

// Prefix-summed point counts over the (x index, y index) grid.
struct Grid {
    long mx = 0, my = 0;
    std::vector<long> pref;  // (mx+1) x (my+1)

    long at(long i, long j) const {
        return pref[static_cast<std::size_t>(i) * static_cast<std::size_t>(my + 1) +
                    static_cast<std::size_t>(j)];
    }
    long rect(long x1, long x2, long y1, long y2) const {  // inclusive index rect
        if (x2 < x1 || y2 < y1) return 0;
        return at(x2 + 1, y2 + 1) - at(x1, y2 + 1) - at(x2 + 1, y1) + at(x1, y1);
    }
    long count(const AxisArc& a, const AxisArc& b) const {
        return rect(a.lo1, a.hi1, b.lo1, b.hi1) + rect(a.lo1, a.hi1, b.lo2, b.hi2) +
               rect(a.lo2, a.hi2, b.lo1, b.hi1) + rect(a.lo2, a.hi2, b.lo2, b.hi2);
    }
};

long axis_index(const Axis& ax, double v) {
    return std::lower_bound(ax.u.begin(), ax.u.end(), v) - ax.u.begin();
}

DiscrepancyResult exact_2d(const std::vector<std::vector<double>>& pts) {
    const Axis ax = build_axis(pts, 0);
    const Axis ay = build_axis(pts, 1);
    const long D = static_cast<long>(pts.size());
    const double dd = static_cast<double>(D);

    Grid g;
    g.mx = ax.m;
    g.my = ay.m;
    std::vector<long> cell(static_cast<std::size_t>(ax.m) * static_cast<std::size_t>(ay.m), 0);
    for (const auto& p : pts) {
        const long ix = axis_index(ax, wrap(p[0]));
        const long iy = axis_index(ay, wrap(p[1]));
        ++cell[static_cast<std::size_t>(ix) * static_cast<std::size_t>(ay.m) +
               static_cast<std::size_t>(iy)];
    }
    g.pref.assign(static_cast<std::size_t>(ax.m + 1) * static_cast<std::size_t>(ay.m + 1), 0);
    for (long i = 0; i < ax.m; ++i)
        for (long j = 0; j < ay.m; ++j) {
            const long c = cell[static_cast<std::size_t>(i) * static_cast<std::size_t>(ay.m) +
                                static_cast<std::size_t>(j)];
            g.pref[static_cast<std::size_t>(i + 1) * static_cast<std::size_t>(ay.m + 1) +
                   static_cast<std::size_t>(j + 1)] =
                c + g.at(i, j + 1) + g.at(i + 1, j) - g.at(i, j);
        }

    // Candidate arcs per axis.  Inclusive family: spans (atoms included) and
    // the full circle.  Exclusive family: strict interiors and one-value
    // complements.  Half-open family: [u_i, u_j) spans and the full circle.
    const auto build_arcs = [](const Axis& a) {
        std::vector<AxisArc> incl, excl, half;
        for (long i = 0; i < a.m; ++i)
            for (long j = 0; j < a.m; ++j) {
                incl.push_back(make_span(a, i, j));
                if (j != i) {
                    excl.push_back(make_open(a, i, j));
                    half.push_back(make_half_open(a, i, j));
                }
            }
        for (long i = 0; i < a.m; ++i) excl.push_back(make_complement(a, i));
        incl.push_back(make_full(a));
        half.push_back(make_full(a));
        return std::tuple(incl, excl, half);
    };
    const auto [ix, ex, hx] = build_arcs(ax);
    const auto [iy, ey, hy] = build_arcs(ay);

    const auto box2 = [](const AxisArc& a, const AxisArc& b, ArcConvention c) {
        TorusBox t;
        t.arcs = {{a.start, a.len}, {b.start, b.len}};
        t.convention = c;
        return t;
    };

    Best closed, half;
    half.offer(0.0, box1(0.0, 1.0, ArcConvention::HalfOpen));
    for (const AxisArc& a : ix)
        for (const AxisArc& b : iy)
            closed.offer(static_cast<double>(g.count(a, b)) / dd - a.len * b.len,
                         box2(a, b, ArcConvention::Closed));
    for (const AxisArc& a : ex)
        for (const AxisArc& b : ey)
            closed.offer(a.len * b.len - static_cast<double>(g.count(a, b)) / dd,
                         box2(a, b, ArcConvention::Closed));
    for (const AxisArc& a : hx)
        for (const AxisArc& b : hy)
            half.offer(std::fabs(static_cast<double>(g.count(a, b)) / dd - a.len * b.len),
                       box2(a, b, ArcConvention::HalfOpen));

    DiscrepancyResult r;
    r.value = closed.value;
    r.witness = closed.box;
    r.half_open_value = half.value;
    r.half_open_witness = half.box;
    return r;
}

double hD_or_throw_precondition(const GaloisOrbit& orbit) {
    const double hD = generalized_degree(orbit).h_D;
    if (!(hD <= std::exp(-1.0)))
        throw PreconditionHeight("adjusted height exceeds 1/e");
    return hD;
}

}  // namespace

double TorusBox::volume() const {
    double v = 1.0;
    for (const TorusArc& a : arcs) v *= a.length;
    return v;
}

DiscrepancyResult exact_discrepancy(const std::vector<std::vector<double>>& points, long cap) {
    if (points.empty()) throw DegenerateInput("discrepancy of an empty point set");
    const std::size_t N = points.front().size();
    for (const auto& p : points)
        if (p.size() != N) throw DegenerateInput("points of mixed dimension");
    if (N < 1 || N > 2)
        throw DimensionUnsupported("exact discrepancy supports N in {1, 2}");
    if (static_cast<long>(points.size()) > cap)
        throw CapExceeded("point set exceeds the configured discrepancy cap");
    return N == 1 ? exact_1d(points) : exact_2d(points);
}

double etk_bound(const GaloisOrbit& orbit, long M) {
    if (M < 0) throw DegenerateInput("truncation order must be nonnegative");
    const int N = orbit.dim();
    double sum = 0.0;
    if (M > 0) {
        std::vector<long> n(static_cast<std::size_t>(N), -M);
        for (;;) {
            if (std::any_of(n.begin(), n.end(), [](long v) { return v != 0; })) {
                double r = 1.0;
                for (long v : n) r *= std::max(1.0, std::fabs(static_cast<double>(v)));
                sum += std::abs(exp_sum(orbit, n)) / r;
            }
            int j = 0;
            while (j < N && n[static_cast<std::size_t>(j)] == M) {
                n[static_cast<std::size_t>(j)] = -M;
                ++j;
            }
            if (j == N) break;
            ++n[static_cast<std::size_t>(j)];
        }
    }
    return std::pow(1.5, N) * (2.0 / static_cast<double>(M + 1) + sum);
}

AutoM etk_auto_M(const GaloisOrbit& orbit) {
    const double hD = hD_or_throw_precondition(orbit);
    const int N = orbit.dim();
    const double lg = -std::log(hD);  // |log h_D| >= 1
    const double raw = std::exp(-1.5) * std::pow(hD, -1.0 / 3.0) *
                       std::pow(lg, -2.0 * static_cast<double>(N - 1) / 3.0);
    AutoM out;
    out.M = static_cast<long>(std::floor(raw));
    out.bound = etk_bound(orbit, out.M);
    return out;
}

double discrepancy_height_bound(const GaloisOrbit& orbit) {
    const double hD = hD_or_throw_precondition(orbit);
    const int N = orbit.dim();
    const double lg = -std::log(hD);
    return (9.0 * std::pow(1.5, N) + 14.0 * static_cast<double>(N)) * std::cbrt(hD) *
           std::pow(lg, 2.0 * static_cast<double>(N - 1) / 3.0);
}

DiscrepancyResult discrepancy_report(const GaloisOrbit& orbit, long cap) {
    std::vector<std::vector<double>> pts;
    pts.reserve(static_cast<std::size_t>(orbit.size()));
    for (long long i = 0; i < orbit.size(); ++i) {
        std::vector<double> p;
        for (int j = 0; j < orbit.dim(); ++j) p.push_back(wrap(orbit.theta(i, j)));
        pts.push_back(std::move(p));
    }
    DiscrepancyResult r = exact_discrepancy(pts, cap);
    if (generalized_degree(orbit).h_D <= std::exp(-1.0)) {
        r.etk_value = etk_auto_M(orbit).bound;
        r.height_bound = discrepancy_height_bound(orbit);
    } else {
        r.etk_value = etk_bound(orbit, 1);
    }
    return r;
}

double stochastic_discrepancy_lower_bound(const std::vector<std::vector<double>>& points,
                                          long trials, std::uint64_t seed) {
    if (points.empty()) throw DegenerateInput("discrepancy of an empty point set");
    const int N = static_cast<int>(points.front().size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != N) throw DegenerateInput("points of mixed dimension");
    const double dd = static_cast<double>(points.size());

    std::vector<Axis> axes;
    for (int j = 0; j < N; ++j) axes.push_back(build_axis(points, j));

    // Value of the box as a discrepancy lower bound: the larger of the
    // inclusive-count excess and the exclusive-count deficit.
    const auto evaluate = [&](const std::vector<TorusArc>& arcs) {
        double vol = 1.0;
        for (const TorusArc& a : arcs) vol *= a.length;
        long incl = 0, excl = 0;
        for (const auto& p : points) {
            bool in_closed = true, in_open = true;
            for (int j = 0; j < N; ++j) {
                const double pos = wrap(wrap(p[static_cast<std::size_t>(j)]) -
                                        arcs[static_cast<std::size_t>(j)].start);
                const double len = arcs[static_cast<std::size_t>(j)].length;
                if (len >= 1.0) continue;  // full axis
                if (!(pos <= len)) in_closed = false;
                if (!(pos > 0.0 && pos < len)) in_open = false;
                if (!in_closed && !in_open) break;
            }
            if (in_closed) ++incl;
            if (in_open) ++excl;
        }
        return std::max(static_cast<double>(incl) / dd - vol,
                        vol - static_cast<double>(excl) / dd);
    };

    Rng rng(seed);
    double best = 0.0;
    std::vector<TorusArc> arcs(static_cast<std::size_t>(N));
    for (long t = 0; t < trials; ++t) {
        // Degenerate probe: the atom box at one of the points, a candidate the
        // greedy refinement below cannot reach across a value plateau.
        const auto& anchor = points[static_cast<std::size_t>(t) %
                                    points.size()];
        for (int j = 0; j < N; ++j)
            arcs[static_cast<std::size_t>(j)] = {wrap(anchor[static_cast<std::size_t>(j)]), 0.0};
        best = std::max(best, evaluate(arcs));

        for (auto& a : arcs) a = {rng.real(), rng.real()};
        best = std::max(best, evaluate(arcs));
        // Local refinement: snap each endpoint to the nearest coordinate
        // values on either side and keep improvements.
        for (int pass = 0; pass < 3; ++pass) {
            bool improved = false;
            for (int j = 0; j < N; ++j) {
                const Axis& ax = axes[static_cast<std::size_t>(j)];
                const TorusArc keep = arcs[static_cast<std::size_t>(j)];
                const double end = wrap(keep.start + keep.length);
                for (long e = 0; e < 4; ++e) {
                    const double anchor = e < 2 ? keep.start : end;
                    long idx = axis_index(ax, anchor);
                    if (e % 2 == 1) idx = idx == 0 ? ax.m - 1 : idx - 1;
                    if (idx >= ax.m) idx = 0;
                    const double snap = ax.u[static_cast<std::size_t>(idx)];
                    TorusArc cand = keep;
                    if (e < 2) {  // move the start, preserve the end
                        cand.start = snap;
                        cand.length = wrap(end - snap);
                    } else {  // move the end, preserve the start
                        cand.length = wrap(snap - keep.start);
                    }
                    arcs[static_cast<std::size_t>(j)] = cand;
                    const double v = evaluate(arcs);
                    if (v > best) {
                        best = v;
                        improved = true;
                    } else {
                        arcs[static_cast<std::size_t>(j)] = keep;
                    }
                }
            }
            if (!improved) break;
        }
    }
    return best;
}

}  // namespace tequi
