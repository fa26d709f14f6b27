#include "tequi/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "tequi/dd.hpp"
#include "tequi/errors.hpp"

namespace tequi {

namespace {

using cd = std::complex<double>;

cd cpow_uint(cd z, int e) {
    cd r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

// Evaluates the scaled polynomial and its derivative.  Uses a gap-skipping
// Horner when the coefficient vector is sparse enough for binary powering of
// the gaps to win.
struct Evaluator {
    const IntPolynomial::DoubleView& v;
    int deg;
    bool sparse;

    Evaluator(const IntPolynomial::DoubleView& view, int degree)
        : v(view),
          deg(degree),
          sparse(degree >= 64 && v.nonzero.size() * 8 <= static_cast<std::size_t>(degree)) {}

    void eval(cd z, cd& p, cd& dp) const {
        if (!sparse) {
            p = 0.0;
            dp = 0.0;
            for (int j = deg; j >= 0; --j) {
                dp = dp * z + p;
                p = p * z + v.coeffs[static_cast<std::size_t>(j)];
            }
            return;
        }
        const auto& nz = v.nonzero;
        auto k = static_cast<long>(nz.size()) - 1;
        p = v.coeffs[static_cast<std::size_t>(nz[static_cast<std::size_t>(k)])];
        dp = 0.0;
        int cur = nz[static_cast<std::size_t>(k)];
        for (--k; k >= 0; --k) {
            const int nxt = nz[static_cast<std::size_t>(k)];
            const int gap = cur - nxt;
            const cd zg1 = cpow_uint(z, gap - 1);
            const cd zg = zg1 * z;
            dp = dp * zg + p * (static_cast<double>(gap) * zg1);
            p = p * zg + v.coeffs[static_cast<std::size_t>(nxt)];
            cur = nxt;
        }
        if (cur > 0) {
            const cd zg1 = cpow_uint(z, cur - 1);
            dp = dp * (zg1 * z) + p * (static_cast<double>(cur) * zg1);
            p = p * (zg1 * z);
        }
    }
};

// log of |P(z)| residual scale: ||P||_1 * max(1,|z|)^deg, kept in log space so
// large-degree polynomials cannot overflow the check.
double log_scale(double norm1, int deg, double abs_z) {
    return std::log(norm1) + deg * std::max(0.0, std::log(abs_z));
}

// Initial points on annuli read off the upper convex hull of (j, log|c_j|).
// For each hull segment the segment slope gives the annulus radius; the points
// are spread with irrational angular offsets to break symmetry.
std::vector<cd> initial_points(const IntPolynomial::DoubleView& v, int deg) {
    struct Pt {
        int j;
        double u;
    };
    std::vector<Pt> pts;
    pts.reserve(v.nonzero.size());
    for (int j : v.nonzero)
        pts.push_back({j, std::log(std::fabs(v.coeffs[static_cast<std::size_t>(j)]))});
    std::vector<Pt> hull;
    for (const Pt& p : pts) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull[hull.size() - 1];
            // keep b only if it lies strictly above chord a-p
            if ((b.u - a.u) * (p.j - a.j) <= (p.u - a.u) * (b.j - a.j))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<cd> z;
    z.reserve(static_cast<std::size_t>(deg));
    const double tau = 2.0 * std::numbers::pi;
    for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
        const int k = hull[s + 1].j - hull[s].j;
        const double r = std::exp((hull[s].u - hull[s + 1].u) / k);
        for (int i = 0; i < k; ++i) {
            const double ang = tau * ((i + 0.26) / k + 0.61803398875 * static_cast<double>(s));
            z.push_back(std::polar(r, ang));
        }
    }
    return z;
}

struct Workspace {
    std::vector<cd> z;
    std::vector<char> frozen;
};

void aberth(const Evaluator& ev, double norm1, const PrecisionProfile& prof, Workspace& w) {
    const auto n = w.z.size();
    const double log_tol = std::log(prof.residual_tol);
    int sweeps = 0;
    std::size_t done = 0;
    while (done < n && sweeps < prof.max_sweeps) {
        ++sweeps;
        for (std::size_t i = 0; i < n; ++i) {
            if (w.frozen[i]) continue;
            cd p, dp;
            ev.eval(w.z[i], p, dp);
            const double az = std::abs(w.z[i]);
            if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
                w.z[i] *= 0.5;  // evaluation overflowed; pull toward the origin
                continue;
            }
            if (std::abs(p) == 0.0 ||
                std::log(std::abs(p)) <= log_tol + log_scale(norm1, ev.deg, az)) {
                w.frozen[i] = 1;
                ++done;
                continue;
            }
            if (dp == 0.0) {
                w.z[i] += cd(1e-3, 1e-3) * (1.0 + az);
                continue;
            }
            const cd newton = p / dp;
            cd repulse = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const cd d = w.z[i] - w.z[j];
                const double a2 = d.real() * d.real() + d.imag() * d.imag();
                if (a2 == 0.0) continue;
                const double inv = 1.0 / a2;
                repulse += cd(d.real() * inv, -d.imag() * inv);
            }
            const cd den = 1.0 - newton * repulse;
            cd step = (den == 0.0) ? newton : newton / den;
            const double cap = 1.0 + az;
            const double as = std::abs(step);
            if (!std::isfinite(as)) {
                step = newton;
            } else if (as > cap) {
                step *= cap / as;
            }
            w.z[i] -= step;
            if (std::abs(step) <= 4.0 * 0x1p-52 * (az + 1e-300)) {
                w.frozen[i] = 1;  // stagnated at the noise floor
                ++done;
            }
        }
    }
}

void newton_polish(const Evaluator& ev, std::vector<cd>& z, int steps) {
    for (cd& zi : z) {
        for (int s = 0; s < steps; ++s) {
            cd p, dp;
            ev.eval(zi, p, dp);
            if (dp == 0.0) break;
            const cd step = p / dp;
            if (!std::isfinite(std::abs(step))) break;
            if (std::abs(step) > 0.1 * (1.0 + std::abs(zi))) break;
            zi -= step;
        }
    }
}

// Exact conjugate pairing for real polynomials: every root is matched with the
// existing root closest to its conjugate (possibly itself) and the pair is
// replaced by an exactly conjugate pair.
void symmetrize(std::vector<cd>& z) {
    const auto n = z.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (z[a].real() != z[b].real()) return z[a].real() < z[b].real();
        return z[a].imag() < z[b].imag();
    });
    std::vector<char> matched(n, 0);
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        if (matched[i]) continue;
        const cd target = std::conj(z[i]);
        std::size_t best = i;
        double best_d = std::abs(target - z[i]);
        // candidates share (approximately) the real part, so scan outward in
        // the sorted order until the real gap alone exceeds the best match
        for (std::size_t dir = 0; dir < 2; ++dir) {
            std::size_t oj = oi;
            while (true) {
                if (dir == 0) {
                    if (oj == 0) break;
                    --oj;
                } else {
                    if (++oj >= n) break;
                }
                const std::size_t j = order[oj];
                if (std::fabs(z[j].real() - target.real()) > best_d) break;
                if (matched[j] || j == i) continue;
                const double d = std::abs(target - z[j]);
                if (d < best_d) {
                    best_d = d;
                    best = j;
                }
            }
        }
        if (best == i) {
            z[i] = cd(z[i].real(), 0.0);
            matched[i] = 1;
        } else {
            const cd zi = 0.5 * (z[i] + std::conj(z[best]));
            z[i] = zi;
            z[best] = std::conj(zi);
            matched[i] = matched[best] = 1;
        }
    }
}

struct DdPoly {
    std::vector<dd> coeffs;  // scaled, dense

    explicit DdPoly(const IntPolynomial& p, int deg) {
        long max_exp = 0;
        bool any = false;
        for (int j = 0; j <= deg; ++j) {
            if (p.coeff(j) == 0) continue;
            long e = 0;
            mpz_get_d_2exp(&e, p.coeff(j).get_mpz_t());
            if (!any || e > max_exp) max_exp = e;
            any = true;
        }
        coeffs.resize(static_cast<std::size_t>(deg) + 1);
        for (int j = 0; j <= deg; ++j) {
            const mpz_class& v = p.coeff(j);
            if (v == 0) continue;
            const double hi = v.get_d();
            const mpz_class rem = v - mpz_class(hi);
            const double lo = rem.get_d();
            const int sh = static_cast<int>(-max_exp);
            coeffs[static_cast<std::size_t>(j)] = {std::ldexp(hi, sh), std::ldexp(lo, sh)};
        }
    }

    void eval(cdd z, cdd& pv, cdd& dpv) const {
        pv = {{0, 0}, {0, 0}};
        dpv = {{0, 0}, {0, 0}};
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            dpv = cdd_add(cdd_mul(dpv, z), pv);
            pv = cdd_add(cdd_mul(pv, z), {*it, {0, 0}});
        }
    }
};

cd dd_newton(const DdPoly& poly, cd z0) {
    cdd z = cdd_from(z0);
    for (int s = 0; s < 6; ++s) {
        cdd pv, dpv;
        poly.eval(z, pv, dpv);
        if (cdd_abs(dpv) == 0.0) break;
        const cdd step = cdd_div(pv, dpv);
        z = cdd_sub(z, step);
        if (cdd_abs(step) <= 1e-30 * (1.0 + cdd_abs(z))) break;
    }
    return cdd_value(z);
}

}  // namespace

RootSet find_roots(const IntPolynomial& p, const PrecisionProfile& profile) {
    if (p.degree() < 1) throw DegenerateInput("root finding needs degree >= 1");
    const int deg = p.degree();

    // Deflate exact zero roots (trailing zero coefficients).
    int zero_count = 0;
    while (p.coeff(zero_count) == 0) ++zero_count;
    std::vector<mpz_class> shifted;
    for (int j = zero_count; j <= deg; ++j) shifted.push_back(p.coeff(j));
    const IntPolynomial q(std::move(shifted));
    const int qdeg = q.degree();

    IntPolynomial::DoubleView view = q.double_view();
    Evaluator ev(view, qdeg);

    Workspace w;
    if (qdeg >= 1) {
        if (qdeg == 1) {
            w.z.push_back(cd(-view.coeffs[0] / view.coeffs[1], 0.0));
        } else {
            w.z = initial_points(view, qdeg);
        }
        w.frozen.assign(w.z.size(), 0);
        if (qdeg > 1) aberth(ev, view.norm1, profile, w);
        newton_polish(ev, w.z, 3);
        symmetrize(w.z);
    }

    std::vector<cd> roots = std::move(w.z);
    for (int j = 0; j < zero_count; ++j) roots.push_back(cd(0.0, 0.0));

    // Newton inclusion radius r = deg*|P(z)/P'(z)|: the disk D(z, r) always
    // holds a true root, and for a k-fold root whose approximations split by
    // some distance s the radii scale like deg*s/(2k), so the split disks
    // overlap no matter where the iteration stalled.  Simple converged roots
    // get radii near the residual floor and never merge spuriously.  |P(z)| is
    // padded by the evaluation noise majorant so a value that is pure noise
    // cannot fake a tiny radius.
    const auto n = roots.size();
    const double radius_cap_unit = 1e-4;
    std::vector<double> radius(n, 0.0);
    double max_radius = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (roots[i] == 0.0) continue;  // deflated zeros are exact
        const double az = std::abs(roots[i]);
        const double cap = radius_cap_unit * (1.0 + az);
        cd pv, dpv;
        ev.eval(roots[i], pv, dpv);
        double r = cap;
        const double log_noise =
            std::log(static_cast<double>(qdeg) * 0x1p-52) + log_scale(view.norm1, qdeg, az);
        if (std::isfinite(std::abs(pv)) && std::isfinite(std::abs(dpv)) && dpv != 0.0 &&
            log_noise < 700.0) {
            const double num = std::abs(pv) + std::exp(log_noise);
            const double cand = static_cast<double>(qdeg) * num / std::abs(dpv);
            if (std::isfinite(cand)) r = std::min(cand, cap);
        }
        radius[i] = r;
        max_radius = std::max(max_radius, r);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (roots[a].real() != roots[b].real()) return roots[a].real() < roots[b].real();
        return roots[a].imag() < roots[b].imag();
    });
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t a = 0; a < n; ++a) {
        const std::size_t i = order[a];
        for (std::size_t b = a + 1; b < n; ++b) {
            const std::size_t j = order[b];
            const double dre = roots[j].real() - roots[i].real();
            if (dre > radius[i] + max_radius) break;
            if (std::abs(roots[i] - roots[j]) <= radius[i] + radius[j]) parent[find(i)] = find(j);
        }
    }

    std::vector<std::vector<std::size_t>> clusters(n);
    for (std::size_t i = 0; i < n; ++i) clusters[find(i)].push_back(i);

    RootSet out;
    out.roots.resize(n);
    out.multiplicity.assign(n, 1);
    bool any_cluster = false;
    std::vector<cd> centers;
    for (const auto& c : clusters) {
        if (c.empty()) continue;
        if (c.size() == 1) {
            out.roots[c[0]] = roots[c[0]];
            centers.push_back(roots[c[0]]);
            continue;
        }
        any_cluster = true;
        cd center = 0.0;
        for (std::size_t i : c) center += roots[i];
        center /= static_cast<double>(c.size());
        centers.push_back(center);
        for (std::size_t i : c) {
            out.roots[i] = center;
            out.multiplicity[i] = static_cast<int>(c.size());
        }
    }
    if (any_cluster) symmetrize(out.roots);

    // Certified gap: closest pair among the distinct cluster centers.
    std::sort(centers.begin(), centers.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    double gap = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < centers.size(); ++a) {
        for (std::size_t b = a + 1; b < centers.size(); ++b) {
            if (centers[b].real() - centers[a].real() > gap) break;
            gap = std::min(gap, std::abs(centers[a] - centers[b]));
        }
    }
    out.certified_gap = gap;

    // Residuals, extended-precision polish where needed, final residuals.
    auto residual_of = [&](cd z) {
        if (z == 0.0) return 0.0;  // exact deflated zero root
        cd pv, dpv;
        ev.eval(z, pv, dpv);
        return std::abs(pv) / std::exp(log_scale(view.norm1, qdeg, std::abs(z)));
    };
    out.residuals.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.residuals[i] = residual_of(out.roots[i]);

    DdPoly* ddp = nullptr;
    DdPoly dd_storage(q, qdeg);
    for (std::size_t i = 0; i < n; ++i) {
        if (out.roots[i] == 0.0) continue;
        const bool near_circle = std::fabs(std::abs(out.roots[i]) - 1.0) <= 1e-6;
        if (!(profile.force_extended || near_circle || out.residuals[i] > profile.residual_tol))
            continue;
        if (out.multiplicity[i] > 1) continue;  // Newton is wrong on clusters
        ddp = &dd_storage;
        out.roots[i] = dd_newton(*ddp, out.roots[i]);
        out.residuals[i] = residual_of(out.roots[i]);
    }
    if (ddp != nullptr) symmetrize(out.roots);
    for (std::size_t i = 0; i < n; ++i) out.residuals[i] = residual_of(out.roots[i]);

    for (std::size_t i = 0; i < n; ++i) {
        if (out.multiplicity[i] == 1 && out.residuals[i] > profile.residual_tol)
            throw NonConvergence("root residual above target after extended-precision polish");
    }
    return out;
}

}  // namespace tequi
