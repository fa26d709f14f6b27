#pragma once

#include <cmath>
#include <complex>

namespace tequi {

// Minimal double-double arithmetic (~106-bit significand).  Used only as the
// extended-precision fallback for root polishing, so the operation set is just
// what a complex Horner evaluation and a Newton step need.
struct dd {
    double hi = 0.0;
    double lo = 0.0;
};

inline dd dd_two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline dd dd_quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline dd dd_two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline dd dd_add(dd a, dd b) {
    dd s = dd_two_sum(a.hi, b.hi);
    s.lo += a.lo + b.lo;
    return dd_quick_two_sum(s.hi, s.lo);
}

inline dd dd_neg(dd a) { return {-a.hi, -a.lo}; }

inline dd dd_sub(dd a, dd b) { return dd_add(a, dd_neg(b)); }

inline dd dd_mul(dd a, dd b) {
    dd p = dd_two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return dd_quick_two_sum(p.hi, p.lo);
}

inline dd dd_div(dd a, dd b) {
    const double q1 = a.hi / b.hi;
    dd r = dd_sub(a, dd_mul({q1, 0.0}, b));
    const double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul({q2, 0.0}, b));
    const double q3 = r.hi / b.hi;
    dd q = dd_quick_two_sum(q1, q2);
    q.lo += q3;
    return dd_quick_two_sum(q.hi, q.lo);
}

inline double dd_value(dd a) { return a.hi + a.lo; }

// Complex double-double.
struct cdd {
    dd re, im;
};

inline cdd cdd_from(std::complex<double> z) { return {{z.real(), 0.0}, {z.imag(), 0.0}}; }

inline std::complex<double> cdd_value(cdd z) { return {dd_value(z.re), dd_value(z.im)}; }

inline cdd cdd_add(cdd a, cdd b) { return {dd_add(a.re, b.re), dd_add(a.im, b.im)}; }

inline cdd cdd_sub(cdd a, cdd b) { return {dd_sub(a.re, b.re), dd_sub(a.im, b.im)}; }

inline cdd cdd_mul(cdd a, cdd b) {
    return {dd_sub(dd_mul(a.re, b.re), dd_mul(a.im, b.im)),
            dd_add(dd_mul(a.re, b.im), dd_mul(a.im, b.re))};
}

inline cdd cdd_div(cdd a, cdd b) {
    const dd den = dd_add(dd_mul(b.re, b.re), dd_mul(b.im, b.im));
    const dd re = dd_add(dd_mul(a.re, b.re), dd_mul(a.im, b.im));
    const dd im = dd_sub(dd_mul(a.im, b.re), dd_mul(a.re, b.im));
    return {dd_div(re, den), dd_div(im, den)};
}

inline double cdd_abs(cdd z) { return std::hypot(dd_value(z.re), dd_value(z.im)); }

}  // namespace tequi
