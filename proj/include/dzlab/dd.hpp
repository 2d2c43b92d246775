#pragma once

// Minimal double-double arithmetic (~106-bit mantissa).  Used for the
// signed root sums of gap certificates and for reducing large cosine
// phases modulo 2*pi without losing the low bits.

#include <cmath>

namespace dzlab {

struct DD {
    double hi = 0.0;
    double lo = 0.0;

    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

namespace detail {
inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
}  // namespace detail

inline DD dd_add(DD a, DD b) {
    DD s = detail::two_sum(a.hi, b.hi);
    double lo = s.lo + a.lo + b.lo;
    return detail::quick_two_sum(s.hi, lo);
}

inline DD dd_sub(DD a, DD b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(DD a, DD b) {
    DD p = detail::two_prod(a.hi, b.hi);
    double lo = p.lo + a.hi * b.lo + a.lo * b.hi;
    return detail::quick_two_sum(p.hi, lo);
}

inline DD dd_mul(DD a, double b) {
    DD p = detail::two_prod(a.hi, b);
    double lo = p.lo + a.lo * b;
    return detail::quick_two_sum(p.hi, lo);
}

inline DD dd_div(DD a, DD b) {
    double q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul(b, q1));
    double q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul(b, q2));
    double q3 = r.hi / b.hi;
    DD q = detail::quick_two_sum(q1, q2);
    return dd_add(q, DD{q3});
}

// sqrt of a nonnegative double with one Newton refinement in dd.
inline DD dd_sqrt(double x) {
    if (x == 0.0) return {};
    double s = std::sqrt(x);
    // x - s*s exactly, then half a Newton step
    DD ss = detail::two_prod(s, s);
    DD diff = dd_add(DD{x}, DD{-ss.hi, -ss.lo});
    double corr = diff.value() / (2.0 * s);
    return detail::quick_two_sum(s, corr);
}

inline DD dd_sqrt(DD x) {
    if (x.hi == 0.0) return {};
    double s = std::sqrt(x.hi);
    DD ss = detail::two_prod(s, s);
    DD diff = dd_sub(x, ss);
    double corr = diff.value() / (2.0 * s);
    return detail::quick_two_sum(s, corr);
}

inline const DD kDD2Pi{6.283185307179586476925286766559, 2.4492935982947063545e-16};

// arg mod 2*pi, mapped to [0, 2*pi).  Keeps ~1e-22 absolute phase error
// for |arg| up to ~1e10.
inline double dd_mod_2pi(DD arg) {
    double k = std::floor(arg.value() / kDD2Pi.value());
    DD r = dd_sub(arg, dd_mul(kDD2Pi, k));
    while (r.value() < 0.0) r = dd_add(r, kDD2Pi);
    while (r.value() >= kDD2Pi.value()) r = dd_sub(r, kDD2Pi);
    return r.value();
}

}  // namespace dzlab
