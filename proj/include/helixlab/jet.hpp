#pragma once

#include <cmath>

namespace helixlab {

/// Degree-4 Taylor jet: a value and its raw derivatives 1..4 at a point.
/// Derivatives are stored undivided by factorials, everywhere. Fourth order
/// is the ceiling by design: the arc-length derivatives of curvature and
/// torsion need the fourth position derivative and nothing needs the fifth.
///
/// The transcendental functions below assume their argument is inside the
/// real domain; callers that evaluate user expressions check first.
struct Jet4 {
    double d0 = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
    double d3 = 0.0;
    double d4 = 0.0;

    static Jet4 constant(double c) { return {c, 0.0, 0.0, 0.0, 0.0}; }
    static Jet4 variable(double t) { return {t, 1.0, 0.0, 0.0, 0.0}; }
};

inline Jet4 operator+(const Jet4& a, const Jet4& b) {
    return {a.d0 + b.d0, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3, a.d4 + b.d4};
}

inline Jet4 operator-(const Jet4& a, const Jet4& b) {
    return {a.d0 - b.d0, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3, a.d4 - b.d4};
}

inline Jet4 operator-(const Jet4& a) { return {-a.d0, -a.d1, -a.d2, -a.d3, -a.d4}; }

/// Leibniz rule with binomial weights.
inline Jet4 operator*(const Jet4& a, const Jet4& b) {
    return {a.d0 * b.d0,
            a.d1 * b.d0 + a.d0 * b.d1,
            a.d2 * b.d0 + 2.0 * a.d1 * b.d1 + a.d0 * b.d2,
            a.d3 * b.d0 + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.d0 * b.d3,
            a.d4 * b.d0 + 4.0 * a.d3 * b.d1 + 6.0 * a.d2 * b.d2 + 4.0 * a.d1 * b.d3 +
                a.d0 * b.d4};
}

inline Jet4 operator*(const Jet4& a, double c) {
    return {a.d0 * c, a.d1 * c, a.d2 * c, a.d3 * c, a.d4 * c};
}
inline Jet4 operator*(double c, const Jet4& a) { return a * c; }

inline Jet4 operator+(const Jet4& a, double c) { return {a.d0 + c, a.d1, a.d2, a.d3, a.d4}; }
inline Jet4 operator+(double c, const Jet4& a) { return a + c; }
inline Jet4 operator-(const Jet4& a, double c) { return a + (-c); }
inline Jet4 operator-(double c, const Jet4& a) { return -a + c; }

/// Chain rule (Faa di Bruno through order 4) for an outer function with plain
/// derivatives f0..f4 at u.d0.
inline Jet4 compose(const Jet4& u, double f0, double f1, double f2, double f3, double f4) {
    const double u1 = u.d1, u2 = u.d2, u3 = u.d3, u4 = u.d4;
    return {f0,
            f1 * u1,
            f1 * u2 + f2 * u1 * u1,
            f1 * u3 + 3.0 * f2 * u1 * u2 + f3 * u1 * u1 * u1,
            f1 * u4 + f2 * (4.0 * u1 * u3 + 3.0 * u2 * u2) + 6.0 * f3 * u1 * u1 * u2 +
                f4 * u1 * u1 * u1 * u1};
}

inline Jet4 reciprocal(const Jet4& u) {
    const double w = 1.0 / u.d0;
    const double w2 = w * w;
    return compose(u, w, -w2, 2.0 * w2 * w, -6.0 * w2 * w2, 24.0 * w2 * w2 * w);
}

inline Jet4 operator/(const Jet4& a, const Jet4& b) { return a * reciprocal(b); }
inline Jet4 operator/(const Jet4& a, double c) { return a * (1.0 / c); }
inline Jet4 operator/(double c, const Jet4& a) { return reciprocal(a) * c; }

inline Jet4 sin(const Jet4& u) {
    const double s = std::sin(u.d0), c = std::cos(u.d0);
    return compose(u, s, c, -s, -c, s);
}

inline Jet4 cos(const Jet4& u) {
    const double s = std::sin(u.d0), c = std::cos(u.d0);
    return compose(u, c, -s, -c, s, c);
}

inline Jet4 tan(const Jet4& u) { return sin(u) / cos(u); }

inline Jet4 exp(const Jet4& u) {
    const double e = std::exp(u.d0);
    return compose(u, e, e, e, e, e);
}

/// Requires u.d0 > 0.
inline Jet4 log(const Jet4& u) {
    const double w = 1.0 / u.d0;
    const double w2 = w * w;
    return compose(u, std::log(u.d0), w, -w2, 2.0 * w2 * w, -6.0 * w2 * w2);
}

/// Requires u.d0 > 0 (the derivatives blow up at zero).
inline Jet4 sqrt(const Jet4& u) {
    const double r = std::sqrt(u.d0);
    const double w = 1.0 / u.d0;
    return compose(u, r, 0.5 * r * w, -0.25 * r * w * w, 0.375 * r * w * w * w,
                   -0.9375 * r * w * w * w * w);
}

/// Integer power by binary exponentiation; negative n through the reciprocal.
inline Jet4 powi(const Jet4& u, long long n) {
    if (n < 0) return reciprocal(powi(u, -n));
    Jet4 acc = Jet4::constant(1.0);
    Jet4 base = u;
    long long m = n;
    while (m > 0) {
        if (m & 1) acc = acc * base;
        m >>= 1;
        if (m) base = base * base;
    }
    return acc;
}

}  // namespace helixlab
