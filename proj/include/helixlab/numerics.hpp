#pragma once

#include "helixlab/vec3.hpp"

namespace helixlab {

/// Derivative at x of the quadratic through (xa, fa), (xb, fb), (xc, fc).
/// Evaluated at the middle abscissa this is the three-point centered
/// difference (uneven spacing allowed); at an end abscissa it is the
/// second-order one-sided difference.
inline double quad_derivative(double xa, double fa, double xb, double fb, double xc, double fc,
                              double x) {
    return fa * (2.0 * x - xb - xc) / ((xa - xb) * (xa - xc)) +
           fb * (2.0 * x - xa - xc) / ((xb - xa) * (xb - xc)) +
           fc * (2.0 * x - xa - xb) / ((xc - xa) * (xc - xb));
}

inline Vec3 quad_derivative(double xa, const Vec3& fa, double xb, const Vec3& fb, double xc,
                            const Vec3& fc, double x) {
    return {quad_derivative(xa, fa.x, xb, fb.x, xc, fc.x, x),
            quad_derivative(xa, fa.y, xb, fb.y, xc, fc.y, x),
            quad_derivative(xa, fa.z, xb, fb.z, xc, fc.z, x)};
}

}  // namespace helixlab
