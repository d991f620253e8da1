#pragma once

#include <functional>
#include <vector>

#include "tpww/geometry.hpp"

namespace tpww {

// beta values where the curve crosses the vertical line at x (mod 2*pi),
// sorted ascending. Transversal crossings only; tangencies are resolved by
// the sign pattern on a dense parameter grid.
std::vector<double> vertical_crossings(const ArcCurve& curve, double x,
                                       int dense_factor = 8);

// Integral of f(x, y) over the part of the column {y in (y_lo, y_hi)} lying
// below (lower = true) or above the curve, decided by crossing parity: a
// point is above the curve iff an upward ray meets it an even number of
// times. Columns are combined with the periodic trapezoid rule; each smooth
// segment uses Gauss-Legendre.
double region_integral(const ArcCurve& curve, bool lower, double y_lo, double y_hi,
                       const std::function<double(double, double)>& f,
                       int n_columns = 512, int gl_order = 16);

// Area of the region between the curve and the line y = -h (lower) or
// y = +h (upper).
double region_area(const ArcCurve& curve, bool lower, double h,
                   int n_columns = 2048);

// Integral over the strip (y_lo, y_hi) of the crossing-count field
// F(x, y) = sum over crossings above y of sign(alpha_s); together with the
// winding it reconstructs the mass volume form for arbitrary orientation:
// M = int F dxdy - winding * 2*pi * |y_lo|   (y_lo = -h+).
double signed_region_integral(const ArcCurve& curve, double y_lo, double y_hi,
                              int n_columns = 2048);

}  // namespace tpww
