#include "tpww/region.hpp"

#include <algorithm>
#include <cmath>

namespace tpww {

namespace {

// Dense lifted-alpha samples shared by every column of a scanline pass.
struct CrossingFinder {
  const ArcCurve& curve;
  std::vector<double> s, a;
  double amin = 1e300, amax = -1e300;

  CrossingFinder(const ArcCurve& c, int dense_factor) : curve(c) {
    const int m = dense_factor * c.size();
    const double L = c.length();
    s.resize(m + 1);
    a.resize(m + 1);
    for (int j = 0; j < m; ++j) {
      s[j] = L * j / m;
      a[j] = c.point(s[j])[0];
      amin = std::min(amin, a[j]);
      amax = std::max(amax, a[j]);
    }
    // closing sample carries the winding jump of the lift
    s[m] = L;
    a[m] = a[0] + two_pi * c.winding();
    amin = std::min(amin, a[m]);
    amax = std::max(amax, a[m]);
  }

  double lifted_alpha(double sv) const {
    const double L = curve.length();
    const double wrapped = std::fmod(sv, L);
    return curve.point(wrapped)[0] + (sv >= L ? two_pi * curve.winding() : 0.0);
  }

  // beta values of all crossings of the column x (mod 2*pi), ascending.
  std::vector<double> betas_at(double x) const {
    const double L = curve.length();
    const int m = static_cast<int>(s.size()) - 1;
    std::vector<double> roots;
    const int k_lo = static_cast<int>(std::floor((amin - x) / two_pi)) - 1;
    const int k_hi = static_cast<int>(std::ceil((amax - x) / two_pi)) + 1;
    for (int k = k_lo; k <= k_hi; ++k) {
      const double level = x + two_pi * k;
      if (level < amin - 1e-12 || level > amax + 1e-12) continue;
      for (int j = 0; j < m; ++j) {
        const double g0 = a[j] - level;
        const double g1 = a[j + 1] - level;
        if (g0 == 0.0) {
          roots.push_back(s[j]);
        } else if (g0 * g1 < 0.0) {
          double lo = s[j], hi = s[j + 1];
          for (int it = 0; it < 50; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double gm = lifted_alpha(mid) - level;
            if (g0 * gm <= 0.0)
              hi = mid;
            else
              lo = mid;
          }
          roots.push_back(std::fmod(0.5 * (lo + hi), L));
        }
      }
    }
    // Dedupe by parameter (grid-aligned roots can be seen twice); distinct
    // parameters with equal heights are genuine double crossings and must
    // both survive for the parity count.
    std::sort(roots.begin(), roots.end());
    std::vector<double> uniq;
    for (double r : roots) {
      if (uniq.empty() || std::min(r - uniq.back(), L - (r - uniq.back())) > 1e-9 * L) {
        uniq.push_back(r);
      }
    }
    std::vector<double> betas;
    betas.reserve(uniq.size());
    for (double r : uniq) betas.push_back(curve.point(r)[1]);
    std::sort(betas.begin(), betas.end());
    return betas;
  }
};

}  // namespace

std::vector<double> vertical_crossings(const ArcCurve& curve, double x, int dense_factor) {
  return CrossingFinder(curve, dense_factor).betas_at(x);
}

double region_integral(const ArcCurve& curve, bool lower, double y_lo, double y_hi,
                       const std::function<double(double, double)>& f, int n_columns,
                       int gl_order) {
  const auto& gl = gauss_legendre(gl_order);
  const CrossingFinder finder(curve, 8);

  double acc = 0.0;
  for (int i = 0; i < n_columns; ++i) {
    const double x = two_pi * i / n_columns;
    const auto cross = finder.betas_at(x);

    std::vector<double> cuts;
    cuts.push_back(y_lo);
    for (double b : cross) {
      if (b > y_lo && b < y_hi) cuts.push_back(b);
    }
    cuts.push_back(y_hi);

    double col = 0.0;
    for (size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
      const double ya = cuts[seg], yb = cuts[seg + 1];
      if (yb - ya < 1e-14) continue;
      const double probe = 0.5 * (ya + yb);
      int above = 0;
      for (double c : cross) {
        if (c > probe) ++above;
      }
      const bool in_upper = (above % 2 == 0);  // even crossings above: upper side
      if (in_upper == lower) continue;
      for (int q = 0; q < gl_order; ++q) {
        const double y = 0.5 * (ya + yb) + 0.5 * (yb - ya) * gl.nodes[q];
        col += 0.5 * (yb - ya) * gl.weights[q] * f(x, y);
      }
    }
    acc += col;
  }
  return acc * two_pi / n_columns;
}

double region_area(const ArcCurve& curve, bool lower, double h, int n_columns) {
  const double y_lo = lower ? -h : curve.min_beta() - 1.0;
  const double y_hi = lower ? curve.max_beta() + 1.0 : h;
  return region_integral(
      curve, lower, y_lo, y_hi, [](double, double) { return 1.0; }, n_columns, 4);
}

}  // namespace tpww
