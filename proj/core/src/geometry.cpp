#include "tpww/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "tpww/errors.hpp"

namespace tpww {

void GraphInterface::require_depth_margin(double depth_plus, double depth_minus,
                                          double d0) const {
  const double min_depth = std::min(depth_plus, depth_minus);
  if (!std::isfinite(min_depth)) return;
  if (max_abs() + d0 > min_depth) {
    throw domain_error("interface violates the depth margin: max|eta| + d0 > min depth");
  }
}

std::vector<double> GraphInterface::curvature(double tail_tol) const {
  if (eta_.tail_ratio() > tail_tol) {
    throw resolution_error("interface spectral tail above threshold; refine resolution");
  }
  const auto d1 = eta_.derivative().samples();
  const auto d2 = eta_.derivative(2).samples();
  std::vector<double> kappa(d1.size());
  for (size_t j = 0; j < d1.size(); ++j) {
    const double w = 1.0 + d1[j] * d1[j];
    kappa[j] = -d2[j] / (w * std::sqrt(w));
  }
  return kappa;
}

double GraphInterface::curvature_sup() const {
  const auto d1 = eta_.derivative().samples(4 * n_modes());
  const auto d2 = eta_.derivative(2).samples(4 * n_modes());
  double m = 0.0;
  for (size_t j = 0; j < d1.size(); ++j) {
    const double w = 1.0 + d1[j] * d1[j];
    m = std::max(m, std::abs(d2[j]) / (w * std::sqrt(w)));
  }
  return m;
}

ArcCurve::ArcCurve(std::span<const double> alpha, std::span<const double> beta,
                   double length, int winding, double speed_tol)
    : n_(static_cast<int>(alpha.size())),
      length_(length),
      winding_(winding),
      alpha_(alpha.begin(), alpha.end()),
      beta_(beta.begin(), beta.end()) {
  if (n_ < 8 || n_ % 2 != 0) throw domain_error("ArcCurve needs an even node count >= 8");
  if (beta.size() != alpha.size()) throw domain_error("alpha/beta size mismatch");
  if (!(length > 0.0)) throw domain_error("curve length must be positive");

  std::vector<double> tilde(n_);
  for (int j = 0; j < n_; ++j) tilde[j] = alpha_[j] - winding_ * two_pi * j / n_;
  alpha_tilde_ = Spectrum::from_samples(tilde);
  beta_sp_ = Spectrum::from_samples(beta_);

  if (max_speed_error() > speed_tol) {
    throw domain_error("curve nodes are not an arc-length parametrization (|gamma_s| != 1)");
  }
}

double ArcCurve::max_speed_error() const {
  const auto as = alpha_s_nodes();
  const auto bs = beta_s_nodes();
  double m = 0.0;
  for (int j = 0; j < n_; ++j) {
    m = std::max(m, std::abs(std::hypot(as[j], bs[j]) - 1.0));
  }
  return m;
}

std::vector<double> ArcCurve::alpha_s_nodes() const {
  // alpha_s = (2pi/L) * (winding + alpha_tilde'(sigma))
  auto d = alpha_tilde_.derivative().samples();
  const double scale = two_pi / length_;
  for (auto& v : d) v = scale * (winding_ + v);
  return d;
}

std::vector<double> ArcCurve::beta_s_nodes() const {
  auto d = beta_sp_.derivative().samples();
  const double scale = two_pi / length_;
  for (auto& v : d) v *= scale;
  return d;
}

ArcCurve ArcCurve::from_parametric(const std::function<Vec2(double)>& gamma, int n,
                                   int winding) {
  const int m = std::max(4 * n, 512);
  std::vector<double> xt(m), yt(m);
  for (int j = 0; j < m; ++j) {
    const Vec2 p = gamma(two_pi * j / m);
    xt[j] = p[0] - winding * (two_pi * j / m);
    yt[j] = p[1];
  }
  const Spectrum sx = Spectrum::from_samples(xt);
  const Spectrum sy = Spectrum::from_samples(yt);

  auto speed = [&](double t) {
    const double dx = winding + sx.eval_derivative(t);
    const double dy = sy.eval_derivative(t);
    return std::hypot(dx, dy);
  };

  // Arc length s(t) by spectral antidifferentiation of the (smooth, periodic)
  // speed; trapezoid sampling of speed is spectrally accurate.
  std::vector<double> sp(m);
  for (int j = 0; j < m; ++j) sp[j] = speed(two_pi * j / m);
  const Spectrum ssp = Spectrum::from_samples(sp);
  const double mean_speed = ssp.mean();
  const double total_length = two_pi * mean_speed;
  Spectrum anti = ssp;
  for (int k = -anti.size() / 2 + 1; k < anti.size() / 2; ++k) {
    anti.set_coeff(k, k == 0 ? 0.0 : ssp.coeff(k) / std::complex<double>(0.0, k));
  }
  auto arclen = [&](double t) { return mean_speed * t + anti.eval(t) - anti.eval(0.0); };

  std::vector<double> alpha(n), beta(n);
  double t = 0.0;
  for (int j = 0; j < n; ++j) {
    const double target = total_length * j / n;
    // Newton with bisection fallback; s(t) is strictly increasing.
    double lo = t, hi = two_pi;
    for (int it = 0; it < 100; ++it) {
      const double f = arclen(t) - target;
      if (std::abs(f) < 1e-13 * total_length) break;
      const double df = speed(t);
      double tn = t - f / df;
      if (f > 0)
        hi = t;
      else
        lo = t;
      if (!(tn > lo && tn < hi)) tn = 0.5 * (lo + hi);
      t = tn;
    }
    alpha[j] = winding * t + sx.eval(t);
    beta[j] = sy.eval(t);
  }
  return ArcCurve(alpha, beta, total_length, winding, 1e-6);
}

ArcCurve ArcCurve::from_graph(const GraphInterface& g, int n) {
  const Spectrum eta = g.elevation();
  return from_parametric([&](double t) { return Vec2{t, eta.eval(t)}; }, n, 1);
}

ArcCurve ArcCurve::circle(double radius, Vec2 center, int n, bool positively_oriented) {
  std::vector<double> alpha(n), beta(n);
  const double sgn = positively_oriented ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) {
    const double th = two_pi * j / n;
    alpha[j] = center[0] + radius * std::cos(th);
    beta[j] = center[1] + sgn * radius * std::sin(th);
  }
  return ArcCurve(alpha, beta, two_pi * radius, 0, 1e-10);
}

Vec2 ArcCurve::point(double s) const {
  const double sigma = two_pi * s / length_;
  return {winding_ * sigma + alpha_tilde_.eval(sigma), beta_sp_.eval(sigma)};
}

Vec2 ArcCurve::tangent(double s) const {
  const double sigma = two_pi * s / length_;
  const double scale = two_pi / length_;
  return {scale * (winding_ + alpha_tilde_.eval_derivative(sigma)),
          scale * beta_sp_.eval_derivative(sigma)};
}

Vec2 ArcCurve::normal(double s) const {
  const Vec2 t = tangent(s);
  return {-t[1], t[0]};
}

std::vector<double> ArcCurve::curvature(double tail_tol) const {
  if (alpha_tilde_.tail_ratio() > tail_tol || beta_sp_.tail_ratio() > tail_tol) {
    throw resolution_error("curve spectral tail above threshold; refine resolution");
  }
  const auto as = alpha_s_nodes();
  const auto bs = beta_s_nodes();
  const double s2 = (two_pi / length_) * (two_pi / length_);
  auto a2 = alpha_tilde_.derivative(2).samples();
  auto b2 = beta_sp_.derivative(2).samples();
  std::vector<double> kappa(n_);
  for (int j = 0; j < n_; ++j) {
    kappa[j] = s2 * a2[j] * bs[j] - s2 * b2[j] * as[j];
  }
  return kappa;
}

double ArcCurve::curvature_at(double s) const {
  const double sigma = two_pi * s / length_;
  const double sc = two_pi / length_;
  const double as = sc * (winding_ + alpha_tilde_.eval_derivative(sigma));
  const double bs = sc * beta_sp_.eval_derivative(sigma);
  const double ass = sc * sc * alpha_tilde_.eval_derivative(sigma, 2);
  const double bss = sc * sc * beta_sp_.eval_derivative(sigma, 2);
  return ass * bs - bss * as;
}

double ArcCurve::curvature_sup() const {
  double m = 0.0;
  const int fine = 4 * n_;
  for (int j = 0; j < fine; ++j) {
    m = std::max(m, std::abs(curvature_at(length_ * j / fine)));
  }
  return m;
}

double ArcCurve::min_beta() const {
  return *std::min_element(beta_.begin(), beta_.end());
}

double ArcCurve::max_beta() const {
  return *std::max_element(beta_.begin(), beta_.end());
}

ArcCurve ArcCurve::translated(double dx) const {
  std::vector<double> a(alpha_);
  for (auto& v : a) v += dx;
  return ArcCurve(a, beta_, length_, winding_, 1e-6);
}

ArcCurve ArcCurve::reversed() const {
  std::vector<double> a(n_), b(n_);
  for (int j = 0; j < n_; ++j) {
    const int src = (n_ - j) % n_;
    a[j] = alpha_[src];
    b[j] = beta_[src];
  }
  return ArcCurve(a, b, length_, -winding_, 1e-6);
}

double torus_dx(double x1, double x2) {
  double d = std::fmod(x1 - x2, two_pi);
  if (d > M_PI) d -= two_pi;
  if (d < -M_PI) d += two_pi;
  return d;
}

namespace {

double chord_over_arc(const ArcCurve& c, double s1, double s2) {
  double ds = std::fmod(std::abs(s1 - s2), c.length());
  ds = std::min(ds, c.length() - ds);
  if (ds < 1e-14) return 1.0;
  const Vec2 p = c.point(s1);
  const Vec2 q = c.point(s2);
  const double chord = std::hypot(torus_dx(p[0], q[0]), p[1] - q[1]);
  return chord / ds;
}

double golden_min_1d(const std::function<double(double)>& f, double a, double b) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 60; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 < f2 ? x1 : x2;
}

}  // namespace

double chord_arc_constant(const ArcCurve& curve) {
  const int n = curve.size();
  const double L = curve.length();
  const auto& ax = curve.alpha_nodes();
  const auto& by = curve.beta_nodes();

  double best = 1.0;
  int bi = 0, bj = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double ds = L * (j - i) / n;
      ds = std::min(ds, L - ds);
      const double chord = std::hypot(torus_dx(ax[i], ax[j]), by[i] - by[j]);
      const double r = chord / ds;
      if (r < best) {
        best = r;
        bi = i;
        bj = j;
      }
    }
  }

  // The continuous minimizer may fall between nodes; polish by coordinate
  // golden-section around the discrete minimum.
  const double h = L / n;
  double s1 = L * bi / n, s2 = L * bj / n;
  for (int round = 0; round < 4; ++round) {
    s1 = golden_min_1d([&](double s) { return chord_over_arc(curve, s, s2); }, s1 - h,
                       s1 + h);
    s2 = golden_min_1d([&](double s) { return chord_over_arc(curve, s1, s); }, s2 - h,
                       s2 + h);
  }
  best = std::min(best, chord_over_arc(curve, s1, s2));

  if (best < 1e-12) {
    throw self_intersection_error("chord-arc constant collapsed: curve self-intersects");
  }
  return std::min(1.0, best);
}

double epsilon_of_state(const ArcCurve& curve, double d0, double n0) {
  if (!(d0 > 0.0)) {
    throw domain_error("boundary distance d0 must be positive");
  }
  const double c0 = chord_arc_constant(curve);
  const double ksup = curve.curvature_sup();
  return std::min(c0 / (n0 * (ksup + 1.0)), d0);
}

double strip_distance(const ArcCurve& curve, double depth_plus, double depth_minus) {
  double d = infinite_depth;
  if (std::isfinite(depth_plus)) d = std::min(d, depth_plus + curve.min_beta());
  if (std::isfinite(depth_minus)) d = std::min(d, depth_minus - curve.max_beta());
  return d;
}

TubularReport tubular_map_check(const TubularMap& map, int ns, int nr) {
  const ArcCurve& c = map.base;
  const double L = c.length();
  const double eps = map.epsilon;
  if (nr < 3) nr = 3;

  TubularReport rep;
  const double ksup = c.curvature_sup();
  rep.local_bound = ksup > 0.0 ? 4.0 / (map.n0 * ksup) : infinite_depth;

  std::vector<double> svals(ns), kvals(ns);
  for (int i = 0; i < ns; ++i) {
    svals[i] = L * i / ns;
    kvals[i] = c.curvature_at(svals[i]);
  }
  std::vector<double> rvals(nr);
  for (int j = 0; j < nr; ++j) rvals[j] = -eps + 2.0 * eps * j / (nr - 1);

  for (int i = 0; i < ns; ++i) {
    for (int j = 0; j < nr; ++j) {
      const double det = 1.0 + rvals[j] * kvals[i];
      rep.j_min = std::min(rep.j_min, det);
    }
  }
  if (rep.j_min <= 0.0) {
    rep.jacobian_positive = false;
    rep.injective = false;
    // locate one offending grid point for the error payload
    for (int i = 0; i < ns; ++i) {
      for (int j = 0; j < nr; ++j) {
        if (1.0 + rvals[j] * kvals[i] <= 0.0) {
          const std::array<double, 2> p{svals[i], rvals[j]};
          throw tube_collision_error("tube Jacobian sign change: 1 + r*kappa <= 0", p, p);
        }
      }
    }
  }

  const double c0 = chord_arc_constant(c);
  std::vector<Vec2> pts(ns * nr);
  for (int i = 0; i < ns; ++i) {
    const Vec2 g = c.point(svals[i]);
    const Vec2 nrm = c.normal(svals[i]);
    for (int j = 0; j < nr; ++j) {
      pts[i * nr + j] = {g[0] + rvals[j] * nrm[0], g[1] + rvals[j] * nrm[1]};
    }
  }

  const double thresh = 0.2 * std::min(1.0, c0);
  for (int p = 0; p < ns * nr; ++p) {
    for (int q = p + 1; q < ns * nr; ++q) {
      const int i1 = p / nr, j1 = p % nr, i2 = q / nr, j2 = q % nr;
      double dsv = std::abs(svals[i1] - svals[i2]);
      dsv = std::min(dsv, L - dsv);
      const double dr = rvals[j1] - rvals[j2];
      const double dpar = std::hypot(dsv, dr);
      if (dpar < 1e-14) continue;
      const double dim =
          std::hypot(torus_dx(pts[p][0], pts[q][0]), pts[p][1] - pts[q][1]);
      if (dim < thresh * dpar) {
        TubeCollision col{{svals[i1], rvals[j1]}, {svals[i2], rvals[j2]}, dim, dsv};
        rep.collisions.push_back(col);
      }
    }
  }
  if (!rep.collisions.empty()) {
    rep.injective = false;
    const auto& col = rep.collisions.front();
    throw tube_collision_error("tube map not injective on the sample grid", col.a, col.b);
  }
  return rep;
}

StripBoundReport length_curvature_bound(const ArcCurve& curve, double depth_plus,
                                        double depth_minus, double n0) {
  if (!std::isfinite(depth_plus) || !std::isfinite(depth_minus)) {
    throw domain_error("length-curvature bound requires finite depths");
  }
  const double d0 = strip_distance(curve, depth_plus, depth_minus);
  if (!(d0 > 0.0)) throw domain_error("curve is not strictly inside the strip");

  StripBoundReport rep;
  rep.epsilon = epsilon_of_state(curve, d0, n0);
  rep.product = curve.length() * rep.epsilon;
  rep.bound = two_pi * (depth_plus + depth_minus);
  rep.slack = rep.bound - rep.product;
  rep.pass = rep.slack >= 0.0;
  return rep;
}

namespace {

std::vector<std::vector<double>> parse_numeric_csv(const std::string& path, int min_cols) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open file: " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream ss(s);
    std::vector<double> row;
    double v;
    bool ok = true;
    std::string tok;
    std::istringstream probe(s);
    if (!(probe >> tok) || tok.empty() || tok[0] == '#') continue;
    ss.clear();
    ss.str(s);
    while (ss >> v) row.push_back(v);
    if (row.empty()) {
      if (rows.empty()) continue;  // header line
      ok = false;
    }
    if (!ok || (int)row.size() < min_cols) {
      if (rows.empty() && row.empty()) continue;
      throw config_error("bad numeric row in " + path, lineno);
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw config_error("no data rows in " + path);
  return rows;
}

}  // namespace

GraphInterface load_graph_csv(const std::string& path) {
  const auto rows = parse_numeric_csv(path, 2);
  const int n = static_cast<int>(rows.size());
  if (n % 2 != 0) throw config_error("graph sample count must be even: " + path);
  std::vector<double> eta(n);
  const double h = two_pi / n;
  for (int j = 0; j < n; ++j) {
    if (std::abs(rows[j][0] - j * h) > 1e-9 * two_pi) {
      throw config_error("graph x column must be the uniform grid 2*pi*j/N: " + path);
    }
    eta[j] = rows[j][1];
  }
  return GraphInterface(eta);
}

ArcCurve load_curve_csv(const std::string& path) {
  const auto rows = parse_numeric_csv(path, 3);
  const int n = static_cast<int>(rows.size());
  if (n % 2 != 0 || n < 8) throw config_error("curve sample count must be even, >= 8: " + path);

  // Rows are an arbitrary closed parametrization; unwrap x, infer the
  // winding from the total unwrapped increase, then resample to arc length.
  std::vector<double> x(n), y(n);
  double lift = 0.0;
  for (int j = 0; j < n; ++j) {
    double xv = rows[j][1];
    if (j > 0) {
      double step = xv + lift - x[j - 1];
      while (step > M_PI) {
        lift -= two_pi;
        step -= two_pi;
      }
      while (step < -M_PI) {
        lift += two_pi;
        step += two_pi;
      }
    }
    x[j] = xv + lift;
    y[j] = rows[j][2];
  }
  const double closing_step = std::remainder(rows[0][1] - x[n - 1], two_pi);
  const int w = static_cast<int>(std::lround((x[n - 1] + closing_step - x[0]) / two_pi));

  std::vector<double> xt(n), yt(n);
  for (int j = 0; j < n; ++j) {
    xt[j] = x[j] - w * (two_pi * j / n);
    yt[j] = y[j];
  }
  const Spectrum sx = Spectrum::from_samples(xt);
  const Spectrum sy = Spectrum::from_samples(yt);
  return ArcCurve::from_parametric(
      [&](double t) {
        return Vec2{w * t + sx.eval(t), sy.eval(t)};
      },
      n, w);
}

}  // namespace tpww
