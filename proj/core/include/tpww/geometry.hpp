#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tpww/spectral.hpp"

namespace tpww {

inline constexpr double infinite_depth = std::numeric_limits<double>::infinity();

using Vec2 = std::array<double, 2>;

// Periodic interface elevation y = eta(x) on the torus, sampled uniformly.
// The sample layout admits higher-dimensional tori; the differential
// operators below are implemented for dimension() == 1.
class GraphInterface {
 public:
  explicit GraphInterface(const Spectrum& eta) : eta_(eta) { eta_.enforce_reality(); }
  explicit GraphInterface(std::span<const double> samples)
      : eta_(Spectrum::from_samples(samples)) {}

  static GraphInterface flat(int n) { return GraphInterface(Spectrum(n)); }
  static GraphInterface harmonic(int n, int k, double amplitude, double phase = 0.0) {
    return GraphInterface(Spectrum::harmonic(n, k, amplitude, phase));
  }

  int n_modes() const { return eta_.size(); }
  int dimension() const { return 1; }
  double period() const { return two_pi; }

  const Spectrum& elevation() const { return eta_; }
  Spectrum slope() const { return eta_.derivative(); }

  double mean() const { return eta_.mean(); }
  double max_abs() const { return eta_.max_abs(); }
  double slope_inf() const { return eta_.sup_derivative(); }
  bool zero_mass(double tol = 1e-12) const { return std::abs(eta_.mean()) <= tol; }

  // max|eta| + d0 <= min(H+, H-) whenever a depth is finite; throws
  // domain_error on violation.
  void require_depth_margin(double depth_plus, double depth_minus, double d0) const;

  // kappa(x_j) under the convention tau_s = -kappa n with upward normal,
  // i.e. kappa = -eta'' / (1 + eta'^2)^{3/2}. Throws resolution_error when
  // the spectral tail of eta is above tail_tol.
  std::vector<double> curvature(double tail_tol = 1e-8) const;
  double curvature_sup() const;

 private:
  Spectrum eta_;
};

// Closed curve in T x R sampled at uniform arc-length nodes s_j = j L / n.
// alpha may wind around the torus (alpha(s + L) = alpha(s) + 2*pi*winding);
// beta is periodic. Interfaces separating top from bottom have winding +-1,
// closed bubbles have winding 0.
class ArcCurve {
 public:
  ArcCurve(std::span<const double> alpha, std::span<const double> beta, double length,
           int winding, double speed_tol = 1e-6);

  // Resample an arbitrary C^1 closed parametrization gamma(t), t in [0, 2pi),
  // to uniform arc length (trigonometric interpolation + Newton inversion of
  // the arc-length function).
  static ArcCurve from_parametric(const std::function<Vec2(double)>& gamma, int n,
                                  int winding);
  static ArcCurve from_graph(const GraphInterface& g, int n);
  // positively_oriented: counterclockwise (normal points toward the center).
  static ArcCurve circle(double radius, Vec2 center, int n, bool positively_oriented = true);

  int size() const { return n_; }
  double length() const { return length_; }
  int winding() const { return winding_; }

  // Nodal data.
  const std::vector<double>& alpha_nodes() const { return alpha_; }
  const std::vector<double>& beta_nodes() const { return beta_; }

  Vec2 point(double s) const;
  Vec2 tangent(double s) const;   // gamma_s, unit up to sampling tolerance
  Vec2 normal(double s) const;    // n = (-beta_s, alpha_s)

  // Nodal alpha_s, beta_s (spectral differentiation).
  std::vector<double> alpha_s_nodes() const;
  std::vector<double> beta_s_nodes() const;

  // kappa(s_j) with tau_s = -kappa n, i.e. kappa = alpha_ss beta_s - beta_ss alpha_s.
  std::vector<double> curvature(double tail_tol = 1e-8) const;
  double curvature_sup() const;
  double curvature_at(double s) const;

  double max_speed_error() const;  // sup over nodes of ||gamma_s| - 1|
  double min_beta() const;
  double max_beta() const;

  ArcCurve translated(double dx) const;
  ArcCurve reversed() const;

  const Spectrum& alpha_periodic_part() const { return alpha_tilde_; }
  const Spectrum& beta_spectrum() const { return beta_sp_; }

 private:
  int n_ = 0;
  double length_ = 0.0;
  int winding_ = 0;
  std::vector<double> alpha_, beta_;
  Spectrum alpha_tilde_;  // alpha(s) - winding * 2*pi * s / L as a function of 2*pi*s/L
  Spectrum beta_sp_;
};

// Shortest distance on the torus (period 2*pi), reduced to [-pi, pi].
double torus_dx(double x1, double x2);

// Sharp chord-arc constant: min over point pairs of
// |gamma(s1) - gamma(s2)| / dist_{R/L}(s1, s2), chords measured with the
// torus metric in x, clamped to (0, 1]. All-node-pair scan followed by
// golden-section refinement around the discrete minimizer. Throws
// self_intersection_error when the constant collapses to machine zero.
double chord_arc_constant(const ArcCurve& curve);

// epsilon = min(c0 / (N0 (||kappa||_inf + 1)), d0); d0 = +inf means no solid
// boundary nearby. d0 <= 0 is rejected.
double epsilon_of_state(const ArcCurve& curve, double d0, double n0);

// Distance from the curve to the solid boundaries of the strip (-H+, H-),
// +inf when both depths are infinite.
double strip_distance(const ArcCurve& curve, double depth_plus, double depth_minus);

// Normal geodesic tube Phi(s, r) = gamma(s) + r n(s), |r| <= epsilon.
struct TubularMap {
  ArcCurve base;
  double epsilon;
  double n0;
};

struct TubeCollision {
  std::array<double, 2> a;  // (s, r)
  std::array<double, 2> b;
  double image_distance;
  double s_distance;  // arc distance, to compare with the 4/(N0 |kappa|) bound
};

struct TubularReport {
  double j_min = 1.0;            // min over the grid of 1 + r kappa(s)
  bool jacobian_positive = true;
  bool injective = true;
  double local_bound = 0.0;      // 4 / (N0 ||kappa||_inf); collisions must have
                                 // s_distance below this
  std::vector<TubeCollision> collisions;
};

// Grid check of the tube map: (a) min Jacobian, (b) brute-force pairwise
// separation, (c) |s - s'| of any colliding pair. Throws
// tube_collision_error on a vanishing Jacobian or a genuine collision.
TubularReport tubular_map_check(const TubularMap& map, int ns = 96, int nr = 9);

// L * epsilon against 2*pi*(H+ + H-). Negative slack is reported, never thrown.
struct StripBoundReport {
  double product;  // L * epsilon
  double bound;    // 2*pi*(H+ + H-)
  double slack;    // bound - product
  bool pass;
  double epsilon;
};
StripBoundReport length_curvature_bound(const ArcCurve& curve, double depth_plus,
                                        double depth_minus, double n0);

// CSV loading: two columns (x, eta) for graphs on a uniform x grid, three
// columns (s, alpha, beta) for curves on a uniform s grid. '#' comments and
// a non-numeric header line are skipped.
GraphInterface load_graph_csv(const std::string& path);
ArcCurve load_curve_csv(const std::string& path);

}  // namespace tpww
