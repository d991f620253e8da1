#pragma once

#include <array>
#include <memory>
#include <vector>

#include "tpww/geometry.hpp"
#include "tpww/spectral.hpp"

namespace tpww {

enum class Side { lower, upper };  // lower fluid Omega+, upper fluid Omega-

// One fluid layer: its solid boundary sits at y = -H (lower) / y = +H
// (upper); infinite depth uses decaying modes instead. h_trunc is the
// quadrature truncation line for infinite depth.
struct LayerSpec {
  Side side = Side::lower;
  double depth = infinite_depth;
  double h_trunc = 0.0;  // used only when depth is infinite

  static LayerSpec lower(double H) { return {Side::lower, H, 0.0}; }
  static LayerSpec upper(double H) { return {Side::upper, H, 0.0}; }

  bool finite() const { return std::isfinite(depth); }

  // Truncation line distance: H when finite; otherwise
  // max|eta| + max(12/k_min, 6), placing the exponential tail of the lowest
  // nonzero mode below 1e-10.
  double truncation(double interface_max_abs) const;
  void validate(double interface_max_abs) const;
};

// Harmonic potential in a flat-bottomed layer, represented by modal
// coefficients a_k relative to the vertical basis
//   lower finite:   cosh(|k|(y+H)) / cosh(|k|H)      (Neumann at y = -H)
//   lower infinite: exp(|k| y)                        (decay as y -> -inf)
// and mirrored in y for the upper layer. Exactly harmonic by construction;
// the zero mode is constant.
class LayerField {
 public:
  LayerField(LayerSpec layer, Spectrum modal);

  const LayerSpec& layer() const { return layer_; }
  const Spectrum& modal() const { return modal_; }
  int n_modes() const { return modal_.size(); }

  double value(double x, double y) const;
  Vec2 gradient(double x, double y) const;

  // Spectral trace of the field on the horizontal line y.
  Spectrum trace_on_line(double y) const;
  // Pointwise trace phi(x_j, eta(x_j)) on the interface grid.
  Spectrum trace_on_graph(const GraphInterface& g) const;

  // int_Gamma |nabla_x phi|^2 dx at the solid boundary (finite depth only).
  double bottom_gradx_sq() const;

  // Dirichlet energy below/above the truncation line, closed form per mode:
  // |int over the discarded tail| for the gradient-type integrands.
  double tail_energy(double h) const;

 private:
  void check_inside(double y) const;
  LayerSpec layer_;
  Spectrum modal_;
};

// Harmonic extension of a trace given on the flat line y = line_y.
LayerField extend(const Spectrum& boundary_trace, const LayerSpec& layer, double line_y);

// sup over x of |y^k d^alpha phi| on the given y grid (infinite-depth layers
// only; |alpha| >= 1). alpha = (ax, ay) is the derivative multi-index.
std::vector<double> decay_profile(const LayerField& field, int k, std::array<int, 2> alpha,
                                  std::span<const double> y_grid);

// Dirichlet-Neumann operator of a graph interface, truncated at a fixed
// order in eta. Realized by the modal-inversion recursion for the strip
// basis above; all products are dealiased. The upper layer is handled by
// reflecting eta, so one recursion serves both sides.
//
// Sign convention: apply() returns sqrt(1+eta'^2) times the derivative of
// phi along the outward normal of its own layer, so at the flat interface
// both sides reduce to the symbol |k| tanh(H |k|) (or |k| at infinite depth)
// and matched normal velocities read G+ f+ + G- f- = 0.
class DnoExpansion {
 public:
  DnoExpansion(const LayerSpec& layer, const GraphInterface& interface, int order);

  int order() const { return order_; }
  const LayerSpec& layer() const { return layer_; }

  // G(eta) f for a trace f given on the interface (as a function of x).
  Spectrum apply(const Spectrum& trace) const;
  // Modal coefficients whose surface trace matches f to the expansion order.
  Spectrum invert_trace(const Spectrum& trace) const;
  // Surface trace of a modal coefficient vector (the forward series).
  Spectrum surface_trace(const Spectrum& modal) const;

  LayerField field_from_trace(const Spectrum& trace) const;

  // Flat-layer symbol |k| tanh(H|k|) (finite) or |k| (infinite).
  double symbol0(int k) const;

 private:
  Spectrum symbol_term(const Spectrum& u, int j) const;  // S_j u
  LayerSpec layer_;
  int order_;
  int n_;
  double signed_unit_;                 // +1 lower, -1 upper (eta reflection)
  std::vector<Spectrum> eta_pow_;      // eta_eff^j / j!
  Spectrum eta_x_;                     // eta_eff'
};

// Operation-style wrapper matching the module surface: Sum_{j<=order} G_j(eta) f.
Spectrum dno_apply(const DnoExpansion& expansion, const GraphInterface& interface,
                   const Spectrum& trace);

enum class VolumeIntegrand { grad_sq, grad_x_sq, grad_y_sq, y_coord, unit, dy_y_phi };

struct VolumeResult {
  double value = 0.0;             // integral over the truncated layer
  double truncation_bound = 0.0;  // bound on the discarded infinite-depth tail
};

// Tensor-product quadrature (periodic trapezoid in x, Gauss-Legendre in y)
// over the curvilinear layer between the graph and the bottom/truncation
// line.
VolumeResult volume_quadrature(const LayerField& field, const GraphInterface& interface,
                               VolumeIntegrand integrand, int gl_order = 64);

}  // namespace tpww
