#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tpww/harmonic.hpp"
#include "tpww/params.hpp"

namespace tpww {

// One time slice of every tracked functional. CSV/JSON field names are part
// of the output contract and must not change.
struct DiagnosticsRecord {
  double t = 0.0;
  double M = 0.0;
  double E_k = 0.0;
  double E_p = 0.0;
  double E = 0.0;
  double Etilde_k = 0.0;
  double R_b_plus = 0.0;
  double R_b_minus = 0.0;
  double R_s = 0.0;
  double I = 0.0;
  double F = 0.0;
  double slope_inf = 0.0;
  double curv_inf = 0.0;

  static std::string csv_header();
  std::string csv_row() const;
  std::string json_object() const;

  // R_b+- >= 0, R_s >= 0, E = E_k + E_p, Etilde_k >= E_k / 2.
  void check_invariants(double tol = 1e-9) const;
};

// Mass: spectral mean * 2*pi for graphs, int beta alpha_s ds for curves.
double mass(const GraphInterface& interface);
double mass(const ArcCurve& curve);

// Surface form of M against the volume form on both truncated layers.
struct MassCrosscheck {
  double surface_form = 0.0;
  double volume_form_lower = 0.0;
  double volume_form_upper = 0.0;
  double residual = 0.0;  // max deviation between the forms
};
MassCrosscheck mass_crosscheck(const GraphInterface& interface, const PhysicalParams& p);
// Curve version integrates the enclosed area by scanline quadrature; its
// accuracy is limited near vertical tangents and is reported, not asserted.
MassCrosscheck mass_crosscheck(const ArcCurve& curve, const PhysicalParams& p,
                               int n_columns = 2048);

// psi = rho_bar+ phi+|_S - rho_bar- phi-|_S.
Spectrum psi_trace(const Spectrum& phi_plus, const Spectrum& phi_minus,
                   const PhysicalParams& p);

// All static functionals of a graph state from the interface and the two
// interface traces; t is left 0. The infinite-depth kinetic integrals add
// their closed-form modal tail beyond the truncation line.
DiagnosticsRecord energies(const GraphInterface& interface, const Spectrum& phi_plus,
                           const Spectrum& phi_minus, const PhysicalParams& p,
                           int order = 3);

// Potential-energy parts shared by the curve statics.
double potential_energy_gravity(const GraphInterface& interface, const PhysicalParams& p);
double potential_energy_gravity(const ArcCurve& curve, const PhysicalParams& p);
double potential_energy_surface(const GraphInterface& interface, const PhysicalParams& p);
double potential_energy_surface(const ArcCurve& curve, const PhysicalParams& p);
double interface_area(const GraphInterface& interface);  // int sqrt(1+eta'^2) dx

// Virial functional I = int_S n.(0, y psi) dS.
double virial_functional(const GraphInterface& interface, const Spectrum& psi);
double virial_functional(const ArcCurve& curve, std::span<const double> psi_nodes);

// int_S n.(0,y) kappa dS  ==  Area(S) - int_S |n.(0,1)|^2 dS, by direct
// quadrature on both sides.
struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};
IdentityCheck curvature_identity_check(const GraphInterface& interface);
IdentityCheck curvature_identity_check(const ArcCurve& curve);

// The chain int (1+|n.(0,1)|^2) dS >= 2 int |n.(0,1)| dS >= 2 (2*pi)^d and
// the resulting R_s >= 0.
struct RsChain {
  double first = 0.0;
  double second = 0.0;
  double third = 0.0;
  double R_s = 0.0;
  bool chain_ok = false;
};
RsChain rs_nonnegativity_check(const GraphInterface& interface, const PhysicalParams& p);
RsChain rs_nonnegativity_check(const ArcCurve& curve, const PhysicalParams& p);

// Graph trace-estimate ratio ||phi|_S - m||_L2(dx) /
// (sqrt(1+||eta'||_inf) ||grad phi||_L2(Omega)); finite by the trace
// estimate, the constant is empirical.
double trace_estimate_ratio(const GraphInterface& interface, const LayerField& field);
// Curve version: ||f||_L2(ds) / (L eps^{-1/2} ||grad F||_L2(Omega)) with f
// de-meaned along the curve; the bulk integral uses scanline quadrature.
double trace_estimate_ratio(const ArcCurve& curve, const LayerField& field, double epsilon,
                            int n_columns = 512);

}  // namespace tpww
