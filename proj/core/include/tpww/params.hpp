#pragma once

#include <cmath>

#include "tpww/errors.hpp"
#include "tpww/geometry.hpp"

namespace tpww {

// Every scalar constant of the two-layer system. The + layer is the lower
// fluid, the - layer the upper one; depths may be infinite.
struct PhysicalParams {
  double rho_plus = 1.0;
  double rho_minus = 0.0;
  double gravity = 1.0;
  double sigma = 0.0;
  double depth_plus = infinite_depth;
  double depth_minus = infinite_depth;

  double rho_sum() const { return rho_plus + rho_minus; }
  double rho_bar_plus() const { return rho_plus / rho_sum(); }
  double rho_bar_minus() const { return rho_minus / rho_sum(); }
  double atwood() const { return (rho_plus - rho_minus) / rho_sum(); }
  double sigma_norm() const { return sigma / rho_sum(); }

  // Heavier fluid on top (or equal densities): the unstable configuration.
  bool rt_regime() const { return rho_plus <= rho_minus; }

  double min_depth() const { return std::min(depth_plus, depth_minus); }

  void validate() const {
    if (rho_plus < 0.0 || rho_minus < 0.0) throw domain_error("densities must be >= 0");
    if (!(rho_sum() > 0.0)) throw domain_error("rho_plus + rho_minus > 0 is required");
    if (gravity < 0.0) throw domain_error("gravity must be >= 0");
    if (sigma < 0.0) throw domain_error("surface tension must be >= 0");
    if (!(depth_plus > 0.0) || !(depth_minus > 0.0)) {
      throw domain_error("depths must be positive (or infinite)");
    }
  }
};

}  // namespace tpww
