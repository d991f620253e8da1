#include "tpww/harmonic.hpp"

#include <algorithm>
#include <cmath>

#include "tpww/errors.hpp"

namespace tpww {

namespace {

// cosh(|k|(y+H)) / cosh(|k|H) and sinh(|k|(y+H)) / cosh(|k|H) in the
// overflow-safe exponential form (requires y + H >= 0). Infinite depth
// degenerates to exp(|k| y) for both.
double basis_c(int k, double y, double H) {
  const double ak = std::abs(static_cast<double>(k));
  if (k == 0) return 1.0;
  if (!std::isfinite(H)) return std::exp(ak * y);
  return std::exp(ak * y) * (1.0 + std::exp(-2.0 * ak * (y + H))) /
         (1.0 + std::exp(-2.0 * ak * H));
}

double basis_s(int k, double y, double H) {
  const double ak = std::abs(static_cast<double>(k));
  if (k == 0) return 0.0;
  if (!std::isfinite(H)) return std::exp(ak * y);
  return std::exp(ak * y) * (1.0 - std::exp(-2.0 * ak * (y + H))) /
         (1.0 + std::exp(-2.0 * ak * H));
}

struct ActiveMode {
  int k;
  std::complex<double> a;
};

std::vector<ActiveMode> active_modes(const Spectrum& modal) {
  const int n = modal.size();
  double amax = 0.0;
  for (int j = 0; j < n; ++j) amax = std::max(amax, std::abs(modal.raw()[j]));
  std::vector<ActiveMode> act;
  if (amax == 0.0) return act;
  for (int j = 0; j < n; ++j) {
    const int k = fft_wavenumber(j, n);
    const auto a = modal.raw()[j];
    if (std::abs(a) > 1e-16 * amax) act.push_back({k, a});
  }
  return act;
}

}  // namespace

double LayerSpec::truncation(double interface_max_abs) const {
  if (finite()) return depth;
  if (h_trunc > 0.0) return h_trunc;
  return interface_max_abs + std::max(12.0, 6.0);
}

void LayerSpec::validate(double interface_max_abs) const {
  if (!(depth > 0.0)) throw domain_error("layer depth must be positive");
  if (finite() && interface_max_abs >= depth) {
    throw domain_error("interface reaches the solid boundary of the layer");
  }
  if (!finite() && h_trunc > 0.0 && h_trunc <= interface_max_abs) {
    throw domain_error("truncation line must clear the interface");
  }
}

LayerField::LayerField(LayerSpec layer, Spectrum modal)
    : layer_(layer), modal_(std::move(modal)) {
  modal_.enforce_reality();
}

void LayerField::check_inside(double y) const {
  const double yy = layer_.side == Side::lower ? y : -y;
  if (layer_.finite() && yy < -layer_.depth - 1e-12) {
    throw domain_error("evaluation point below the solid boundary of the layer");
  }
}

double LayerField::value(double x, double y) const {
  check_inside(y);
  const double yy = layer_.side == Side::lower ? y : -y;
  double acc = 0.0;
  for (const auto& [k, a] : active_modes(modal_)) {
    if (k < 0) continue;  // reality: double the positive half
    const double c = basis_c(k, yy, layer_.depth);
    const std::complex<double> term = a * std::polar(1.0, k * x) * c;
    if (!std::isfinite(term.real())) throw domain_error("field evaluation overflow");
    acc += (k == 0 ? 1.0 : 2.0) * term.real();
  }
  return acc;
}

Vec2 LayerField::gradient(double x, double y) const {
  check_inside(y);
  const double yy = layer_.side == Side::lower ? y : -y;
  const double ysign = layer_.side == Side::lower ? 1.0 : -1.0;
  double gx = 0.0, gy = 0.0;
  for (const auto& [k, a] : active_modes(modal_)) {
    if (k <= 0) continue;
    const double c = basis_c(k, yy, layer_.depth);
    const double s = basis_s(k, yy, layer_.depth);
    const std::complex<double> e = a * std::polar(1.0, k * x);
    if (!std::isfinite(c) || !std::isfinite(s)) throw domain_error("field evaluation overflow");
    gx += 2.0 * (std::complex<double>(0.0, k) * e).real() * c;
    gy += 2.0 * e.real() * k * s;
  }
  return {gx, ysign * gy};
}

Spectrum LayerField::trace_on_line(double y) const {
  check_inside(y);
  const double yy = layer_.side == Side::lower ? y : -y;
  const int n = modal_.size();
  Spectrum t = modal_;
  for (int k = -n / 2 + 1; k < n / 2; ++k) {
    t.set_coeff(k, modal_.coeff(k) * basis_c(k, yy, layer_.depth));
  }
  t.enforce_reality();
  return t;
}

Spectrum LayerField::trace_on_graph(const GraphInterface& g) const {
  const auto eta = g.elevation().samples();
  std::vector<double> vals(eta.size());
  for (size_t j = 0; j < eta.size(); ++j) {
    vals[j] = value(two_pi * j / eta.size(), eta[j]);
  }
  return Spectrum::from_samples(vals);
}

double LayerField::bottom_gradx_sq() const {
  if (!layer_.finite()) return 0.0;
  double acc = 0.0;
  const int n = modal_.size();
  for (int j = 0; j < n; ++j) {
    const int k = fft_wavenumber(j, n);
    if (k == 0) continue;
    const double c = basis_c(k, -layer_.depth, layer_.depth);
    acc += static_cast<double>(k) * k * std::norm(modal_.raw()[j]) * c * c;
  }
  return two_pi * acc;
}

double LayerField::tail_energy(double h) const {
  if (layer_.finite()) return 0.0;
  double acc = 0.0;
  const int n = modal_.size();
  for (int j = 0; j < n; ++j) {
    const int k = std::abs(fft_wavenumber(j, n));
    if (k == 0) continue;
    acc += k * std::norm(modal_.raw()[j]) * std::exp(-2.0 * k * h);
  }
  return two_pi * acc;
}

LayerField extend(const Spectrum& boundary_trace, const LayerSpec& layer, double line_y) {
  const double yy = layer.side == Side::lower ? line_y : -line_y;
  if (layer.finite() && yy < -layer.depth - 1e-12) {
    throw domain_error("defining line lies below the solid boundary");
  }
  const int n = boundary_trace.size();
  Spectrum modal(n);
  for (int k = -n / 2 + 1; k < n / 2; ++k) {
    modal.set_coeff(k, boundary_trace.coeff(k) / basis_c(k, yy, layer.depth));
  }
  modal.enforce_reality();
  return LayerField(layer, std::move(modal));
}

std::vector<double> decay_profile(const LayerField& field, int k, std::array<int, 2> alpha,
                                  std::span<const double> y_grid) {
  if (field.layer().finite()) {
    throw unsupported_error("decay profile is defined for infinite-depth layers");
  }
  if (alpha[0] + alpha[1] < 1) {
    throw domain_error("decay profile needs a derivative multi-index with |alpha| >= 1");
  }
  const Spectrum& modal = field.modal();
  const int n = modal.size();
  const double ysign = field.layer().side == Side::lower ? 1.0 : -1.0;

  std::vector<double> profile;
  profile.reserve(y_grid.size());
  for (double y : y_grid) {
    const double yy = ysign * y;  // internal coordinate, negative deep in the layer
    double sup = 0.0;
    for (int j = 0; j < n; ++j) {
      const double x = two_pi * j / n;
      double acc = 0.0;
      for (int kk = 1; kk < n / 2; ++kk) {
        const std::complex<double> a = modal.coeff(kk);
        if (std::abs(a) == 0.0) continue;
        std::complex<double> coef = a;
        for (int m = 0; m < alpha[0]; ++m) coef *= std::complex<double>(0.0, kk);
        for (int m = 0; m < alpha[1]; ++m) coef *= ysign * kk;
        acc += 2.0 * (coef * std::polar(1.0, kk * x)).real() * std::exp(kk * yy);
      }
      sup = std::max(sup, std::abs(acc) * std::pow(std::abs(y), k));
    }
    profile.push_back(sup);
  }
  return profile;
}

DnoExpansion::DnoExpansion(const LayerSpec& layer, const GraphInterface& interface,
                           int order)
    : layer_(layer), order_(order), n_(interface.n_modes()) {
  if (order < 0) throw domain_error("expansion order must be >= 0");
  layer_.validate(interface.max_abs());
  if (interface.elevation().tail_ratio() > 1e-8) {
    throw resolution_error("interface spectral tail above threshold for the expansion");
  }
  signed_unit_ = layer.side == Side::lower ? 1.0 : -1.0;
  Spectrum eta_eff = signed_unit_ * interface.elevation();
  eta_pow_.resize(order_ + 1, Spectrum(n_));
  if (order_ >= 1) eta_pow_[1] = eta_eff;
  for (int j = 2; j <= order_; ++j) {
    eta_pow_[j] = (1.0 / j) * dealiased_product(eta_pow_[j - 1], eta_eff);
  }
  eta_x_ = eta_eff.derivative();
}

double DnoExpansion::symbol0(int k) const {
  const double ak = std::abs(static_cast<double>(k));
  if (!layer_.finite()) return ak;
  return ak * std::tanh(ak * layer_.depth);
}

Spectrum DnoExpansion::symbol_term(const Spectrum& u, int j) const {
  if (j == 0) return u;
  const bool odd = (j % 2 == 1);
  const double H = layer_.depth;
  const bool fin = layer_.finite();
  return u.apply_symbol([j, odd, H, fin](int k) {
    const double ak = std::abs(static_cast<double>(k));
    double v = std::pow(ak, j);
    if (odd && fin) v *= std::tanh(ak * H);
    return v;
  });
}

Spectrum DnoExpansion::apply(const Spectrum& trace) const {
  if (trace.size() != n_) throw domain_error("trace resolution mismatch");
  if (trace.tail_ratio() > 1e-4) {
    throw resolution_error("trace spectral tail above threshold for the expansion");
  }
  // Invert the surface series for the modal amplitudes order by order.
  std::vector<Spectrum> a(order_ + 1, Spectrum(n_));
  a[0] = trace;
  for (int m = 1; m <= order_; ++m) {
    Spectrum acc(n_);
    for (int j = 1; j <= m; ++j) {
      acc -= dealiased_product(eta_pow_[j], symbol_term(a[m - j], j));
    }
    a[m] = acc;
  }

  Spectrum g(n_);
  for (int m = 0; m <= order_; ++m) {
    for (int j = 0; j <= m; ++j) {
      Spectrum term = symbol_term(a[m - j], j + 1);
      g += (j == 0) ? term : dealiased_product(eta_pow_[j], term);
    }
  }
  for (int m = 1; m <= order_; ++m) {
    Spectrum acc(n_);
    for (int j = 0; j <= m - 1; ++j) {
      Spectrum term = symbol_term(a[m - 1 - j].derivative(), j);
      acc += (j == 0) ? term : dealiased_product(eta_pow_[j], term);
    }
    g -= dealiased_product(eta_x_, acc);
  }
  g.enforce_reality();
  return g;
}

Spectrum DnoExpansion::invert_trace(const Spectrum& trace) const {
  if (trace.size() != n_) throw domain_error("trace resolution mismatch");
  std::vector<Spectrum> a(order_ + 1, Spectrum(n_));
  a[0] = trace;
  Spectrum total = trace;
  for (int m = 1; m <= order_; ++m) {
    Spectrum acc(n_);
    for (int j = 1; j <= m; ++j) {
      acc -= dealiased_product(eta_pow_[j], symbol_term(a[m - j], j));
    }
    a[m] = acc;
    total += acc;
  }
  return total;
}

Spectrum DnoExpansion::surface_trace(const Spectrum& modal) const {
  if (modal.size() != n_) throw domain_error("modal resolution mismatch");
  Spectrum f = modal;
  for (int j = 1; j <= order_; ++j) {
    f += dealiased_product(eta_pow_[j], symbol_term(modal, j));
  }
  return f;
}

LayerField DnoExpansion::field_from_trace(const Spectrum& trace) const {
  return LayerField(layer_, invert_trace(trace));
}

Spectrum dno_apply(const DnoExpansion& expansion, const GraphInterface& interface,
                   const Spectrum& trace) {
  if (interface.n_modes() != trace.size()) throw domain_error("resolution mismatch");
  return expansion.apply(trace);
}

VolumeResult volume_quadrature(const LayerField& field, const GraphInterface& interface,
                               VolumeIntegrand integrand, int gl_order) {
  const LayerSpec& layer = field.layer();
  layer.validate(interface.max_abs());
  const double h = layer.truncation(interface.max_abs());
  const bool lower = layer.side == Side::lower;

  const auto eta = interface.elevation().samples();
  const int nx = static_cast<int>(eta.size());
  const auto& gl = gauss_legendre(gl_order);
  const auto act = active_modes(field.modal());
  const double H = layer.depth;
  const double ysign = lower ? 1.0 : -1.0;

  double acc = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = two_pi * i / nx;
    const double ya = lower ? -h : eta[i];
    const double yb = lower ? eta[i] : h;
    if (yb <= ya) throw domain_error("empty layer column: interface beyond truncation");

    // Cache the x-phases once per column.
    for (int q = 0; q < gl_order; ++q) {
      const double y = 0.5 * (ya + yb) + 0.5 * (yb - ya) * gl.nodes[q];
      const double w = 0.5 * (yb - ya) * gl.weights[q];
      double f = 0.0;
      switch (integrand) {
        case VolumeIntegrand::unit:
          f = 1.0;
          break;
        case VolumeIntegrand::y_coord:
          f = y;
          break;
        default: {
          const double yy = ysign * y;
          double gx = 0.0, gy = 0.0, val = 0.0;
          for (const auto& [k, a] : act) {
            if (k < 0) continue;
            const std::complex<double> e = a * std::polar(1.0, k * x);
            if (k == 0) {
              val += e.real();
              continue;
            }
            const double c = basis_c(k, yy, H);
            const double s = basis_s(k, yy, H);
            gx += 2.0 * (std::complex<double>(0.0, k) * e).real() * c;
            gy += 2.0 * e.real() * k * s;
            val += 2.0 * e.real() * c;
          }
          gy *= ysign;
          switch (integrand) {
            case VolumeIntegrand::grad_sq:
              f = gx * gx + gy * gy;
              break;
            case VolumeIntegrand::grad_x_sq:
              f = gx * gx;
              break;
            case VolumeIntegrand::grad_y_sq:
              f = gy * gy;
              break;
            case VolumeIntegrand::dy_y_phi:
              f = val + y * gy;
              break;
            default:
              break;
          }
        }
      }
      acc += w * f;
    }
  }

  VolumeResult res;
  res.value = acc * two_pi / nx;
  if (!layer.finite()) {
    switch (integrand) {
      case VolumeIntegrand::grad_sq:
        res.truncation_bound = field.tail_energy(h);
        break;
      case VolumeIntegrand::grad_x_sq:
      case VolumeIntegrand::grad_y_sq:
        res.truncation_bound = 0.5 * field.tail_energy(h);
        break;
      default:
        res.truncation_bound = 0.0;  // these integrands are defined on the
                                     // truncated domain
        break;
    }
  }
  return res;
}

}  // namespace tpww
