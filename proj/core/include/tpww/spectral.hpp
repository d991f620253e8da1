#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace tpww {

inline constexpr double two_pi = 6.283185307179586476925286766559;

// Fourier coefficients of a real 2*pi-periodic function, stored two-sided in
// FFT index order: entry j holds the coefficient of exp(i*k*x) with
// k = j for j < n/2 and k = j - n for j >= n/2. The represented function is
//   f(x) = sum_k c_k exp(i k x),
// so coeff(0) is the mean. Reality (c_{-k} = conj c_k) is enforced after
// every transform; the Nyquist mode is kept at zero, band-limiting the
// representation to |k| <= n/2 - 1.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(int n);

  static Spectrum from_samples(std::span<const double> samples);
  static Spectrum from_function(int n, const std::function<double(double)>& f);
  // Single mode a*cos(k x + phase).
  static Spectrum harmonic(int n, int k, double amplitude, double phase = 0.0);

  int size() const { return static_cast<int>(c_.size()); }
  bool empty() const { return c_.empty(); }

  // Signed-wavenumber access; |k| <= n/2.
  std::complex<double> coeff(int k) const;
  void set_coeff(int k, std::complex<double> v);

  std::span<const std::complex<double>> raw() const { return c_; }
  std::span<std::complex<double>> raw() { return c_; }

  std::vector<double> samples() const;
  std::vector<double> samples(int m) const;  // on a finer/coarser grid

  // Direct evaluation at arbitrary x (O(n) trig sum).
  double eval(double x) const;
  double eval_derivative(double x, int order = 1) const;

  double mean() const { return c_.empty() ? 0.0 : c_[0].real(); }
  double max_abs() const;       // sup over a 4x-refined sample grid
  double l2_norm() const;       // sqrt(int_0^{2pi} f^2 dx)
  double sup_derivative() const;

  Spectrum derivative(int order = 1) const;
  // Multiply coefficient k by m(k); m must be even in k for a real result.
  Spectrum apply_symbol(const std::function<double(int)>& m) const;

  Spectrum resampled(int n_new) const;  // pad or truncate in k

  // Fraction of squared-coefficient mass carried by |k| > n/3.
  double tail_ratio() const;

  void project_zero_mean() { if (!c_.empty()) c_[0] = 0.0; }
  void enforce_reality();

  Spectrum& operator+=(const Spectrum& o);
  Spectrum& operator-=(const Spectrum& o);
  Spectrum& operator*=(double a);
  friend Spectrum operator+(Spectrum a, const Spectrum& b) { return a += b; }
  friend Spectrum operator-(Spectrum a, const Spectrum& b) { return a -= b; }
  friend Spectrum operator*(double a, Spectrum s) { return s *= a; }

 private:
  std::vector<std::complex<double>> c_;
};

// Pointwise product computed on a 3/2 zero-padded grid (alias-free for
// quadratic nonlinearities of band-limited inputs).
Spectrum dealiased_product(const Spectrum& a, const Spectrum& b);

// int_0^{2pi} f g dx for real f, g.
double inner_l2(const Spectrum& f, const Spectrum& g);

// Signed wavenumber of FFT index j at transform size n.
int fft_wavenumber(int j, int n);

// Gauss-Legendre nodes/weights on [-1, 1]; cached per order.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

namespace fft {
// Unnormalized forward/inverse complex DFT (inverse carries the 1/n).
void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out);
}  // namespace fft

}  // namespace tpww
