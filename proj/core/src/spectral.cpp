#include "tpww/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "tpww/errors.hpp"

namespace tpww {

namespace fft {
namespace {

struct PlanPair {
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;
};

// FFTW plan creation is not thread-safe; execution via the new-array
// interface is. Plans are created once per size with FFTW_UNALIGNED so they
// accept ordinary std::vector storage.
PlanPair& plans_for(int n) {
  static std::mutex mu;
  static std::map<int, PlanPair> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<std::complex<double>> tmp(n), tmp2(n);
  auto* in = reinterpret_cast<fftw_complex*>(tmp.data());
  auto* out = reinterpret_cast<fftw_complex*>(tmp2.data());
  PlanPair p;
  p.fwd = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  p.bwd = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  return cache.emplace(n, p).first->second;
}

}  // namespace

void forward(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  const int n = static_cast<int>(in.size());
  if (static_cast<int>(out.size()) != n) throw std::invalid_argument("fft size mismatch");
  std::vector<std::complex<double>> buf(in.begin(), in.end());
  auto& p = plans_for(n);
  fftw_execute_dft(p.fwd, reinterpret_cast<fftw_complex*>(buf.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

void inverse(std::span<const std::complex<double>> in, std::span<std::complex<double>> out) {
  const int n = static_cast<int>(in.size());
  if (static_cast<int>(out.size()) != n) throw std::invalid_argument("fft size mismatch");
  std::vector<std::complex<double>> buf(in.begin(), in.end());
  auto& p = plans_for(n);
  fftw_execute_dft(p.bwd, reinterpret_cast<fftw_complex*>(buf.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double inv = 1.0 / n;
  for (auto& v : out) v *= inv;
}

}  // namespace fft

int fft_wavenumber(int j, int n) { return j < n / 2 ? j : j - n; }

Spectrum::Spectrum(int n) : c_(n) {
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("Spectrum size must be even and >= 4");
}

Spectrum Spectrum::from_samples(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  Spectrum s(n);
  std::vector<std::complex<double>> in(samples.begin(), samples.end());
  fft::forward(in, s.c_);
  const double inv = 1.0 / n;
  for (auto& v : s.c_) v *= inv;
  s.enforce_reality();
  return s;
}

Spectrum Spectrum::from_function(int n, const std::function<double(double)>& f) {
  std::vector<double> v(n);
  for (int j = 0; j < n; ++j) v[j] = f(two_pi * j / n);
  return from_samples(v);
}

Spectrum Spectrum::harmonic(int n, int k, double amplitude, double phase) {
  Spectrum s(n);
  if (k == 0) {
    s.set_coeff(0, amplitude * std::cos(phase));
    return s;
  }
  const std::complex<double> half(0.5 * amplitude * std::cos(phase),
                                  -0.5 * amplitude * std::sin(phase));
  s.set_coeff(k, half);
  s.set_coeff(-k, std::conj(half));
  return s;
}

std::complex<double> Spectrum::coeff(int k) const {
  const int n = size();
  if (std::abs(k) > n / 2) return 0.0;
  const int j = k >= 0 ? k : k + n;
  return c_[j % n];
}

void Spectrum::set_coeff(int k, std::complex<double> v) {
  const int n = size();
  if (std::abs(k) > n / 2) throw std::out_of_range("wavenumber beyond band limit");
  const int j = k >= 0 ? k : k + n;
  c_[j % n] = v;
}

std::vector<double> Spectrum::samples() const { return samples(size()); }

std::vector<double> Spectrum::samples(int m) const {
  const Spectrum r = resampled(m);
  std::vector<std::complex<double>> out(m);
  std::vector<std::complex<double>> in(r.c_);
  for (auto& v : in) v *= static_cast<double>(m);
  fft::inverse(in, out);
  std::vector<double> res(m);
  for (int j = 0; j < m; ++j) res[j] = out[j].real();
  return res;
}

double Spectrum::eval(double x) const {
  const int n = size();
  const std::complex<double> w = std::polar(1.0, x);
  std::complex<double> wk = w;
  double acc = c_[0].real();
  for (int k = 1; k <= n / 2 - 1; ++k) {
    acc += 2.0 * (c_[k] * wk).real();
    wk *= w;
  }
  return acc;
}

double Spectrum::eval_derivative(double x, int order) const {
  const int n = size();
  const std::complex<double> w = std::polar(1.0, x);
  std::complex<double> wk = w;
  double acc = 0.0;
  for (int k = 1; k <= n / 2 - 1; ++k) {
    std::complex<double> f = c_[k] * wk;
    std::complex<double> ik(0.0, static_cast<double>(k));
    std::complex<double> p = 1.0;
    for (int m = 0; m < order; ++m) p *= ik;
    acc += 2.0 * (p * f).real();
    wk *= w;
  }
  return acc;
}

double Spectrum::max_abs() const {
  auto v = samples(4 * size());
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double Spectrum::l2_norm() const {
  double acc = 0.0;
  const int n = size();
  for (int j = 0; j < n; ++j) acc += std::norm(c_[j]);
  return std::sqrt(two_pi * acc);
}

double Spectrum::sup_derivative() const {
  auto v = derivative().samples(4 * size());
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

Spectrum Spectrum::derivative(int order) const {
  Spectrum r = *this;
  const int n = size();
  for (int j = 0; j < n; ++j) {
    const int k = fft_wavenumber(j, n);
    std::complex<double> ik(0.0, static_cast<double>(k));
    std::complex<double> p = 1.0;
    for (int m = 0; m < order; ++m) p *= ik;
    r.c_[j] *= p;
  }
  r.c_[n / 2] = 0.0;  // Nyquist stays out of band
  r.enforce_reality();
  return r;
}

Spectrum Spectrum::apply_symbol(const std::function<double(int)>& m) const {
  Spectrum r = *this;
  const int n = size();
  for (int j = 0; j < n; ++j) r.c_[j] *= m(fft_wavenumber(j, n));
  r.c_[n / 2] = 0.0;
  r.enforce_reality();
  return r;
}

Spectrum Spectrum::resampled(int n_new) const {
  const int n = size();
  if (n_new == n) return *this;
  Spectrum r(n_new);
  const int kmax = std::min(n / 2 - 1, n_new / 2 - 1);
  for (int k = -kmax; k <= kmax; ++k) r.set_coeff(k, coeff(k));
  return r;
}

double Spectrum::tail_ratio() const {
  const int n = size();
  double total = 0.0, tail = 0.0;
  for (int j = 0; j < n; ++j) {
    const int k = std::abs(fft_wavenumber(j, n));
    if (k == 0) continue;
    const double e = std::norm(c_[j]);
    total += e;
    if (3 * k > n) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

void Spectrum::enforce_reality() {
  const int n = size();
  c_[0] = c_[0].real();
  for (int k = 1; k < n / 2; ++k) {
    const std::complex<double> avg = 0.5 * (c_[k] + std::conj(c_[n - k]));
    c_[k] = avg;
    c_[n - k] = std::conj(avg);
  }
  c_[n / 2] = 0.0;
}

Spectrum& Spectrum::operator+=(const Spectrum& o) {
  if (o.size() != size()) throw std::invalid_argument("Spectrum size mismatch");
  for (int j = 0; j < size(); ++j) c_[j] += o.c_[j];
  return *this;
}

Spectrum& Spectrum::operator-=(const Spectrum& o) {
  if (o.size() != size()) throw std::invalid_argument("Spectrum size mismatch");
  for (int j = 0; j < size(); ++j) c_[j] -= o.c_[j];
  return *this;
}

Spectrum& Spectrum::operator*=(double a) {
  for (auto& v : c_) v *= a;
  return *this;
}

Spectrum dealiased_product(const Spectrum& a, const Spectrum& b) {
  if (a.size() != b.size()) throw std::invalid_argument("Spectrum size mismatch");
  const int n = a.size();
  int m = 3 * n / 2;
  if (m % 2 != 0) ++m;
  auto sa = a.samples(m);
  auto sb = b.samples(m);
  for (int j = 0; j < m; ++j) sa[j] *= sb[j];
  return Spectrum::from_samples(sa).resampled(n);
}

double inner_l2(const Spectrum& f, const Spectrum& g) {
  if (f.size() != g.size()) throw std::invalid_argument("Spectrum size mismatch");
  double acc = 0.0;
  const int n = f.size();
  auto fr = f.raw();
  auto gr = g.raw();
  for (int j = 0; j < n; ++j) acc += (fr[j] * std::conj(gr[j])).real();
  return two_pi * acc;
}

const GaussLegendre& gauss_legendre(int order) {
  static std::mutex mu;
  static std::map<int, GaussLegendre> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;

  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  // Newton on P_n with the usual Chebyshev initial guess.
  for (int i = 0; i < order; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    const double dp = order * (x * p1 - p0) / (x * x - 1.0);
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(order, std::move(gl)).first->second;
}

}  // namespace tpww
