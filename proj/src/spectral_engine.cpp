#include "circ/spectral_engine.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

namespace circ {

namespace {

// Iterative decimation-in-time with an explicit bit-reversal pass; tw[k] must
// hold exp(-i 2 pi k / n) for k < n/2.
void fft_radix2_inplace(std::vector<Complex>& a, const std::vector<Complex>& tw) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t stride = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const Complex v = a[base + j + half] * tw[j * stride];
        const Complex u = a[base + j];
        a[base + j] = u + v;
        a[base + j + half] = u - v;
      }
    }
  }
}

CVector probe_vector(std::size_t n) {
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ n);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<Complex> v(n);
  for (Complex& z : v) z = Complex{dist(rng), dist(rng)};
  return CVector(std::move(v));
}

double rel_max_diff(const CVector& a, const std::vector<Complex>& b) {
  double diff = 0.0, scale = 1.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    diff = std::max(diff, std::abs(a[k] - b[k]));
    scale = std::max(scale, std::abs(b[k]));
  }
  return diff / scale;
}

}  // namespace

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

ConvolutionPlan make_plan(std::size_t n, PlanMethod method) {
  if (n == 0) throw DomainError("make_plan: n must be >= 1");
  if (method == PlanMethod::radix2 && !is_power_of_two(n))
    throw ConfigError("make_plan: radix2 requires a power-of-two length, got " +
                      std::to_string(n));

  std::vector<Complex> twiddles;
  if (method == PlanMethod::radix2) {
    twiddles.resize(n / 2);
    for (std::size_t k = 0; k < n / 2; ++k)
      twiddles[k] = std::polar(1.0, -kTwoPi * double(k) / double(n));
  }
  ConvolutionPlan plan(n, method, std::move(twiddles));

  // Contract check against the naive reference before the plan escapes.
  for (const CVector& probe : {CVector::delta(n), probe_vector(n)}) {
    const CVector fast = transform(plan, probe, TransformDirection::forward);
    if (rel_max_diff(fast, dft(probe).entries()) > 1e-9 * double(n))
      throw NumericalContractError(
          "make_plan: plan disagrees with the naive transform at n = " +
          std::to_string(n));
  }
  return plan;
}

ConvolutionPlan make_default_plan(std::size_t n) {
  return make_plan(n, is_power_of_two(n) ? PlanMethod::radix2 : PlanMethod::naive);
}

CVector transform(const ConvolutionPlan& plan, const CVector& x,
                  TransformDirection direction) {
  if (x.size() != plan.size())
    throw DimensionError("transform: length does not match plan");
  const std::size_t n = plan.size();

  if (plan.method() == PlanMethod::naive) {
    if (direction == TransformDirection::forward)
      return CVector(dft(x).entries());
    return idft(Spectrum(x.entries(), SpectrumOrdering::standard));
  }

  std::vector<Complex> a = x.entries();
  if (direction == TransformDirection::forward) {
    fft_radix2_inplace(a, plan.twiddles());
  } else {
    for (Complex& z : a) z = std::conj(z);
    fft_radix2_inplace(a, plan.twiddles());
    for (Complex& z : a) z = std::conj(z) / double(n);
  }
  return CVector(std::move(a));
}

CVector convolve_spectral(const ConvolutionPlan& plan, const CVector& x,
                          const CVector& y) {
  if (x.size() != plan.size() || y.size() != plan.size())
    throw DimensionError("convolve_spectral: lengths do not match plan");
  const CVector xhat = transform(plan, x, TransformDirection::forward);
  const CVector yhat = transform(plan, y, TransformDirection::forward);
  std::vector<Complex> prod(plan.size());
  for (std::size_t k = 0; k < plan.size(); ++k) prod[k] = xhat[k] * yhat[k];
  return transform(plan, CVector(std::move(prod)), TransformDirection::inverse);
}

DiagonalizationReport diagonalization_residual(const CVector& x) {
  const std::size_t n = x.size();
  const CirculantMatrix cx{x};
  const DenseMatrix dense = cx.to_dense();
  const Spectrum hat = dft(x);

  DiagonalizationReport report;
  report.n = n;

  for (const Eigenpair& pair : shift_eigenpairs(n)) {
    const std::vector<Complex> cw = multiply(dense, pair.eigenvector.entries());
    double r = 0.0;
    for (std::size_t k = 0; k < n; ++k)
      r = std::max(r, std::abs(cw[k] - hat[pair.m] * pair.eigenvector[k]));
    report.residual_eigen = std::max(report.residual_eigen, r);
  }

  // (1/n) W diag(hat-x) W*: scale the columns of W, multiply by W*.
  const DftMatrix w(n);
  DenseMatrix scaled(n, n);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) scaled(l, m) = w.entry(l, m) * hat[m];
  DenseMatrix factor(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex s = scaled(i, k);
      for (std::size_t j = 0; j < n; ++j)
        factor(i, j) += s * std::conj(w.entry(j, k));
    }
  }
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r = std::max(r, std::abs(dense(i, j) - factor(i, j) / double(n)));
  report.residual_factor = r;
  return report;
}

}  // namespace circ
