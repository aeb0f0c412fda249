#pragma once

#include <cstddef>
#include <vector>

#include "circ/dft_core.hpp"

namespace circ {

// The diagonalization pipeline: the action of C_x on y is DFT(y), an
// entrywise multiply by hat-x, then an inverse DFT. The radix-2 plan is a
// pure accelerator; every plan is validated against the naive reference at
// creation time and non power-of-two sizes fall back to the naive method
// (zero-padding would change the circular semantics and is not offered).

enum class PlanMethod { naive, radix2 };
enum class TransformDirection { forward, inverse };

bool is_power_of_two(std::size_t n);

/// Reusable, immutable transform plan for one fixed length.
class ConvolutionPlan {
 public:
  std::size_t size() const { return n_; }
  PlanMethod method() const { return method_; }
  /// exp(-i 2 pi k / n) for k < n/2; empty unless method is radix2.
  const std::vector<Complex>& twiddles() const { return twiddles_; }

 private:
  friend ConvolutionPlan make_plan(std::size_t n, PlanMethod method);
  ConvolutionPlan(std::size_t n, PlanMethod method, std::vector<Complex> twiddles)
      : n_(n), method_(method), twiddles_(std::move(twiddles)) {}

  std::size_t n_;
  PlanMethod method_;
  std::vector<Complex> twiddles_;
};

/// radix2 requires n to be a power of two (ConfigError otherwise). Creation
/// cross-checks the plan against dft_core on an impulse and a random probe
/// and throws NumericalContractError on disagreement.
ConvolutionPlan make_plan(std::size_t n, PlanMethod method);

/// radix2 when n is a power of two, the naive fallback otherwise.
ConvolutionPlan make_default_plan(std::size_t n);

/// forward matches dft, inverse matches idft; the radix-2 inverse runs the
/// forward kernel conjugated with 1/n scaling.
CVector transform(const ConvolutionPlan& plan, const CVector& x,
                  TransformDirection direction);

/// x * y computed as inverse(forward(x) entrywise* forward(y)).
CVector convolve_spectral(const ConvolutionPlan& plan, const CVector& x,
                          const CVector& y);

/// Residuals of the two matrix forms of the diagonalization:
/// C_x W = W diag(hat-x) row by row, and C_x = (1/n) W diag(hat-x) W*.
struct DiagonalizationReport {
  std::size_t n = 0;
  double residual_eigen = 0.0;   // max_m || C_x w^(m) - hat-x_m w^(m) ||_inf
  double residual_factor = 0.0;  // || C_x - (1/n) W diag(hat-x) W* ||_max

  bool pass(double tol) const {
    return residual_eigen <= tol && residual_factor <= tol;
  }
};

DiagonalizationReport diagonalization_residual(const CVector& x);

}  // namespace circ
