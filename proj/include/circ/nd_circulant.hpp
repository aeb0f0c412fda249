#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "circ/circulant1d.hpp"
#include "circ/torus_index.hpp"

namespace circ {

// Circulant operators on d-dimensional torus arrays. An operator commuting
// with every coordinate shift is exactly circular convolution with its
// impulse response x = M delta, and the per-axis shift eigenvectors
// w^(m)_l = prod_q rho_q^{m_q l_q} diagonalize all of them at once; the
// eigenvalues are the multidimensional DFT of x. Each axis carries its own
// root rho_q = exp(i 2 pi / n_q), so mixed extents like Z_7 x Z_5 work.

/// Complex values on a torus, stored flat in linearize order.
class NdArray {
 public:
  NdArray(TorusDims dims, std::vector<Complex> values);

  static NdArray zeros(const TorusDims& dims);

  const TorusDims& dims() const { return dims_; }
  std::size_t cardinality() const { return values_.size(); }
  const std::vector<Complex>& values() const { return values_; }
  const Complex& flat(std::size_t offset) const { return values_[offset]; }
  const Complex& at(const MultiIndex& idx) const;

 private:
  TorusDims dims_;
  std::vector<Complex> values_;
};

/// delta: 1 at the origin, 0 elsewhere; delta^(l) = S_l delta is 1 at l.
NdArray nd_delta(const TorusDims& dims);
NdArray shifted_delta(const TorusDims& dims, const MultiIndex& l);

/// Coordinate shift along one axis: result at k reads the input at k with
/// component `axis` reduced by `steps` (mod n_q). Axes are numbered 0..d-1.
NdArray coordinate_shift(const NdArray& a, std::size_t axis, long long steps);

/// S_l = composition of coordinate shifts, any axis order: (S_l a)_k = a_{k-l}.
NdArray general_shift(const NdArray& a, const MultiIndex& l);

/// z_k = sum_{l in torus} x_{k-l} y_l with modular index arithmetic.
NdArray nd_convolve(const NdArray& x, const NdArray& y);

/// Circulant operator represented by its impulse response x = M delta,
/// which determines it completely.
class NdCirculantOp {
 public:
  explicit NdCirculantOp(NdArray impulse_response)
      : impulse_response_(std::move(impulse_response)) {}

  const NdArray& impulse_response() const { return impulse_response_; }
  const TorusDims& dims() const { return impulse_response_.dims(); }

 private:
  NdArray impulse_response_;
};

/// M y = x * y where x is the impulse response.
NdArray apply_operator(const NdCirculantOp& op, const NdArray& y);

/// Common eigenvector of all coordinate shifts: entry l = prod_q rho_q^{m_q l_q},
/// with per-axis eigenvalue rho_q^{m_q}.
struct NdEigenvector {
  MultiIndex frequency;
  NdArray array;
};

NdEigenvector nd_eigenvector(const TorusDims& dims, const MultiIndex& m);

/// Multidimensional DFT hat-x_m = sum_l x_l prod_q rho_q^{-m_q l_q}.
/// nd_dft runs the separable axis-wise path; nd_dft_direct is the literal
/// multi-index sum kept as the reference route.
NdArray nd_dft(const NdArray& x);
NdArray nd_dft_direct(const NdArray& x);
/// Axis-wise path with an explicit axis order (a permutation of 0..d-1);
/// the result is order-independent.
NdArray nd_dft_axiswise(const NdArray& x, std::span<const std::size_t> axis_order);
/// Inverse with per-axis 1/n_q scaling.
NdArray nd_idft(const NdArray& xhat);

/// The eigenvalues of the operator are the DFT of its impulse response,
/// indexed by the frequency multi-index m.
NdArray nd_eigenvalues(const NdCirculantOp& op);

/// hat-x(z) = sum_l x_l z_1^{-l_1} ... z_d^{-l_d}; at z_q = rho_q^{m_q} this
/// equals the DFT entry at m.
Complex nd_z_transform_eval(const NdArray& x, std::span<const Complex> z);

struct NdCirculantDetection {
  bool circulant = false;
  std::optional<NdArray> impulse_response;
  double commutation_residual = 0.0;     // worst | map(S_q e) - S_q map(e) |
  double reconstruction_residual = 0.0;  // worst | conv(x, e) - map(e) |
  std::size_t probes_used = 0;
};

/// Black-box detection: a linear map is circulant iff it commutes with every
/// coordinate shift. Probes with the full delta basis while the cardinality
/// is at most 4096, with a fixed randomized probe set above that (the probe
/// budget is reported). Linearity is spot-checked on random combinations and
/// a violation is a DomainError. Detection requires both the commutation
/// test and the impulse-response reconstruction to hold within tol.
NdCirculantDetection is_nd_circulant(
    const std::function<NdArray(const NdArray&)>& map, const TorusDims& dims,
    double tol);

/// d = 1 bridges to the 1-D module.
NdArray from_cvector(const CVector& x);
CVector to_cvector(const NdArray& a);

}  // namespace circ
