#pragma once

#include <cstddef>
#include <vector>

#include "circ/circulant1d.hpp"
#include "circ/dense_matrix.hpp"
#include "circ/torus_index.hpp"

namespace circ {

// The transform here is not postulated: it is constructed from the
// eigenproblem of the circular shift. Any eigenvalue of S* satisfies
// lambda^n = 1, so the eigenvalues are the nth roots of unity rho^m, and
// fixing w_0 = 1 forces the eigenvectors w^(m) = (1, rho^m, ..., rho^{m(n-1)}).
// Expanding C_x w^(m) = lambda_m w^(m) row by row yields
// lambda_m = sum_l x_l rho^{-ml}, i.e. the classical DFT of x.

enum class SpectrumOrdering { standard, alternate };

/// DFT values of a defining vector; doubles as the eigenvalue list of C_x.
/// standard: entry k is sum_l x_l e^{-i 2 pi k l / n} (diagonalizing via S*).
/// alternate: the same multiset as produced by diagonalizing via S, i.e.
/// entry k equals the standard entry (n - k) mod n.
class Spectrum {
 public:
  Spectrum(std::vector<Complex> entries, SpectrumOrdering ordering);

  std::size_t size() const { return entries_.size(); }
  SpectrumOrdering ordering() const { return ordering_; }
  const Complex& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Complex>& entries() const { return entries_; }

  /// Reindex k <-> (n-k) mod n; an involution between the two orderings.
  Spectrum reordered(SpectrumOrdering target) const;

 private:
  std::vector<Complex> entries_;
  SpectrumOrdering ordering_;
};

/// One solution of the shift eigenproblem: w^(m)_l = rho^{ml} with w_0 = 1,
/// satisfying S* w^(m) = rho^m w^(m).
struct Eigenpair {
  std::size_t m = 0;
  RootOfUnity eigenvalue;
  CVector eigenvector;
};

/// W assembled column by column from the eigenvectors w^(m); entry
/// (l, m) = rho^{lm}, so W is symmetric and W* W = W W* = n I, i.e.
/// W^{-1} = (1/n) W*. Multiplying by W* is exactly taking the DFT.
class DftMatrix {
 public:
  explicit DftMatrix(std::size_t n);

  std::size_t size() const { return n_; }
  const DenseMatrix& grid() const { return grid_; }
  Complex entry(std::size_t l, std::size_t m) const { return grid_(l, m); }

  std::vector<Complex> apply(const std::vector<Complex>& v) const;          // W v
  std::vector<Complex> apply_adjoint(const std::vector<Complex>& v) const;  // W* v

 private:
  std::size_t n_;
  DenseMatrix grid_;
};

/// All n eigenpairs of S*, m = 0..n-1, mutually orthogonal.
std::vector<Eigenpair> shift_eigenpairs(std::size_t n);

/// hat-x_k = sum_{l=0}^{n-1} x_l e^{-i 2 pi k l / n}, summed in ascending l.
Spectrum dft(const CVector& x);

/// y_l = (1/n) sum_k hat-y_k e^{i 2 pi k l / n}. An alternate-ordered
/// spectrum is reindexed to standard before inverting.
CVector idft(const Spectrum& s);

/// The symmetric 1/sqrt(n) pair; truly unitary, ||x||_2 = ||dft_unitary(x)||_2.
/// Under this scaling the eigenvalues of C_x are sqrt(n) times the entries.
Spectrum dft_unitary(const CVector& x);
CVector idft_unitary(const Spectrum& s);

/// The eigenvalues of C_x are precisely the entries of hat-x.
Spectrum eigenvalues_of_circulant(const CVector& x);

/// mu_k = sum_l x_l e^{+i 2 pi k l / n} = lambda_{-k}: same multiset as
/// dft(x), arranged in the alternate order.
Spectrum alternate_transform(const CVector& x);

/// hat-x(z) = x_0 + x_1 z^{-1} + ... + x_{n-1} z^{-(n-1)}, Horner in z^{-1}.
/// Evaluated at z = rho^k this recovers dft(x)_k.
Complex z_transform_eval(const CVector& x, Complex z);

}  // namespace circ
