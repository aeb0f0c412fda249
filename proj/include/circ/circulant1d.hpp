#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "circ/dense_matrix.hpp"
#include "circ/errors.hpp"
#include "circ/types.hpp"

namespace circ {

/// A complex n-vector, i.e. a function on the discrete circle Z_n.
/// Construction requires n >= 1 and finite entries.
class CVector {
 public:
  explicit CVector(std::vector<Complex> entries);

  static CVector zeros(std::size_t n);
  static CVector constant(std::size_t n, Complex c);
  /// Shifted impulse delta^(p): 1 at index (p mod n), 0 elsewhere.
  static CVector delta(std::size_t n, long long p = 0);

  std::size_t size() const { return entries_.size(); }
  const Complex& operator[](std::size_t k) const { return entries_[k]; }
  const std::vector<Complex>& entries() const { return entries_; }

 private:
  std::vector<Complex> entries_;
};

/// result_k = x_{(k-p) mod n}. p = 1 is the circular right shift S,
/// p = -1 the left shift S*; shift(x, p + n) = shift(x, p).
CVector shift(const CVector& x, long long p);

/// z_k = sum_l x_l y_{(k-l) mod n}, the direct O(n^2) double loop. This is
/// the reference semantics; the fast path lives in spectral_engine.
CVector circular_convolve(const CVector& x, const CVector& y);

/// Circulant matrix stored only by its defining first column x; every other
/// entry is implied by entry(i, j) = x_{(i-j) mod n}.
class CirculantMatrix {
 public:
  explicit CirculantMatrix(CVector first_column);

  std::size_t size() const { return first_column_.size(); }
  const CVector& first_column() const { return first_column_; }

  /// x_{(i-j) mod n}; i or j out of range is a DomainError.
  Complex entry(std::size_t i, std::size_t j) const;

  /// Explicit O(n^2) materialization. Each column is the circular down-shift
  /// of the previous one, each row the circular right-shift of the previous.
  DenseMatrix to_dense() const;

 private:
  CVector first_column_;
};

/// z_i = sum_j x_{(i-j) mod n} y_j, evaluated from the first column alone.
CVector matvec(const CirculantMatrix& c, const CVector& y);

/// C_x C_y = C_{x*y}: the product is circulant with defining vector x*y.
CirculantMatrix circulant_matmul(const CirculantMatrix& cx, const CirculantMatrix& cy);

struct CirculantDetection {
  bool circulant = false;
  double commutator_norm = 0.0;  // max-entry norm of S M - M S
  std::optional<CVector> first_column;
};

/// A square matrix is circulant iff it commutes with the circular shift S.
/// Detection compares S M with M S entrywise; on success the defining vector
/// is recovered from column 0.
CirculantDetection is_circulant(const DenseMatrix& m, double tol);

/// S^p as a value; power > 0 right-shifts, power < 0 left-shifts. As a
/// circulant matrix, S^p = C_{delta^(p)}.
struct ShiftSpec {
  std::size_t n = 1;
  long long power = 0;

  CirculantMatrix to_circulant() const;
  DenseMatrix to_dense() const;
  CVector apply(const CVector& x) const;
};

/// Integers with a p + b n = 1, witnessing gcd(p, n) = 1 and hence
/// S^{a p} = S. a is normalized to [0, n).
struct BezoutCertificate {
  long long p = 0;
  long long n = 1;
  long long a = 0;
  long long b = 0;
};

struct BezoutOutcome {
  std::optional<BezoutCertificate> certificate;
  long long gcd = 0;  // always gcd(p, n); certificate present iff gcd == 1
};

/// Extended-Euclid certificate that shifting by p generates the basic shift.
/// The returned identity is verified exactly and S^{a p} = S is checked on
/// probe vectors before returning.
BezoutOutcome bezout_shift_certificate(long long p, long long n);

}  // namespace circ
