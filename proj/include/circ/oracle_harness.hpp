#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "circ/circulant1d.hpp"
#include "circ/dense_matrix.hpp"
#include "circ/nd_circulant.hpp"

namespace circ::oracle {

// Brute-force reference routes and executable statements of the lemmas,
// theorems and exercises. Nothing here shares computation code with the
// modules it checks: the convolution sums, dense products and circulant
// builders below are written out independently on purpose.

struct PropertyReport {
  std::string property;
  std::string instance;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;  // always residual <= tolerance
};

PropertyReport make_report(std::string property, std::string instance,
                           double residual, double tolerance);
bool all_pass(const std::vector<PropertyReport>& reports);

using Rng = std::mt19937_64;

/// Real and imaginary parts uniform in [-1, 1].
Complex random_complex(Rng& rng);
CVector random_cvector(std::size_t n, Rng& rng);
NdArray random_ndarray(const TorusDims& dims, Rng& rng);

/// The definitional sum z_k = sum_l x_l y_{k-l}, fixed ascending index order.
CVector oracle_conv(const CVector& x, const CVector& y);
NdArray oracle_conv_nd(const NdArray& x, const NdArray& y);

/// Independent dense helpers for cross-checking matrix identities.
DenseMatrix oracle_dense_circulant(const CVector& x);
DenseMatrix oracle_dense_mul(const DenseMatrix& a, const DenseMatrix& b);

/// Theorem on the isomorphic algebras: C_{x*y} = C_x C_y, hat(x*y) = hat-x o hat-y,
/// and the z-transform at the roots of unity reproducing the eigenvalues.
/// Three reports; residuals are relative with a floor of 1 on the scale.
std::vector<PropertyReport> verify_theorem1(const CVector& x, const CVector& y,
                                            double tol);

/// Exercise checks: commuting with S characterizes circulants (acceptance and
/// perturbation rejection), Bezout certificates for every coprime (p, n) with
/// n <= n_max plus a non-coprime witness, and convolution algebra laws
/// (exhaustive small-n integer grid, randomized larger n).
std::vector<PropertyReport> verify_exercises(std::size_t n_max, std::uint64_t seed);

/// Named property suites: lemma1, lemma2, theorem1, theorem2, exercises, all.
/// "all" concatenates everything and sorts by property then instance.
std::vector<PropertyReport> run_suite(const std::string& suite, std::size_t n_max,
                                      std::uint64_t seed);
bool is_known_suite(const std::string& suite);

}  // namespace circ::oracle
