#include "circ/circulant1d.hpp"

#include <numeric>
#include <string>
#include <utility>

namespace circ {

namespace {

std::size_t reduce_mod(long long raw, std::size_t n) {
  long long r = raw % static_cast<long long>(n);
  if (r < 0) r += static_cast<long long>(n);
  return static_cast<std::size_t>(r);
}

}  // namespace

CVector::CVector(std::vector<Complex> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw DomainError("CVector: length must be >= 1");
  for (const Complex& z : entries_)
    if (!is_finite(z)) throw DomainError("CVector: entries must be finite");
}

CVector CVector::zeros(std::size_t n) {
  return CVector(std::vector<Complex>(n, Complex{0.0, 0.0}));
}

CVector CVector::constant(std::size_t n, Complex c) {
  return CVector(std::vector<Complex>(n, c));
}

CVector CVector::delta(std::size_t n, long long p) {
  if (n == 0) throw DomainError("CVector::delta: length must be >= 1");
  std::vector<Complex> e(n, Complex{0.0, 0.0});
  e[reduce_mod(p, n)] = Complex{1.0, 0.0};
  return CVector(std::move(e));
}

CVector shift(const CVector& x, long long p) {
  const std::size_t n = x.size();
  const std::size_t s = reduce_mod(p, n);
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = x[(k + n - s) % n];
  return CVector(std::move(out));
}

CVector circular_convolve(const CVector& x, const CVector& y) {
  if (x.size() != y.size())
    throw DimensionError("circular_convolve: lengths differ");
  const std::size_t n = x.size();
  std::vector<Complex> z(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) acc += x[l] * y[(k + n - l) % n];
    z[k] = acc;
  }
  return CVector(std::move(z));
}

CirculantMatrix::CirculantMatrix(CVector first_column)
    : first_column_(std::move(first_column)) {}

Complex CirculantMatrix::entry(std::size_t i, std::size_t j) const {
  const std::size_t n = size();
  if (i >= n || j >= n)
    throw DomainError("CirculantMatrix::entry: index out of range");
  return first_column_[(i + n - j) % n];
}

DenseMatrix CirculantMatrix::to_dense() const {
  const std::size_t n = size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = first_column_[(i + n - j) % n];
  return m;
}

CVector matvec(const CirculantMatrix& c, const CVector& y) {
  if (c.size() != y.size()) throw DimensionError("matvec: size mismatch");
  const std::size_t n = c.size();
  const CVector& x = c.first_column();
  std::vector<Complex> z(n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) acc += x[(i + n - j) % n] * y[j];
    z[i] = acc;
  }
  return CVector(std::move(z));
}

CirculantMatrix circulant_matmul(const CirculantMatrix& cx, const CirculantMatrix& cy) {
  if (cx.size() != cy.size())
    throw DimensionError("circulant_matmul: size mismatch");
  return CirculantMatrix(circular_convolve(cx.first_column(), cy.first_column()));
}

CirculantDetection is_circulant(const DenseMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw DimensionError("is_circulant: matrix not square");
  if (!(tol >= 0.0)) throw DomainError("is_circulant: tol must be nonnegative");
  const std::size_t n = m.rows();

  // S M - M S entrywise: (S M)_{ij} = M_{(i-1) mod n, j}, (M S)_{ij} = M_{i, (j+1) mod n}.
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex d = m((i + n - 1) % n, j) - m(i, (j + 1) % n);
      norm = std::max(norm, std::abs(d));
    }
  }

  CirculantDetection out;
  out.commutator_norm = norm;
  out.circulant = norm <= tol;
  if (out.circulant) {
    std::vector<Complex> col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = m(i, 0);
    out.first_column = CVector(std::move(col));
  }
  return out;
}

CirculantMatrix ShiftSpec::to_circulant() const {
  return CirculantMatrix(CVector::delta(n, power));
}

DenseMatrix ShiftSpec::to_dense() const { return to_circulant().to_dense(); }

CVector ShiftSpec::apply(const CVector& x) const {
  if (x.size() != n) throw DimensionError("ShiftSpec::apply: size mismatch");
  return shift(x, power);
}

BezoutOutcome bezout_shift_certificate(long long p, long long n) {
  if (n <= 0) throw DomainError("bezout_shift_certificate: n must be >= 1");

  const long long g = std::gcd(p, n);
  if (g != 1) return BezoutOutcome{std::nullopt, g == 0 ? n : g};

  // Modular inverse of p mod n via extended Euclid on (p mod n, n).
  long long r0 = n, r1 = static_cast<long long>(reduce_mod(p, n));
  long long t0 = 0, t1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  long long a = n == 1 ? 0 : static_cast<long long>(reduce_mod(t0, n));

  // b follows from the identity itself; check it in wide arithmetic.
  const __int128 rem = static_cast<__int128>(1) - static_cast<__int128>(a) * p;
  const __int128 b_wide = rem / n;
  if (b_wide * n != rem)
    throw NumericalContractError("bezout_shift_certificate: a p != 1 (mod n)");
  const long long b = static_cast<long long>(b_wide);

  // S^{a p} must equal S; probe with an impulse and a ramp.
  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t ap = static_cast<std::size_t>(
      static_cast<long long>((static_cast<__int128>(a) * p) % n + n) % n);
  std::vector<Complex> ramp(nn);
  for (std::size_t k = 0; k < nn; ++k) ramp[k] = Complex{double(k) + 1.0, -double(k)};
  for (const CVector& probe : {CVector::delta(nn), CVector(std::move(ramp))}) {
    const CVector lhs = shift(probe, static_cast<long long>(ap));
    const CVector rhs = shift(probe, 1);
    for (std::size_t k = 0; k < nn; ++k)
      if (lhs[k] != rhs[k])
        throw NumericalContractError("bezout_shift_certificate: S^{ap} != S on probe");
  }

  return BezoutOutcome{BezoutCertificate{p, n, a, b}, 1};
}

}  // namespace circ
