#include "circ/dft_core.hpp"

#include <cmath>
#include <utility>

namespace circ {

namespace {

// table[j] = exp(sign * i 2 pi j / n); exponents are always reduced mod n
// before lookup, which keeps the evaluated angles in [0, 2 pi).
std::vector<Complex> unit_root_table(std::size_t n, double sign) {
  std::vector<Complex> table(n);
  for (std::size_t j = 0; j < n; ++j)
    table[j] = std::polar(1.0, sign * kTwoPi * double(j) / double(n));
  return table;
}

std::size_t require_positive(std::size_t n, const char* what) {
  if (n == 0) throw DomainError(what);
  return n;
}

}  // namespace

Spectrum::Spectrum(std::vector<Complex> entries, SpectrumOrdering ordering)
    : entries_(std::move(entries)), ordering_(ordering) {
  if (entries_.empty()) throw DomainError("Spectrum: length must be >= 1");
}

Spectrum Spectrum::reordered(SpectrumOrdering target) const {
  if (target == ordering_) return *this;
  const std::size_t n = entries_.size();
  std::vector<Complex> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = entries_[(n - k) % n];
  return Spectrum(std::move(out), target);
}

DftMatrix::DftMatrix(std::size_t n)
    : n_(n), grid_(require_positive(n, "DftMatrix: n must be >= 1"), n) {
  const auto roots = unit_root_table(n, +1.0);
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t m = 0; m < n; ++m) grid_(l, m) = roots[(l * m) % n];
}

std::vector<Complex> DftMatrix::apply(const std::vector<Complex>& v) const {
  return multiply(grid_, v);
}

std::vector<Complex> DftMatrix::apply_adjoint(const std::vector<Complex>& v) const {
  if (v.size() != n_) throw DimensionError("DftMatrix: vector length mismatch");
  std::vector<Complex> out(n_, Complex{0.0, 0.0});
  for (std::size_t m = 0; m < n_; ++m) {
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < n_; ++l) acc += std::conj(grid_(l, m)) * v[l];
    out[m] = acc;
  }
  return out;
}

std::vector<Eigenpair> shift_eigenpairs(std::size_t n) {
  if (n == 0) throw DomainError("shift_eigenpairs: n must be >= 1");
  const auto roots = unit_root_table(n, +1.0);
  std::vector<Eigenpair> pairs;
  pairs.reserve(n);
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<Complex> w(n);
    for (std::size_t l = 0; l < n; ++l) w[l] = roots[(m * l) % n];
    pairs.push_back(Eigenpair{m, root_of_unity(n, static_cast<long long>(m)),
                              CVector(std::move(w))});
  }
  return pairs;
}

Spectrum dft(const CVector& x) {
  const std::size_t n = x.size();
  const auto roots = unit_root_table(n, -1.0);
  std::vector<Complex> hat(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < n; ++l) acc += x[l] * roots[(k * l) % n];
    hat[k] = acc;
  }
  return Spectrum(std::move(hat), SpectrumOrdering::standard);
}

CVector idft(const Spectrum& s) {
  const Spectrum std_order = s.reordered(SpectrumOrdering::standard);
  const std::size_t n = std_order.size();
  const auto roots = unit_root_table(n, +1.0);
  std::vector<Complex> y(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += std_order[k] * roots[(k * l) % n];
    y[l] = acc / double(n);
  }
  return CVector(std::move(y));
}

Spectrum dft_unitary(const CVector& x) {
  const double scale = 1.0 / std::sqrt(double(x.size()));
  Spectrum s = dft(x);
  std::vector<Complex> entries = s.entries();
  for (Complex& z : entries) z *= scale;
  return Spectrum(std::move(entries), SpectrumOrdering::standard);
}

CVector idft_unitary(const Spectrum& s) {
  const Spectrum std_order = s.reordered(SpectrumOrdering::standard);
  const std::size_t n = std_order.size();
  const double scale = 1.0 / std::sqrt(double(n));
  const auto roots = unit_root_table(n, +1.0);
  std::vector<Complex> y(n);
  for (std::size_t l = 0; l < n; ++l) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += std_order[k] * roots[(k * l) % n];
    y[l] = acc * scale;
  }
  return CVector(std::move(y));
}

Spectrum eigenvalues_of_circulant(const CVector& x) { return dft(x); }

Spectrum alternate_transform(const CVector& x) {
  return dft(x).reordered(SpectrumOrdering::alternate);
}

Complex z_transform_eval(const CVector& x, Complex z) {
  if (z == Complex{0.0, 0.0})
    throw DomainError("z_transform_eval: z must be nonzero");
  const Complex u = Complex{1.0, 0.0} / z;
  const std::size_t n = x.size();
  Complex acc = x[n - 1];
  for (std::size_t l = n - 1; l-- > 0;) acc = acc * u + x[l];
  return acc;
}

}  // namespace circ
