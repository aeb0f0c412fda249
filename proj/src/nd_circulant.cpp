#include "circ/nd_circulant.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>

#include "circ/spectral_engine.hpp"

namespace circ {

namespace {

// stride_q = prod_{r > q} n_r, matching linearize (last axis fastest).
std::vector<std::size_t> strides_of(const TorusDims& dims) {
  std::vector<std::size_t> s(dims.rank());
  std::size_t acc = 1;
  for (std::size_t q = dims.rank(); q-- > 0;) {
    s[q] = acc;
    acc *= dims.extent(q);
  }
  return s;
}

// digits[k * d + q] = component q of the flat offset k.
std::vector<std::size_t> digit_table(const TorusDims& dims) {
  const std::size_t d = dims.rank();
  std::vector<std::size_t> digits(dims.cardinality() * d);
  for (std::size_t k = 0; k < dims.cardinality(); ++k) {
    std::size_t rest = k;
    for (std::size_t q = d; q-- > 0;) {
      digits[k * d + q] = rest % dims.extent(q);
      rest /= dims.extent(q);
    }
  }
  return digits;
}

std::vector<Complex> axis_root_table(std::size_t n, double sign) {
  std::vector<Complex> table(n);
  for (std::size_t j = 0; j < n; ++j)
    table[j] = std::polar(1.0, sign * kTwoPi * double(j) / double(n));
  return table;
}

void require_same_dims(const NdArray& a, const NdArray& b, const char* what) {
  if (!(a.dims() == b.dims())) throw DimensionError(what);
}

double max_abs_diff(const NdArray& a, const NdArray& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.cardinality(); ++k)
    m = std::max(m, std::abs(a.flat(k) - b.flat(k)));
  return m;
}

constexpr std::uint64_t kDetectionSeed = 0x51c7a9d2be4ff00dULL;

}  // namespace

NdArray::NdArray(TorusDims dims, std::vector<Complex> values)
    : dims_(std::move(dims)), values_(std::move(values)) {
  if (values_.size() != dims_.cardinality())
    throw DimensionError("NdArray: value count does not match cardinality");
  for (const Complex& z : values_)
    if (!is_finite(z)) throw DomainError("NdArray: entries must be finite");
}

NdArray NdArray::zeros(const TorusDims& dims) {
  return NdArray(dims, std::vector<Complex>(dims.cardinality(), Complex{0.0, 0.0}));
}

const Complex& NdArray::at(const MultiIndex& idx) const {
  if (!(idx.dims() == dims_)) throw DimensionError("NdArray::at: dims mismatch");
  return values_[linearize(idx)];
}

NdArray nd_delta(const TorusDims& dims) {
  std::vector<Complex> v(dims.cardinality(), Complex{0.0, 0.0});
  v[0] = Complex{1.0, 0.0};
  return NdArray(dims, std::move(v));
}

NdArray shifted_delta(const TorusDims& dims, const MultiIndex& l) {
  if (!(l.dims() == dims)) throw DimensionError("shifted_delta: dims mismatch");
  std::vector<Complex> v(dims.cardinality(), Complex{0.0, 0.0});
  v[linearize(l)] = Complex{1.0, 0.0};
  return NdArray(dims, std::move(v));
}

NdArray coordinate_shift(const NdArray& a, std::size_t axis, long long steps) {
  const TorusDims& dims = a.dims();
  if (axis >= dims.rank()) throw DomainError("coordinate_shift: axis out of range");
  const std::size_t n = dims.extent(axis);
  const std::size_t s = static_cast<std::size_t>(
      ((steps % static_cast<long long>(n)) + static_cast<long long>(n)) %
      static_cast<long long>(n));
  const auto strides = strides_of(dims);
  const std::size_t stride = strides[axis];

  std::vector<Complex> out(a.cardinality());
  for (std::size_t k = 0; k < a.cardinality(); ++k) {
    const std::size_t kq = (k / stride) % n;
    const std::size_t src_q = (kq + n - s) % n;
    out[k] = a.flat(k - kq * stride + src_q * stride);
  }
  return NdArray(dims, std::move(out));
}

NdArray general_shift(const NdArray& a, const MultiIndex& l) {
  if (!(l.dims() == a.dims())) throw DimensionError("general_shift: dims mismatch");
  NdArray out = a;
  for (std::size_t q = 0; q < a.dims().rank(); ++q)
    out = coordinate_shift(out, q, static_cast<long long>(l.component(q)));
  return out;
}

NdArray nd_convolve(const NdArray& x, const NdArray& y) {
  require_same_dims(x, y, "nd_convolve: dims mismatch");
  const TorusDims& dims = x.dims();
  const std::size_t d = dims.rank();
  const std::size_t card = dims.cardinality();
  const auto strides = strides_of(dims);
  const auto digits = digit_table(dims);

  std::vector<Complex> z(card, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < card; ++k) {
    const std::size_t* kd = &digits[k * d];
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < card; ++l) {
      const std::size_t* ld = &digits[l * d];
      std::size_t diff = 0;  // flat offset of (k - l) mod dims
      for (std::size_t q = 0; q < d; ++q) {
        const std::size_t n = dims.extent(q);
        diff += ((kd[q] + n - ld[q]) % n) * strides[q];
      }
      acc += x.flat(diff) * y.flat(l);
    }
    z[k] = acc;
  }
  return NdArray(dims, std::move(z));
}

NdArray apply_operator(const NdCirculantOp& op, const NdArray& y) {
  require_same_dims(op.impulse_response(), y, "apply_operator: dims mismatch");
  return nd_convolve(op.impulse_response(), y);
}

NdEigenvector nd_eigenvector(const TorusDims& dims, const MultiIndex& m) {
  if (!(m.dims() == dims)) throw DimensionError("nd_eigenvector: dims mismatch");
  const std::size_t d = dims.rank();
  std::vector<std::vector<Complex>> roots(d);
  for (std::size_t q = 0; q < d; ++q) roots[q] = axis_root_table(dims.extent(q), +1.0);

  const auto digits = digit_table(dims);
  std::vector<Complex> w(dims.cardinality());
  for (std::size_t l = 0; l < dims.cardinality(); ++l) {
    Complex prod{1.0, 0.0};
    for (std::size_t q = 0; q < d; ++q) {
      const std::size_t n = dims.extent(q);
      prod *= roots[q][(m.component(q) * digits[l * d + q]) % n];
    }
    w[l] = prod;
  }
  return NdEigenvector{m, NdArray(dims, std::move(w))};
}

NdArray nd_dft_direct(const NdArray& x) {
  const TorusDims& dims = x.dims();
  const std::size_t d = dims.rank();
  const std::size_t card = dims.cardinality();
  std::vector<std::vector<Complex>> roots(d);
  for (std::size_t q = 0; q < d; ++q) roots[q] = axis_root_table(dims.extent(q), -1.0);

  const auto digits = digit_table(dims);
  std::vector<Complex> hat(card);
  for (std::size_t m = 0; m < card; ++m) {
    const std::size_t* md = &digits[m * d];
    Complex acc{0.0, 0.0};
    for (std::size_t l = 0; l < card; ++l) {
      const std::size_t* ld = &digits[l * d];
      Complex prod{1.0, 0.0};
      for (std::size_t q = 0; q < d; ++q)
        prod *= roots[q][(md[q] * ld[q]) % dims.extent(q)];
      acc += x.flat(l) * prod;
    }
    hat[m] = acc;
  }
  return NdArray(dims, std::move(hat));
}

namespace {

// Apply a 1-D transform along one axis to every line of the array.
NdArray transform_axis(const NdArray& a, std::size_t axis, TransformDirection dir) {
  const TorusDims& dims = a.dims();
  const std::size_t n = dims.extent(axis);
  const auto strides = strides_of(dims);
  const std::size_t stride = strides[axis];
  const std::size_t block = stride * n;
  const ConvolutionPlan plan = make_default_plan(n);

  std::vector<Complex> out = a.values();
  std::vector<Complex> line(n);
  for (std::size_t hi = 0; hi < dims.cardinality(); hi += block) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t base = hi + lo;
      for (std::size_t t = 0; t < n; ++t) line[t] = out[base + t * stride];
      const CVector transformed = transform(plan, CVector(line), dir);
      for (std::size_t t = 0; t < n; ++t) out[base + t * stride] = transformed[t];
    }
  }
  return NdArray(dims, std::move(out));
}

}  // namespace

NdArray nd_dft_axiswise(const NdArray& x, std::span<const std::size_t> axis_order) {
  const std::size_t d = x.dims().rank();
  if (axis_order.size() != d)
    throw DimensionError("nd_dft_axiswise: axis order must list every axis once");
  std::vector<bool> seen(d, false);
  for (std::size_t q : axis_order) {
    if (q >= d || seen[q])
      throw DomainError("nd_dft_axiswise: axis order is not a permutation");
    seen[q] = true;
  }
  NdArray out = x;
  for (std::size_t q : axis_order)
    out = transform_axis(out, q, TransformDirection::forward);
  return out;
}

NdArray nd_dft(const NdArray& x) {
  std::vector<std::size_t> order(x.dims().rank());
  std::iota(order.begin(), order.end(), std::size_t{0});
  return nd_dft_axiswise(x, order);
}

NdArray nd_idft(const NdArray& xhat) {
  NdArray out = xhat;
  for (std::size_t q = 0; q < xhat.dims().rank(); ++q)
    out = transform_axis(out, q, TransformDirection::inverse);
  return out;
}

NdArray nd_eigenvalues(const NdCirculantOp& op) {
  return nd_dft(op.impulse_response());
}

Complex nd_z_transform_eval(const NdArray& x, std::span<const Complex> z) {
  const TorusDims& dims = x.dims();
  const std::size_t d = dims.rank();
  if (z.size() != d)
    throw DimensionError("nd_z_transform_eval: need one z per axis");
  for (const Complex& zq : z)
    if (zq == Complex{0.0, 0.0})
      throw DomainError("nd_z_transform_eval: every z_q must be nonzero");

  // pows[q][t] = z_q^{-t}
  std::vector<std::vector<Complex>> pows(d);
  for (std::size_t q = 0; q < d; ++q) {
    const Complex inv = Complex{1.0, 0.0} / z[q];
    pows[q].resize(dims.extent(q));
    pows[q][0] = Complex{1.0, 0.0};
    for (std::size_t t = 1; t < dims.extent(q); ++t) pows[q][t] = pows[q][t - 1] * inv;
  }

  const auto digits = digit_table(dims);
  Complex acc{0.0, 0.0};
  for (std::size_t l = 0; l < dims.cardinality(); ++l) {
    Complex prod{1.0, 0.0};
    for (std::size_t q = 0; q < d; ++q) prod *= pows[q][digits[l * d + q]];
    acc += x.flat(l) * prod;
  }
  return acc;
}

NdCirculantDetection is_nd_circulant(
    const std::function<NdArray(const NdArray&)>& map, const TorusDims& dims,
    double tol) {
  if (!(tol >= 0.0)) throw DomainError("is_nd_circulant: tol must be nonnegative");
  const std::size_t card = dims.cardinality();
  const std::size_t d = dims.rank();

  auto apply_map = [&](const NdArray& e) {
    NdArray r = map(e);
    if (!(r.dims() == dims))
      throw DimensionError("is_nd_circulant: map changed the torus dims");
    return r;
  };

  std::mt19937_64 rng(kDetectionSeed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  auto random_probe = [&]() {
    std::vector<Complex> v(card);
    for (Complex& zz : v) zz = Complex{dist(rng), dist(rng)};
    return NdArray(dims, std::move(v));
  };

  // Linearity spot check (a precondition, not part of the verdict).
  {
    const NdArray u = random_probe(), v = random_probe();
    const Complex alpha{0.37, -0.21}, beta{-0.83, 0.55};
    std::vector<Complex> combo(card);
    for (std::size_t k = 0; k < card; ++k)
      combo[k] = alpha * u.flat(k) + beta * v.flat(k);
    const NdArray lhs = apply_map(NdArray(dims, std::move(combo)));
    const NdArray mu = apply_map(u), mv = apply_map(v);
    double scale = 1.0, diff = 0.0;
    for (std::size_t k = 0; k < card; ++k) {
      const Complex rhs = alpha * mu.flat(k) + beta * mv.flat(k);
      diff = std::max(diff, std::abs(lhs.flat(k) - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    if (diff > std::max(tol, 1e-9) * scale)
      throw DomainError("is_nd_circulant: map is not linear on probes");
  }

  std::vector<NdArray> probes;
  if (card <= 4096) {
    probes.reserve(card);
    for (std::size_t l = 0; l < card; ++l)
      probes.push_back(shifted_delta(dims, delinearize(l, dims)));
  } else {
    probes.push_back(nd_delta(dims));
    for (int t = 0; t < 32; ++t) probes.push_back(random_probe());
  }

  NdCirculantDetection out;
  out.probes_used = probes.size();

  const NdArray impulse = apply_map(nd_delta(dims));
  const NdCirculantOp candidate{impulse};
  for (const NdArray& e : probes) {
    const NdArray me = apply_map(e);
    for (std::size_t q = 0; q < d; ++q) {
      const NdArray lhs = apply_map(coordinate_shift(e, q, 1));
      const NdArray rhs = coordinate_shift(me, q, 1);
      out.commutation_residual =
          std::max(out.commutation_residual, max_abs_diff(lhs, rhs));
    }
    out.reconstruction_residual = std::max(
        out.reconstruction_residual, max_abs_diff(apply_operator(candidate, e), me));
  }

  out.circulant =
      out.commutation_residual <= tol && out.reconstruction_residual <= tol;
  if (out.circulant) out.impulse_response = impulse;
  return out;
}

NdArray from_cvector(const CVector& x) {
  return NdArray(TorusDims{x.size()}, x.entries());
}

CVector to_cvector(const NdArray& a) {
  if (a.dims().rank() != 1)
    throw DimensionError("to_cvector: array is not one-dimensional");
  return CVector(a.values());
}

}  // namespace circ
