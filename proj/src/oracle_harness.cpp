#include "circ/oracle_harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <tuple>
#include <utility>

#include "circ/dft_core.hpp"

namespace circ::oracle {

namespace {

double max_abs_entry(const CVector& x) {
  double m = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, std::abs(x[k]));
  return m;
}

double max_diff(const CVector& a, const CVector& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double max_diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

double max_abs_entry(const std::vector<Complex>& a) {
  double m = 0.0;
  for (const Complex& z : a) m = std::max(m, std::abs(z));
  return m;
}

// Relative with a floor of 1 on the scale, so zero-heavy cases stay sane.
double rel(double diff, double scale) { return diff / std::max(scale, 1.0); }

std::string fmt_instance(std::size_t n, std::uint64_t seed, long long trial = -1) {
  std::ostringstream os;
  os << "n=" << n << " seed=" << seed;
  if (trial >= 0) os << " trial=" << trial;
  return os.str();
}

std::vector<std::size_t> sizes_up_to(std::size_t n_max) {
  std::vector<std::size_t> all{1, 2, 3, 4, 5, 8, 12, 16, 24, 32, 48, 64, 100, 128, 192, 256};
  std::vector<std::size_t> out;
  for (std::size_t n : all)
    if (n <= n_max) out.push_back(n);
  if (out.empty()) out.push_back(std::max<std::size_t>(n_max, 1));
  return out;
}

}  // namespace

PropertyReport make_report(std::string property, std::string instance,
                           double residual, double tolerance) {
  PropertyReport r;
  r.property = std::move(property);
  r.instance = std::move(instance);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  return r;
}

bool all_pass(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.pass; });
}

Complex random_complex(Rng& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double re = dist(rng);
  const double im = dist(rng);
  return Complex{re, im};
}

CVector random_cvector(std::size_t n, Rng& rng) {
  std::vector<Complex> v(n);
  for (Complex& z : v) z = random_complex(rng);
  return CVector(std::move(v));
}

NdArray random_ndarray(const TorusDims& dims, Rng& rng) {
  std::vector<Complex> v(dims.cardinality());
  for (Complex& z : v) z = random_complex(rng);
  return NdArray(dims, std::move(v));
}

CVector oracle_conv(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw DimensionError("oracle_conv: lengths differ");
  const std::size_t n = x.size();
  std::vector<Complex> z(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) z[k] += x[l] * y[(k + n - l) % n];
  return CVector(std::move(z));
}

NdArray oracle_conv_nd(const NdArray& x, const NdArray& y) {
  if (!(x.dims() == y.dims())) throw DimensionError("oracle_conv_nd: dims mismatch");
  const auto& sizes = x.dims().sizes();
  const std::size_t d = sizes.size();
  const std::size_t card = x.dims().cardinality();

  std::vector<Complex> z(card, Complex{0.0, 0.0});
  std::vector<std::size_t> k(d, 0);
  for (std::size_t kf = 0; kf < card; ++kf) {
    Complex acc{0.0, 0.0};
    std::vector<std::size_t> l(d, 0);
    for (std::size_t lf = 0; lf < card; ++lf) {
      std::size_t diff = 0;
      for (std::size_t q = 0; q < d; ++q)
        diff = diff * sizes[q] + (k[q] + sizes[q] - l[q]) % sizes[q];
      acc += x.flat(diff) * y.flat(lf);
      for (std::size_t q = d; q-- > 0;) {
        if (++l[q] < sizes[q]) break;
        l[q] = 0;
      }
    }
    z[kf] = acc;
    for (std::size_t q = d; q-- > 0;) {
      if (++k[q] < sizes[q]) break;
      k[q] = 0;
    }
  }
  return NdArray(x.dims(), std::move(z));
}

DenseMatrix oracle_dense_circulant(const CVector& x) {
  const std::size_t n = x.size();
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x[(i + n - j) % n];
  return m;
}

DenseMatrix oracle_dense_mul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("oracle_dense_mul: shape mismatch");
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t l = 0; l < a.cols(); ++l) acc += a(i, l) * b(l, j);
      c(i, j) = acc;
    }
  return c;
}

std::vector<PropertyReport> verify_theorem1(const CVector& x, const CVector& y,
                                            double tol) {
  if (x.size() != y.size()) throw DimensionError("verify_theorem1: lengths differ");
  const std::size_t n = x.size();
  const std::string instance = "n=" + std::to_string(n);
  std::vector<PropertyReport> out;

  // C_{x*y} = C_x C_y, against an independent dense product.
  {
    const DenseMatrix lhs =
        circulant_matmul(CirculantMatrix{x}, CirculantMatrix{y}).to_dense();
    const DenseMatrix rhs =
        oracle_dense_mul(oracle_dense_circulant(x), oracle_dense_circulant(y));
    out.push_back(make_report("theorem1/matrix-isomorphism", instance,
                              rel(max_abs_diff(lhs, rhs), max_abs(rhs)), tol));
  }

  // hat(x*y) = hat-x o hat-y.
  {
    const Spectrum lhs = dft(circular_convolve(x, y));
    const Spectrum hx = dft(x), hy = dft(y);
    double diff = 0.0, scale = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex rhs = hx[k] * hy[k];
      diff = std::max(diff, std::abs(lhs[k] - rhs));
      scale = std::max(scale, std::abs(rhs));
    }
    out.push_back(make_report("theorem1/convolution-hat", instance, diff / scale, tol));
  }

  // Eigenvalues are the z-transform evaluated at the roots of unity.
  {
    const Spectrum hx = eigenvalues_of_circulant(x);
    double diff = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex at_root =
          z_transform_eval(x, root_of_unity(n, static_cast<long long>(k)).value);
      diff = std::max(diff, std::abs(at_root - hx[k]));
    }
    out.push_back(make_report("theorem1/z-transform-eigen", instance,
                              rel(diff, max_abs_entry(hx.entries())), tol));
  }
  return out;
}

namespace {

// Grid vector t over entries {-1, 0, 1}: base-3 digits of t, minus one.
CVector grid_vector(std::size_t n, std::size_t t) {
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    v[k] = Complex{double(static_cast<long long>(t % 3) - 1), 0.0};
    t /= 3;
  }
  return CVector(std::move(v));
}

std::size_t pow3(std::size_t n) {
  std::size_t p = 1;
  while (n-- > 0) p *= 3;
  return p;
}

// The concrete non-coprime witness: the 2x2-block swap permutation on n = 4
// commutes with S^2 yet is not circulant.
DenseMatrix block_swap_witness() {
  DenseMatrix m(4, 4);
  m(0, 1) = m(1, 0) = m(2, 3) = m(3, 2) = Complex{1.0, 0.0};
  return m;
}

}  // namespace

std::vector<PropertyReport> verify_exercises(std::size_t n_max, std::uint64_t seed) {
  if (n_max < 2) throw DomainError("verify_exercises: n_max must be >= 2");
  Rng rng(seed);
  std::vector<PropertyReport> out;

  // Exercise 1: commuting with S characterizes circulant matrices.
  const double detect_tol = 1e-8;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n =
        2 + static_cast<std::size_t>(rng() % std::min<std::size_t>(n_max - 1, 31));
    const CVector x = random_cvector(n, rng);
    const DenseMatrix grid = oracle_dense_circulant(x);

    const CirculantDetection det = is_circulant(grid, detect_tol);
    double residual = det.commutator_norm;
    if (det.circulant)
      residual = std::max(residual, max_diff(*det.first_column, x));
    else
      residual = 1.0;
    out.push_back(make_report("exercise1/accept-circulant",
                              fmt_instance(n, seed, trial), residual, detect_tol));

    DenseMatrix bumped = grid;
    bumped(rng() % n, rng() % n) += Complex{1.0, 0.0};
    const CirculantDetection bad = is_circulant(bumped, detect_tol);
    // Rejection margin as a ratio: tol / commutator <= 1 iff detection fails.
    const double ratio = bad.commutator_norm > 0.0
                             ? detect_tol / bad.commutator_norm
                             : std::numeric_limits<double>::infinity();
    out.push_back(make_report("exercise1/reject-perturbed",
                              fmt_instance(n, seed, trial),
                              bad.circulant ? 2.0 : ratio, 1.0));
  }

  // Exercise 2: Bezout certificates for every coprime pair, refusal otherwise.
  for (std::size_t n = 2; n <= n_max; ++n) {
    std::size_t coprime_failures = 0, noncoprime_failures = 0;
    for (std::size_t p = 1; p < n; ++p) {
      const long long g = std::gcd(static_cast<long long>(p), static_cast<long long>(n));
      const BezoutOutcome outcome = bezout_shift_certificate(
          static_cast<long long>(p), static_cast<long long>(n));
      if (g == 1) {
        bool ok = outcome.certificate.has_value() && outcome.gcd == 1;
        if (ok) {
          const BezoutCertificate& c = *outcome.certificate;
          const __int128 ident = static_cast<__int128>(c.a) * c.p +
                                 static_cast<__int128>(c.b) * c.n;
          const long long ap_mod = static_cast<long long>(
              (static_cast<__int128>(c.a) * c.p) % static_cast<__int128>(n));
          ok = ident == 1 && c.a >= 0 && c.a < static_cast<long long>(n) &&
               ap_mod == 1;
        }
        if (!ok) ++coprime_failures;
      } else {
        if (outcome.certificate.has_value() || outcome.gcd != g)
          ++noncoprime_failures;
      }
    }
    out.push_back(make_report("exercise2/coprime-certificates",
                              fmt_instance(n, seed),
                              double(coprime_failures), 0.0));
    out.push_back(make_report("exercise2/non-coprime-refusal",
                              fmt_instance(n, seed),
                              double(noncoprime_failures), 0.0));
  }
  {
    // S^2-commuting non-circulant witness on n = 4.
    const DenseMatrix w = block_swap_witness();
    double comm = 0.0;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        comm = std::max(comm, std::abs(w((i + 2) % 4, j) - w(i, (j + 2) % 4)));
    const bool not_circulant = !is_circulant(w, detect_tol).circulant;
    out.push_back(make_report("exercise2/s2-witness", fmt_instance(4, seed),
                              comm + (not_circulant ? 0.0 : 1.0), 0.0));
  }

  // Exercise 3: convolution is commutative and associative.
  for (std::size_t n = 1; n <= std::min<std::size_t>(4, n_max); ++n) {
    const std::size_t count = pow3(n);
    double worst = 0.0;
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t t = 0; t < count; ++t) {
        const CVector a = grid_vector(n, s), b = grid_vector(n, t);
        worst = std::max(worst,
                         max_diff(circular_convolve(a, b), circular_convolve(b, a)));
      }
    out.push_back(make_report("exercise3/exhaustive-commutativity",
                              fmt_instance(n, seed), worst, 0.0));
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(4, n_max); ++n) {
    const std::size_t count = pow3(n);
    double worst = 0.0;
    for (std::size_t s = 0; s < count; ++s) {
      const CVector a = grid_vector(n, s);
      for (std::size_t t = 0; t < count; ++t) {
        const CVector b = grid_vector(n, t);
        for (std::size_t u = 0; u < count; ++u) {
          const CVector c = grid_vector(n, u);
          const CVector lhs = circular_convolve(a, circular_convolve(b, c));
          const CVector rhs = circular_convolve(circular_convolve(a, b), c);
          worst = std::max(worst, max_diff(lhs, rhs));
        }
      }
    }
    out.push_back(make_report("exercise3/exhaustive-associativity",
                              fmt_instance(n, seed), worst, 0.0));
  }
  for (std::size_t n : sizes_up_to(std::min<std::size_t>(256, n_max))) {
    if (n < 5) continue;
    double worst_comm = 0.0, worst_assoc = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const CVector a = random_cvector(n, rng), b = random_cvector(n, rng),
                    c = random_cvector(n, rng);
      const CVector ab = circular_convolve(a, b);
      worst_comm = std::max(
          worst_comm, rel(max_diff(ab, circular_convolve(b, a)), max_abs_entry(ab)));
      const CVector lhs = circular_convolve(a, circular_convolve(b, c));
      const CVector rhs = circular_convolve(ab, c);
      worst_assoc =
          std::max(worst_assoc, rel(max_diff(lhs, rhs), max_abs_entry(rhs)));
    }
    out.push_back(make_report("exercise3/random-commutativity",
                              fmt_instance(n, seed), worst_comm, 1e-10));
    out.push_back(make_report("exercise3/random-associativity",
                              fmt_instance(n, seed), worst_assoc, 1e-10));
  }
  return out;
}

namespace {

std::vector<PropertyReport> suite_lemma1(std::size_t n_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyReport> out;
  for (std::size_t n : sizes_up_to(n_max)) {
    for (int trial = 0; trial < 3; ++trial) {
      const CVector x = random_cvector(n, rng);
      const CirculantMatrix cx{x};
      const DenseMatrix dense = cx.to_dense();
      const std::string inst = fmt_instance(n, seed, trial);

      // S M = M S for a circulant, with an independent dense product.
      const DenseMatrix s = oracle_dense_circulant(CVector::delta(n, 1));
      out.push_back(make_report(
          "lemma1/shift-commutation", inst,
          max_abs_diff(oracle_dense_mul(s, dense), oracle_dense_mul(dense, s)), 0.0));

      const CirculantDetection det = is_circulant(dense, 1e-8);
      double residual = det.commutator_norm;
      if (det.circulant)
        residual = std::max(residual, max_diff(*det.first_column, x));
      else
        residual = 1.0;
      out.push_back(make_report("lemma1/accept-circulant", inst, residual, 1e-8));

      DenseMatrix bumped = dense;
      bumped(rng() % n, rng() % n) += Complex{1.0, 0.0};
      const CirculantDetection bad = is_circulant(bumped, 1e-8);
      double reject = 2.0;
      if (!bad.circulant && n > 1)
        reject = 1e-8 / bad.commutator_norm;
      else if (n == 1)
        reject = 0.0;  // every 1x1 matrix is circulant
      out.push_back(make_report("lemma1/reject-perturbed", inst, reject, 1.0));

      // Commuting with S* must give the same verdict as commuting with S.
      auto adjoint_verdict = [&](const DenseMatrix& m) {
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            norm = std::max(norm,
                            std::abs(m((i + 1) % n, j) - m(i, (j + n - 1) % n)));
        return norm <= 1e-8;
      };
      const bool agree = adjoint_verdict(dense) == det.circulant &&
                         adjoint_verdict(bumped) == bad.circulant;
      out.push_back(
          make_report("lemma1/adjoint-agreement", inst, agree ? 0.0 : 1.0, 0.0));

      // Figure-4 diagram: shifting commutes with the action of C_x.
      const CVector y = random_cvector(n, rng);
      const double scale = std::max(max_abs_entry(x), max_abs_entry(y));
      out.push_back(make_report(
          "lemma1/shift-invariance", inst,
          max_diff(shift(matvec(cx, y), 1), matvec(cx, shift(y, 1))),
          1e-12 * double(n) * std::max(scale, 1.0)));
    }
  }
  return out;
}

std::vector<PropertyReport> suite_lemma2(std::size_t n_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyReport> out;
  for (std::size_t n : sizes_up_to(n_max)) {
    const std::string inst = fmt_instance(n, seed);
    const auto pairs = shift_eigenpairs(n);

    double eig_rel = 0.0;
    for (const Eigenpair& p : pairs) {
      const CVector lhs = shift(p.eigenvector, -1);
      for (std::size_t k = 0; k < n; ++k)
        eig_rel = std::max(eig_rel,
                           std::abs(lhs[k] - p.eigenvalue.value * p.eigenvector[k]));
    }
    out.push_back(make_report("lemma2/eigen-relation", inst, eig_rel, 1e-12));

    double ortho = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        Complex dot{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k)
          dot += std::conj(pairs[a].eigenvector[k]) * pairs[b].eigenvector[k];
        ortho = std::max(ortho, std::abs(dot));
      }
    out.push_back(make_report("lemma2/orthogonality", inst, ortho, 1e-10 * double(n)));

    const DftMatrix w(n);
    const DenseMatrix nid = [&] {
      DenseMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex{double(n), 0.0};
      return m;
    }();
    DenseMatrix adjoint(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) adjoint(i, j) = std::conj(w.entry(j, i));
    const double unitary =
        std::max(max_abs_diff(oracle_dense_mul(adjoint, w.grid()), nid),
                 max_abs_diff(oracle_dense_mul(w.grid(), adjoint), nid));
    out.push_back(
        make_report("lemma2/unitary-rescaling", inst, unitary, 1e-10 * double(n)));

    const CVector x = random_cvector(n, rng);
    const Spectrum hat = eigenvalues_of_circulant(x);
    const CirculantMatrix cx{x};
    double sweep = 0.0;
    for (const Eigenpair& p : pairs) {
      const CVector cw = matvec(cx, p.eigenvector);
      for (std::size_t k = 0; k < n; ++k)
        sweep = std::max(sweep, std::abs(cw[k] - hat[p.m] * p.eigenvector[k]));
    }
    out.push_back(make_report("lemma2/eigenvalue-sweep", inst, sweep,
                              1e-10 * double(n) * std::max(max_abs_entry(x), 1.0)));

    out.push_back(make_report(
        "lemma2/dft-is-adjoint-multiply", inst,
        max_diff(dft(x).entries(), w.apply_adjoint(x.entries())),
        1e-12 * double(n) * std::max(max_abs_entry(x), 1.0)));
  }
  return out;
}

std::vector<PropertyReport> suite_theorem1(std::size_t n_max, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyReport> out;
  for (std::size_t n : sizes_up_to(n_max)) {
    if (n < 2) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const CVector x = random_cvector(n, rng), y = random_cvector(n, rng);
      auto reports = verify_theorem1(x, y, 1e-9 * double(n) * double(n));
      for (PropertyReport& r : reports) {
        r.instance += " seed=" + std::to_string(seed) +
                      " trial=" + std::to_string(trial);
        r.pass = r.residual <= r.tolerance;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

std::vector<PropertyReport> suite_theorem2(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<PropertyReport> out;
  const std::vector<TorusDims> dims_list{
      TorusDims{4, 4}, TorusDims{7, 5}, TorusDims{8, 8, 8}, TorusDims{2, 3, 4, 5}};

  for (const TorusDims& dims : dims_list) {
    const double card = double(dims.cardinality());
    std::ostringstream os;
    os << "dims=";
    for (std::size_t q = 0; q < dims.rank(); ++q)
      os << (q ? "x" : "") << dims.extent(q);
    os << " seed=" << seed;
    const std::string inst = os.str();

    const NdArray x = random_ndarray(dims, rng);
    const NdArray y = random_ndarray(dims, rng);
    const NdArray direct = nd_dft_direct(x);
    const double hat_scale = std::max(max_abs_entry(direct.values()), 1.0);

    out.push_back(make_report(
        "theorem2/separability", inst,
        max_diff(nd_dft(x).values(), direct.values()) / hat_scale, 1e-9 * card));

    std::vector<std::size_t> reversed(dims.rank());
    for (std::size_t q = 0; q < dims.rank(); ++q) reversed[q] = dims.rank() - 1 - q;
    out.push_back(make_report(
        "theorem2/axis-order", inst,
        max_diff(nd_dft_axiswise(x, reversed).values(), direct.values()) / hat_scale,
        1e-9 * card));

    {
      const NdArray lhs = nd_dft(nd_convolve(x, y));
      const NdArray hx = nd_dft(x), hy = nd_dft(y);
      double diff = 0.0, scale = 1.0;
      for (std::size_t k = 0; k < dims.cardinality(); ++k) {
        const Complex rhs = hx.flat(k) * hy.flat(k);
        diff = std::max(diff, std::abs(lhs.flat(k) - rhs));
        scale = std::max(scale, std::abs(rhs));
      }
      out.push_back(
          make_report("theorem2/convolution-hat", inst, diff / scale, 1e-9 * card));
    }

    {
      const NdCirculantOp op{x};
      const NdArray eig = nd_eigenvalues(op);
      double sweep = 0.0;
      for (std::size_t m = 0; m < dims.cardinality(); ++m) {
        const NdEigenvector w = nd_eigenvector(dims, delinearize(m, dims));
        const NdArray cw = apply_operator(op, w.array);
        for (std::size_t k = 0; k < dims.cardinality(); ++k)
          sweep = std::max(sweep, std::abs(cw.flat(k) - eig.flat(m) * w.array.flat(k)));
      }
      out.push_back(make_report(
          "theorem2/eigen-sweep", inst, sweep,
          1e-9 * card * std::max(max_abs_entry(x.values()), 1.0)));
    }

    out.push_back(make_report(
        "theorem2/roundtrip", inst,
        max_diff(nd_idft(nd_dft(x)).values(), x.values()) /
            std::max(max_abs_entry(x.values()), 1.0),
        1e-11 * card));

    {
      double zdiff = 0.0;
      std::vector<Complex> z(dims.rank());
      for (std::size_t m = 0; m < dims.cardinality(); ++m) {
        const MultiIndex mi = delinearize(m, dims);
        for (std::size_t q = 0; q < dims.rank(); ++q)
          z[q] = root_of_unity(dims.extent(q),
                               static_cast<long long>(mi.component(q)))
                     .value;
        zdiff = std::max(zdiff,
                         std::abs(nd_z_transform_eval(x, z) - direct.flat(m)));
      }
      out.push_back(make_report("theorem2/z-transform", inst, zdiff / hat_scale,
                                1e-10 * card));
    }

    {
      // y = sum_l y_l delta^(l), reassembled exactly.
      std::vector<Complex> acc(dims.cardinality(), Complex{0.0, 0.0});
      for (std::size_t l = 0; l < dims.cardinality(); ++l) {
        const NdArray d = shifted_delta(dims, delinearize(l, dims));
        for (std::size_t k = 0; k < dims.cardinality(); ++k)
          acc[k] += y.flat(l) * d.flat(k);
      }
      out.push_back(make_report("theorem2/delta-decomposition", inst,
                                max_diff(acc, y.values()), 0.0));
    }
  }
  return out;
}

}  // namespace

bool is_known_suite(const std::string& suite) {
  return suite == "lemma1" || suite == "lemma2" || suite == "theorem1" ||
         suite == "theorem2" || suite == "exercises" || suite == "all";
}

std::vector<PropertyReport> run_suite(const std::string& suite, std::size_t n_max,
                                      std::uint64_t seed) {
  if (!is_known_suite(suite))
    throw ConfigError("run_suite: unknown suite '" + suite + "'");
  std::vector<PropertyReport> out;
  if (suite == "lemma1" || suite == "all") {
    auto r = suite_lemma1(n_max, seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "lemma2" || suite == "all") {
    auto r = suite_lemma2(n_max, seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "theorem1" || suite == "all") {
    auto r = suite_theorem1(n_max, seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "theorem2" || suite == "all") {
    auto r = suite_theorem2(seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "exercises" || suite == "all") {
    auto r = verify_exercises(std::max<std::size_t>(n_max, 2), seed);
    out.insert(out.end(), r.begin(), r.end());
  }
  if (suite == "all") {
    std::stable_sort(out.begin(), out.end(),
                     [](const PropertyReport& a, const PropertyReport& b) {
                       return std::tie(a.property, a.instance) <
                              std::tie(b.property, b.instance);
                     });
  }
  return out;
}

}  // namespace circ::oracle
