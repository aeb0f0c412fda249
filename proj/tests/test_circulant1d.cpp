#include "doctest.h"

#include <random>

#include "circ/circulant1d.hpp"
#include "circ/oracle_harness.hpp"
#include "test_support.hpp"

using namespace circ;
using circ::test::cv;
using circ::test::max_abs;
using circ::test::max_err;

TEST_SUITE("circulant1d") {

TEST_CASE("CVector validates length and finiteness") {
  CHECK_THROWS_AS(CVector(std::vector<Complex>{}), DomainError);
  CHECK_THROWS_AS(cv({Complex{1.0, 0.0}, Complex{std::nan(""), 0.0}}), DomainError);
  CHECK_THROWS_AS(cv({Complex{0.0, INFINITY}}), DomainError);
  CHECK(CVector::delta(4, 6)[2] == Complex{1.0, 0.0});
}

TEST_CASE("circulant entries follow x_{(i-j) mod n}") {
  const CVector x = cv({1.0, 2.0, 3.0, 4.0});
  const CirculantMatrix c{x};
  CHECK(c.entry(0, 0) == x[0]);
  CHECK(c.entry(0, 1) == x[3]);  // top row reads x_0, x_{n-1}, ...
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c.entry(i + 1, j + 1) == c.entry(i, j));
  CHECK_THROWS_AS(c.entry(4, 0), DomainError);
}

TEST_CASE("to_dense materializes shift matrices and the identity") {
  const DenseMatrix s = CirculantMatrix{CVector::delta(4, 1)}.to_dense();
  const DenseMatrix sstar = CirculantMatrix{CVector::delta(4, -1)}.to_dense();
  const DenseMatrix id = CirculantMatrix{CVector::delta(4)}.to_dense();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(s(i, j) == Complex{(i + 4 - j) % 4 == 1 ? 1.0 : 0.0, 0.0});
      CHECK(sstar(i, j) == Complex{(j + 4 - i) % 4 == 1 ? 1.0 : 0.0, 0.0});
      CHECK(id(i, j) == Complex{i == j ? 1.0 : 0.0, 0.0});
    }
  }
  // every column of a circulant is the circular down-shift of the previous
  const DenseMatrix m = CirculantMatrix{cv({1.0, 2.0, 3.0, 4.0, 5.0})}.to_dense();
  for (std::size_t j = 1; j < 5; ++j)
    for (std::size_t i = 0; i < 5; ++i) CHECK(m(i, j) == m((i + 4) % 5, j - 1));
}

TEST_CASE("shift rotates by p with full-turn periodicity") {
  const CVector x = cv({1.0, 2.0, 3.0});
  CHECK(max_err(shift(x, 1), cv({3.0, 1.0, 2.0})) == 0.0);
  CHECK(max_err(shift(x, 0), x) == 0.0);
  CHECK(max_err(shift(x, 3), x) == 0.0);
  CHECK(max_err(shift(x, 5), shift(x, 2)) == 0.0);
  CHECK(max_err(shift(shift(x, 2), -2), x) == 0.0);
}

TEST_CASE("circular convolution matches the frozen oracle values") {
  const CVector x = cv({1.0, 2.0, 3.0});
  const CVector y = cv({4.0, 5.0, 6.0});
  const CVector expected = cv({31.0, 31.0, 28.0});

  const CVector z = circular_convolve(x, y);
  CHECK(max_err(z, expected) == 0.0);
  CHECK(max_err(oracle::oracle_conv(x, y), expected) == 0.0);
  // checksum: sum z = (sum x)(sum y) = 6 * 15
  Complex total{0.0, 0.0};
  for (std::size_t k = 0; k < 3; ++k) total += z[k];
  CHECK(std::abs(total - Complex{90.0, 0.0}) < 1e-12);

  CHECK(max_err(circular_convolve(x, CVector::delta(3)), x) == 0.0);
  CHECK(max_err(circular_convolve(x, CVector::delta(3, 1)), shift(x, 1)) == 0.0);
  CHECK_THROWS_AS(circular_convolve(x, CVector::delta(4)), DimensionError);
}

TEST_CASE("matvec agrees with convolution and the dense grid") {
  const CVector x = cv({1.0, 2.0, 3.0});
  const CVector y = cv({4.0, 5.0, 6.0});
  const CirculantMatrix c{x};

  CHECK(max_err(matvec(c, y), cv({31.0, 31.0, 28.0})) == 0.0);
  CHECK(max_err(matvec(c, CVector::delta(3)), x) == 0.0);
  CHECK(max_err(matvec(CirculantMatrix{CVector::delta(3)}, y), y) == 0.0);

  std::mt19937_64 rng(11);
  for (std::size_t n : {1u, 2u, 7u, 32u}) {
    const CVector a = oracle::random_cvector(n, rng);
    const CVector b = oracle::random_cvector(n, rng);
    const CirculantMatrix ca{a};
    const CVector via_matvec = matvec(ca, b);
    CHECK(max_err(via_matvec, circular_convolve(a, b)) < 1e-12);
    const std::vector<Complex> via_dense = multiply(ca.to_dense(), b.entries());
    CHECK(max_err(via_matvec.entries(), via_dense) < 1e-12);
    // C_x y = C_y x
    CHECK(max_err(via_matvec, matvec(CirculantMatrix{b}, a)) < 1e-12);
  }
}

TEST_CASE("circulant product is circulant with convolved defining vector") {
  const CirculantMatrix cs{CVector::delta(4, 1)};
  const CirculantMatrix cs_star{CVector::delta(4, -1)};
  // S S* = I
  CHECK(max_err(circulant_matmul(cs, cs_star).first_column(), CVector::delta(4)) ==
        0.0);

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const CirculantMatrix cx{oracle::random_cvector(n, rng)};
    const CirculantMatrix cy{oracle::random_cvector(n, rng)};
    CHECK(max_err(circulant_matmul(cx, CirculantMatrix{CVector::delta(n)})
                      .first_column(),
                  cx.first_column()) == 0.0);

    const CirculantMatrix product = circulant_matmul(cx, cy);
    const DenseMatrix dense_product = multiply(cx.to_dense(), cy.to_dense());
    const double scale = std::max(1.0, circ::max_abs(dense_product));
    CHECK(max_abs_diff(product.to_dense(), dense_product) / scale < 1e-10);

    // mutual commutation
    const CirculantMatrix other = circulant_matmul(cy, cx);
    CHECK(max_err(product.first_column(), other.first_column()) < 1e-12 * double(n));
  }
}

TEST_CASE("shift invariance diagram S(Cy) = C(Sy)") {
  std::mt19937_64 rng(13);
  for (std::size_t n : {1u, 2u, 3u, 8u, 33u, 128u}) {
    const CVector x = oracle::random_cvector(n, rng);
    const CVector y = oracle::random_cvector(n, rng);
    const CirculantMatrix c{x};
    const double bound =
        1e-12 * double(n) * std::max({max_abs(x), max_abs(y), 1.0});
    CHECK(max_err(shift(matvec(c, y), 1), matvec(c, shift(y, 1))) <= bound);
  }
}

TEST_CASE("is_circulant detects structure and recovers the defining vector") {
  const DenseMatrix s = CirculantMatrix{CVector::delta(5, 1)}.to_dense();
  const CirculantDetection det = is_circulant(s, 1e-8);
  CHECK(det.circulant);
  REQUIRE(det.first_column.has_value());
  CHECK(max_err(*det.first_column, CVector::delta(5, 1)) == 0.0);

  CHECK(is_circulant(identity_matrix(6), 1e-8).circulant);

  DenseMatrix diag(2, 2);
  diag(0, 0) = Complex{1.0, 0.0};
  diag(1, 1) = Complex{2.0, 0.0};
  CHECK_FALSE(is_circulant(diag, 1e-8).circulant);

  DenseMatrix rect(2, 3);
  CHECK_THROWS_AS(is_circulant(rect, 1e-8), DimensionError);
  CHECK_THROWS_AS(is_circulant(diag, -1.0), DomainError);
}

TEST_CASE("is_circulant rejects 100 single-entry perturbations") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    const CVector x = oracle::random_cvector(n, rng);
    DenseMatrix grid = CirculantMatrix{x}.to_dense();
    REQUIRE(is_circulant(grid, 1e-8).circulant);
    grid(rng() % n, rng() % n) += Complex{1.0, 0.0};
    CHECK_FALSE(is_circulant(grid, 1e-8).circulant);
  }
}

TEST_CASE("detection via S agrees with detection via S*") {
  // commuting with S* is the same condition as commuting with S
  auto commutes_with_adjoint = [](const DenseMatrix& m, double tol) {
    const std::size_t n = m.rows();
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        norm = std::max(norm, std::abs(m((i + 1) % n, j) - m(i, (j + n - 1) % n)));
    return norm <= tol;
  };

  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 10;
    DenseMatrix grid = CirculantMatrix{oracle::random_cvector(n, rng)}.to_dense();
    if (trial % 2 == 0) grid(rng() % n, rng() % n) += Complex{0.5, 0.5};
    CHECK(is_circulant(grid, 1e-8).circulant == commutes_with_adjoint(grid, 1e-8));
  }
}

TEST_CASE("convolution is commutative and associative on the exact integer grid") {
  // exhaustive n <= 4, entries in {-1, 0, 1}: integer arithmetic is exact
  for (std::size_t n = 1; n <= 4; ++n) {
    std::size_t count = 1;
    for (std::size_t k = 0; k < n; ++k) count *= 3;
    auto grid_vec = [&](std::size_t t) {
      std::vector<Complex> v(n);
      for (std::size_t k = 0; k < n; ++k) {
        v[k] = Complex{double(static_cast<long long>(t % 3) - 1), 0.0};
        t /= 3;
      }
      return CVector(std::move(v));
    };
    for (std::size_t s = 0; s < count; ++s)
      for (std::size_t t = 0; t < count; ++t) {
        const CVector a = grid_vec(s), b = grid_vec(t);
        CHECK(max_err(circular_convolve(a, b), circular_convolve(b, a)) == 0.0);
      }
    // associativity on a thinned triple set to keep the suite quick; the
    // full exhaustive triple sweep runs in the harness and acceptance
    for (std::size_t s = 0; s < count; s += 2)
      for (std::size_t t = 0; t < count; t += 3)
        for (std::size_t u = 0; u < count; u += 2) {
          const CVector a = grid_vec(s), b = grid_vec(t), c = grid_vec(u);
          CHECK(max_err(circular_convolve(a, circular_convolve(b, c)),
                        circular_convolve(circular_convolve(a, b), c)) == 0.0);
        }
  }
}

TEST_CASE("convolution laws hold for random complex vectors up to n = 256") {
  std::mt19937_64 rng(16);
  for (std::size_t n : {5u, 16u, 100u, 256u}) {
    const CVector a = oracle::random_cvector(n, rng);
    const CVector b = oracle::random_cvector(n, rng);
    const CVector c = oracle::random_cvector(n, rng);
    const CVector ab = circular_convolve(a, b);
    const double scale = std::max(1.0, max_abs(ab));
    CHECK(max_err(ab, circular_convolve(b, a)) / scale < 1e-10);
    const CVector lhs = circular_convolve(a, circular_convolve(b, c));
    const CVector rhs = circular_convolve(ab, c);
    CHECK(max_err(lhs, rhs) / std::max(1.0, max_abs(rhs)) < 1e-10);
  }
}

TEST_CASE("ShiftSpec is the circulant of a shifted delta") {
  const ShiftSpec spec{5, 3};
  CHECK(max_err(spec.to_circulant().first_column(), CVector::delta(5, 3)) == 0.0);
  const CVector x = cv({1.0, 2.0, 3.0, 4.0, 5.0});
  CHECK(max_err(spec.apply(x), shift(x, 3)) == 0.0);
  CHECK(max_err(ShiftSpec{5, -2}.apply(x), shift(x, -2)) == 0.0);
  CHECK(max_err(matvec(spec.to_circulant(), x), shift(x, 3)) < 1e-15);
}

TEST_CASE("bezout_shift_certificate produces normalized witnesses") {
  const BezoutOutcome ok = bezout_shift_certificate(3, 7);
  REQUIRE(ok.certificate.has_value());
  CHECK(ok.certificate->a == 5);  // 3 * 5 = 15 = 1 (mod 7)
  CHECK(ok.certificate->a * 3 + ok.certificate->b * 7 == 1);

  const BezoutOutcome identity = bezout_shift_certificate(1, 5);
  REQUIRE(identity.certificate.has_value());
  CHECK(identity.certificate->a == 1);
  CHECK(identity.certificate->b == 0);

  const BezoutOutcome fail = bezout_shift_certificate(2, 4);
  CHECK_FALSE(fail.certificate.has_value());
  CHECK(fail.gcd == 2);

  CHECK_THROWS_AS(bezout_shift_certificate(3, 0), DomainError);

  // negative p is fine as long as it is coprime with n
  const BezoutOutcome negative = bezout_shift_certificate(-3, 7);
  REQUIRE(negative.certificate.has_value());
  CHECK(negative.certificate->a * -3 + negative.certificate->b * 7 == 1);
}

TEST_CASE("bezout certificates exist exactly for coprime pairs up to n = 12") {
  for (long long n = 1; n <= 12; ++n) {
    for (long long p = -2 * n; p <= 2 * n; ++p) {
      const long long g = std::gcd(p, n);
      const BezoutOutcome outcome = bezout_shift_certificate(p, n);
      if (g == 1) {
        REQUIRE(outcome.certificate.has_value());
        const BezoutCertificate& c = *outcome.certificate;
        CHECK(c.a * c.p + c.b * c.n == 1);
        CHECK(c.a >= 0);
        CHECK(c.a < n);
      } else {
        CHECK_FALSE(outcome.certificate.has_value());
        CHECK(outcome.gcd == (g == 0 ? n : g));
      }
    }
  }
}

}  // TEST_SUITE
