#include "doctest.h"

#include "circ/dft_core.hpp"
#include "circ/oracle_harness.hpp"
#include "test_support.hpp"

using namespace circ;
using circ::test::cv;
using circ::test::max_err;

TEST_SUITE("oracle_harness") {

TEST_CASE("oracle_conv is the definitional sum") {
  const CVector z = oracle::oracle_conv(cv({1.0, 2.0, 3.0}), cv({4.0, 5.0, 6.0}));
  CHECK(max_err(z, cv({31.0, 31.0, 28.0})) == 0.0);
  Complex checksum{0.0, 0.0};
  for (std::size_t k = 0; k < 3; ++k) checksum += z[k];
  CHECK(std::abs(checksum - Complex{90.0, 0.0}) < 1e-12);

  const CVector x = cv({5.0, -1.0, Complex{2.0, 2.0}, 0.5});
  CHECK(max_err(oracle::oracle_conv(x, CVector::delta(4)), x) == 0.0);
  CHECK_THROWS_AS(oracle::oracle_conv(x, CVector::delta(3)), DimensionError);
}

TEST_CASE("oracle_conv agrees with circular_convolve on 1000 random instances") {
  oracle::Rng rng(61);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 64;
    const CVector x = oracle::random_cvector(n, rng);
    const CVector y = oracle::random_cvector(n, rng);
    CHECK(max_err(oracle::oracle_conv(x, y), circular_convolve(x, y)) <=
          1e-12 * double(n));
  }
}

TEST_CASE("nd oracle matches the nd module and reduces to 1-D") {
  oracle::Rng rng(62);
  const TorusDims dims{3, 4, 2};
  const NdArray a = oracle::random_ndarray(dims, rng);
  const NdArray b = oracle::random_ndarray(dims, rng);
  CHECK(max_err(oracle::oracle_conv_nd(a, b), nd_convolve(a, b)) <= 1e-11);

  // same sums paired in a different order, so within rounding rather than bitwise
  const CVector u = oracle::random_cvector(9, rng);
  const CVector v = oracle::random_cvector(9, rng);
  CHECK(max_err(to_cvector(oracle::oracle_conv_nd(from_cvector(u), from_cvector(v))),
                oracle::oracle_conv(u, v)) < 1e-12);
}

TEST_CASE("random entries stay inside the documented [-1,1] box") {
  oracle::Rng rng(63);
  for (int i = 0; i < 1000; ++i) {
    const Complex z = oracle::random_complex(rng);
    CHECK(std::abs(z.real()) <= 1.0);
    CHECK(std::abs(z.imag()) <= 1.0);
  }
}

TEST_CASE("verify_theorem1 reports three identities") {
  auto trivial = oracle::verify_theorem1(CVector::delta(4), CVector::delta(4), 1e-12);
  REQUIRE(trivial.size() == 3);
  for (const auto& r : trivial) {
    CHECK(r.pass);
    CHECK(r.residual == 0.0);
  }

  oracle::Rng rng(64);
  auto random16 = oracle::verify_theorem1(oracle::random_cvector(16, rng),
                                          oracle::random_cvector(16, rng),
                                          1e-9 * 16 * 16);
  CHECK(oracle::all_pass(random16));

  auto frozen = oracle::verify_theorem1(cv({1.0, 2.0, 3.0}), cv({4.0, 5.0, 6.0}),
                                        1e-9 * 9);
  CHECK(oracle::all_pass(frozen));
}

TEST_CASE("verify_exercises passes on the honest build") {
  const auto reports = oracle::verify_exercises(12, 7);
  CHECK(!reports.empty());
  for (const auto& r : reports) {
    CAPTURE(r.property);
    CAPTURE(r.instance);
    CAPTURE(r.residual);
    CHECK(r.pass);
  }
}

TEST_CASE("harness runs are deterministic given a seed") {
  const auto first = oracle::run_suite("exercises", 8, 99);
  const auto second = oracle::run_suite("exercises", 8, 99);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].property == second[i].property);
    CHECK(first[i].instance == second[i].instance);
    CHECK(first[i].residual == second[i].residual);
    CHECK(first[i].pass == second[i].pass);
  }
}

TEST_CASE("every named suite passes at desk scale") {
  for (const std::string suite :
       {"lemma1", "lemma2", "theorem1", "theorem2", "exercises"}) {
    const auto reports = oracle::run_suite(suite, 16, 7);
    CHECK(!reports.empty());
    for (const auto& r : reports) {
      CAPTURE(suite);
      CAPTURE(r.property);
      CAPTURE(r.instance);
      CAPTURE(r.residual);
      CAPTURE(r.tolerance);
      CHECK(r.pass);
    }
  }
  CHECK_THROWS_AS(oracle::run_suite("bogus", 8, 7), ConfigError);
}

TEST_CASE("the all suite merges deterministically by property then instance") {
  const auto all = oracle::run_suite("all", 8, 5);
  CHECK(oracle::all_pass(all));
  for (std::size_t i = 1; i < all.size(); ++i) {
    const bool ordered =
        std::tie(all[i - 1].property, all[i - 1].instance) <=
        std::tie(all[i].property, all[i].instance);
    CHECK(ordered);
  }
}

TEST_CASE("pass flag always mirrors residual <= tolerance") {
  const auto r = oracle::make_report("x", "y", 2.0, 1.0);
  CHECK_FALSE(r.pass);
  CHECK(oracle::make_report("x", "y", 1.0, 1.0).pass);
}

}  // TEST_SUITE
