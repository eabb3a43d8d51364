#include <catch2/catch_amalgamated.hpp>

#include "hsgan/matrix.hpp"
#include "hsgan/rng.hpp"
#include "support/test_util.hpp"

using hsgan::Matrix;

TEST_CASE("matmul matches naive triple loop") {
  hsgan::Rng rng(7);
  const Matrix a = testutil::random_matrix(5, 4, rng);
  const Matrix b = testutil::random_matrix(4, 6, rng);
  const Matrix c = hsgan::matmul(a, b);
  REQUIRE(c.rows == 5);
  REQUIRE(c.cols == 6);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) acc += a(i, k) * b(k, j);
      REQUIRE_THAT(c(i, j), Catch::Matchers::WithinAbs(acc, 1e-12));
    }
  }
}

TEST_CASE("matmul_at_b and matmul_a_bt agree with explicit transposes") {
  hsgan::Rng rng(11);
  const Matrix a = testutil::random_matrix(6, 3, rng);
  const Matrix b = testutil::random_matrix(6, 5, rng);
  const Matrix atb = hsgan::matmul_at_b(a, b);
  REQUIRE(atb.rows == 3);
  REQUIRE(atb.cols == 5);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 6; ++k) acc += a(k, i) * b(k, j);
      REQUIRE_THAT(atb(i, j), Catch::Matchers::WithinAbs(acc, 1e-12));
    }
  }

  const Matrix c = testutil::random_matrix(4, 5, rng);
  const Matrix d = testutil::random_matrix(7, 5, rng);
  const Matrix cdt = hsgan::matmul_a_bt(c, d);
  REQUIRE(cdt.rows == 4);
  REQUIRE(cdt.cols == 7);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 5; ++k) acc += c(i, k) * d(j, k);
      REQUIRE_THAT(cdt(i, j), Catch::Matchers::WithinAbs(acc, 1e-12));
    }
  }
}

TEST_CASE("shape mismatches name both shapes") {
  const Matrix a(2, 3);
  const Matrix b(4, 2);
  REQUIRE_THROWS_WITH(hsgan::matmul(a, b),
                      Catch::Matchers::ContainsSubstring("2x3") &&
                          Catch::Matchers::ContainsSubstring("4x2"));
  REQUIRE_THROWS_AS(hsgan::matmul(a, b), hsgan::ShapeError);
}

TEST_CASE("rng streams are deterministic and uniform draws stay in range") {
  hsgan::Rng a(42), b(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform();
    REQUIRE(x == b.uniform());
    REQUIRE(x >= 0.0);
    REQUIRE(x < 1.0);
  }
  hsgan::Rng c(42);
  double mean = 0.0;
  for (int i = 0; i < 10000; ++i) mean += c.normal();
  mean /= 10000.0;
  REQUIRE(std::abs(mean) < 0.05);
}

TEST_CASE("derived seeds differ per stage") {
  const auto s0 = hsgan::derive_seed(123, 0);
  const auto s1 = hsgan::derive_seed(123, 1);
  const auto t0 = hsgan::derive_seed(124, 0);
  REQUIRE(s0 != s1);
  REQUIRE(s0 != t0);
  REQUIRE(s0 == hsgan::derive_seed(123, 0));
}
