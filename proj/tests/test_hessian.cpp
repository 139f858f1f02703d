#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lefschetz/error.hpp"
#include "lefschetz/hessian.hpp"

using namespace lefschetz;

TEST(CurveHessian, Matrix) {
  const auto h = curve_hessian(1, 0);
  EXPECT_EQ(h(0, 0), 2);
  EXPECT_EQ(h(1, 1), -2);
  EXPECT_EQ(h(0, 1), 0);
  EXPECT_DOUBLE_EQ(determinant(h), -4);
  const auto g = curve_hessian(0, 1);
  EXPECT_EQ(g(0, 1), 2);
  EXPECT_EQ(g(1, 0), 2);
  EXPECT_DOUBLE_EQ(determinant(g), -4);
  EXPECT_NEAR(determinant(curve_hessian(3, 4)), -100, 1e-12);
  EXPECT_THROW(curve_hessian(0, 0), Error);
}

TEST(CurveHessian, Index) {
  for (auto [a, b, s] : {std::tuple{1.0, 0.0, 2.0}, {0.0, 1.0, 2.0}, {3.0, 4.0, 10.0}}) {
    const auto c = curve_index(a, b);
    EXPECT_EQ(c.negatives, 1u);
    EXPECT_EQ(c.positives, 1u);
    EXPECT_NEAR(c.eigenvalues[0], -s, 1e-12);
    EXPECT_NEAR(c.eigenvalues[1], s, 1e-12);
  }
}

TEST(PencilHessian, Blocks) {
  const auto h = pencil_hessian(3, 4, 3);
  ASSERT_EQ(h.size(), 6u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(h(i, i), 6);
    EXPECT_EQ(h(3 + i, 3 + i), -6);
    EXPECT_EQ(h(i, 3 + i), 8);
    EXPECT_EQ(h(3 + i, i), 8);
  }
  const auto one = pencil_hessian(0, 1, 1);
  EXPECT_EQ(one(0, 1), 2);
  EXPECT_EQ(one(0, 0), 0);
}

TEST(PencilHessian, IndexAndDeterminants) {
  const auto a = pencil_index(1, 0, 2);
  EXPECT_EQ(a.hessian.negatives, 2u);
  EXPECT_NEAR(a.symbol_det, 1, 1e-12);
  const auto b = pencil_index(3, 4, 2);
  EXPECT_EQ(b.hessian.negatives, 2u);
  EXPECT_NEAR(b.symbol_det, 625, 1e-9);
  EXPECT_NEAR(b.hessian.det, 10000, 1e-8);
  const auto c = pencil_index(1, 1, 3);
  EXPECT_EQ(c.hessian.negatives, 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(c.hessian.eigenvalues[i], -2 * std::sqrt(2.0), 1e-12);
  for (std::size_t i = 3; i < 6; ++i) EXPECT_NEAR(c.hessian.eigenvalues[i], 2 * std::sqrt(2.0), 1e-12);
}

TEST(PencilHessian, ClosedFormOracle) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const double r = std::sqrt(0.01 + 99.99 * u(rng));
    const double theta = 2 * M_PI * u(rng);
    const double a = r * std::cos(theta), b = r * std::sin(theta);
    const double s2 = a * a + b * b;
    const auto idx = pencil_index(a, b, n);
    EXPECT_EQ(idx.hessian.negatives, static_cast<std::size_t>(n));
    EXPECT_EQ(idx.hessian.zeros, 0u);
    const double expected = std::pow(-s2, n);
    EXPECT_LT(std::abs(idx.symbol_det - expected), 1e-10 * std::abs(expected));
    // det(x I - symbol) = (x^2 - s^2)^n away from the roots.
    const auto symbol = pencil_symbol(a, b, n);
    const double s = std::sqrt(s2);
    // Samples 0, ±0.5s, ±1.5s, ±2s, ... stay clear of the roots ±s.
    const double offsets[] = {0.5, 1.5, 2.0, 2.5, 3.0, 3.5};
    std::vector<double> xs{0.0};
    for (int k = 0; k < n; ++k) {
      xs.push_back(offsets[k] * s);
      xs.push_back(-offsets[k] * s);
    }
    for (double x : xs) {
      const double want = std::pow(x * x - s2, n);
      EXPECT_LT(std::abs(characteristic_value(symbol, x) - want), 1e-9 * std::abs(want));
    }
    EXPECT_EQ(curve_index(a, b).negatives, pencil_index(a, b, 1).hessian.negatives);
    for (double scale : {0.5, 2.0, 10.0})
      EXPECT_EQ(index_certificate(pencil_hessian(a, b, n).scaled(scale)).negatives, static_cast<std::size_t>(n));
  }
}

TEST(PencilHessian, FiniteDifferences) {
  EXPECT_LT(finite_difference_check(1, 0, 1, 1e-4), 1e-6);
  EXPECT_LT(finite_difference_check(0, 1, 2, 1e-4), 1e-6);
  EXPECT_LT(finite_difference_check(3, 4, 3, 1e-4), 1e-6);
  EXPECT_THROW(finite_difference_check(1, 0, 1, 0.0), Error);
}

TEST(PencilHessian, Degenerate) {
  try {
    pencil_index(0, 0, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateParameters);
  }
}
