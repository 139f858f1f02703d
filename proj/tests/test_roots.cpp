#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "lefschetz/roots.hpp"

using namespace lefschetz;
using Complex = std::complex<double>;

TEST(Roots, RootsOfUnity) {
  for (int n = 1; n <= 12; ++n) {
    std::vector<Complex> coeffs(static_cast<std::size_t>(n) + 1, 0.0);
    coeffs.front() = -1.0;
    coeffs.back() = 1.0;
    const auto r = refine_roots(coeffs);
    ASSERT_TRUE(r.converged) << n;
    ASSERT_EQ(r.roots.size(), static_cast<std::size_t>(n));
    // Closed form: exp(2 pi i k / n), matched by nearest neighbour.
    for (int k = 0; k < n; ++k) {
      const Complex w = std::polar(1.0, 2 * std::numbers::pi * k / n);
      double best = 1e9;
      for (const auto& z : r.roots) best = std::min(best, std::abs(z - w));
      EXPECT_LT(best, 1e-10);
    }
  }
}

TEST(Roots, SortedAndResidualsBelowTolerance) {
  const UPoly p({-6, 11, -6, 1});  // (x-1)(x-2)(x-3)
  const auto r = refine_roots(p);
  ASSERT_TRUE(r.converged);
  ASSERT_EQ(r.roots.size(), 3u);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(r.roots[static_cast<std::size_t>(i)].real(), i + 1, 1e-10);
  EXPECT_LT(r.max_residual(), 1e-12);
}

TEST(Roots, ParallelMatchesSerialBitForBit) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> coeffs(2 + rng() % 20);
    for (auto& c : coeffs) c = {g(rng), g(rng)};
    const auto a = refine_roots(coeffs);
    const auto b = refine_roots_serial(coeffs);
    EXPECT_EQ(a.roots, b.roots);
    EXPECT_EQ(a.residuals, b.residuals);
    EXPECT_EQ(a.iterations, b.iterations);
  }
}

TEST(Roots, IterationCapReportsNonConvergence) {
  const UPoly p({-6, 11, -6, 1});
  const auto r = refine_roots(p, {1e-12, 1});
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.iterations, 1);
}
