#pragma once

// Data-parallel inner loops. Each kernel exists twice: an OpenMP version used
// by the library and a plain serial version kept as the reference the tests
// and benchmarks compare against. Both must produce bit-identical results;
// every parallel loop here writes disjoint outputs from read-only inputs, so
// the schedule cannot change the answer.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "lefschetz/chain_complex.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::kernels {

using Complex = std::complex<double>;

// Square row-major matrix of polynomial entries.
struct PolyMatrix {
  std::size_t n = 0;
  std::vector<Polynomial> entries;

  Polynomial& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

namespace serial {

// One fraction-free (Bareiss) elimination step below pivot (k, k):
//   m[i][j] <- (m[k][k] m[i][j] - m[i][k] m[k][j]) / prev_pivot   for i, j > k
void bareiss_step(PolyMatrix& m, std::size_t k, const Polynomial& prev_pivot);

// One Weierstrass (Durand-Kerner) sweep for the monic polynomial with
// coefficients `monic` (low to high, leading 1 implied at index size()).
// Jacobi style: next[k] depends only on `current`.
void weierstrass_sweep(std::span<const Complex> monic, std::span<const Complex> current,
                       std::span<Complex> next);

// |p(z)| / sum |a_i| |z|^i for each root; p given low to high.
void relative_residuals(std::span<const Complex> coeffs, std::span<const Complex> roots,
                        std::span<double> out);

// Minimum of |n z^(n-1) - t| over a polar grid of the closed annulus
// inner <= |z| <= outer.
double annulus_min_derivative(int n, Complex t, double inner, double outer, int radial_steps,
                              int angular_steps);

std::vector<std::vector<GroupSummary>> homology_batch(std::span<const ChainComplex> complexes);

}  // namespace serial

namespace parallel {

void bareiss_step(PolyMatrix& m, std::size_t k, const Polynomial& prev_pivot);
void weierstrass_sweep(std::span<const Complex> monic, std::span<const Complex> current,
                       std::span<Complex> next);
void relative_residuals(std::span<const Complex> coeffs, std::span<const Complex> roots,
                        std::span<double> out);
double annulus_min_derivative(int n, Complex t, double inner, double outer, int radial_steps,
                              int angular_steps);
std::vector<std::vector<GroupSummary>> homology_batch(std::span<const ChainComplex> complexes);

}  // namespace parallel

}  // namespace lefschetz::kernels
