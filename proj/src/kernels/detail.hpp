#pragma once

// Per-element bodies shared by the serial and OpenMP kernels, so the two
// variants differ only in how the outer loop is scheduled.

#include <cmath>
#include <complex>
#include <exception>
#include <numbers>
#include <span>

#include "lefschetz/kernels.hpp"

namespace lefschetz::kernels::detail {

inline void bareiss_row(PolyMatrix& m, std::size_t k, std::size_t i, const Polynomial& prev) {
  const Polynomial& pivot = m(k, k);
  const Polynomial& head = m(i, k);
  for (std::size_t j = k + 1; j < m.n; ++j) {
    Polynomial num = pivot * m(i, j) - head * m(k, j);
    m(i, j) = divide_exact(num, prev);
  }
  m(i, k) = Polynomial(pivot.variables());
}

inline Complex weierstrass_update(std::span<const Complex> monic, std::span<const Complex> current,
                                  std::size_t k) {
  const Complex z = current[k];
  Complex value = 1.0;
  for (std::size_t i = monic.size(); i-- > 0;) value = value * z + monic[i];
  Complex denom = 1.0;
  for (std::size_t j = 0; j < current.size(); ++j)
    if (j != k) denom *= z - current[j];
  if (denom == Complex(0.0)) {
    // Two iterates collided; nudge deterministically and let the next sweep
    // separate them.
    return z + Complex(1e-9, 1e-9) * (1.0 + std::abs(z));
  }
  return z - value / denom;
}

inline double relative_residual(std::span<const Complex> coeffs, Complex z) {
  Complex value = 0.0;
  double scale = 0.0;
  const double r = std::abs(z);
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    value = value * z + coeffs[i];
    scale = scale * r + std::abs(coeffs[i]);
  }
  if (scale == 0.0) return 0.0;
  return std::abs(value) / scale;
}

inline double annulus_sample(int n, Complex t, double inner, double outer, int radial_steps,
                             int angular_steps, int index) {
  const int ri = index / angular_steps;
  const int ai = index % angular_steps;
  const double radius =
      radial_steps == 0 ? inner : inner + (outer - inner) * static_cast<double>(ri) / radial_steps;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(ai) / angular_steps;
  const Complex z = std::polar(radius, angle);
  return std::abs(static_cast<double>(n) * std::pow(z, n - 1) - t);
}

inline void rethrow_first(std::span<const std::exception_ptr> errors) {
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace lefschetz::kernels::detail
