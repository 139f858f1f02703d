#include <omp.h>

#include <exception>
#include <limits>

#include "detail.hpp"

namespace lefschetz::kernels::parallel {

void bareiss_step(PolyMatrix& m, std::size_t k, const Polynomial& prev_pivot) {
  const auto first = static_cast<std::ptrdiff_t>(k + 1);
  const auto last = static_cast<std::ptrdiff_t>(m.n);
  std::vector<std::exception_ptr> errors(m.n);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = first; i < last; ++i) {
    try {
      detail::bareiss_row(m, k, static_cast<std::size_t>(i), prev_pivot);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
}

void weierstrass_sweep(std::span<const Complex> monic, std::span<const Complex> current,
                       std::span<Complex> next) {
  const auto n = static_cast<std::ptrdiff_t>(current.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    next[static_cast<std::size_t>(k)] = detail::weierstrass_update(monic, current, static_cast<std::size_t>(k));
}

void relative_residuals(std::span<const Complex> coeffs, std::span<const Complex> roots,
                        std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(roots.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = detail::relative_residual(coeffs, roots[static_cast<std::size_t>(k)]);
}

double annulus_min_derivative(int n, Complex t, double inner, double outer, int radial_steps,
                              int angular_steps) {
  const int total = (radial_steps + 1) * angular_steps;
  double best = std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(min : best)
  for (int idx = 0; idx < total; ++idx) {
    const double v = detail::annulus_sample(n, t, inner, outer, radial_steps, angular_steps, idx);
    if (v < best) best = v;
  }
  return best;
}

std::vector<std::vector<GroupSummary>> homology_batch(std::span<const ChainComplex> complexes) {
  std::vector<std::vector<GroupSummary>> out(complexes.size());
  std::vector<std::exception_ptr> errors(complexes.size());
  const auto n = static_cast<std::ptrdiff_t>(complexes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = homology(complexes[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  detail::rethrow_first(errors);
  return out;
}

}  // namespace lefschetz::kernels::parallel
