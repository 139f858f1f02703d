#include <exception>
#include <limits>

#include "detail.hpp"

namespace lefschetz::kernels::serial {

void bareiss_step(PolyMatrix& m, std::size_t k, const Polynomial& prev_pivot) {
  for (std::size_t i = k + 1; i < m.n; ++i) detail::bareiss_row(m, k, i, prev_pivot);
}

void weierstrass_sweep(std::span<const Complex> monic, std::span<const Complex> current,
                       std::span<Complex> next) {
  for (std::size_t k = 0; k < current.size(); ++k) next[k] = detail::weierstrass_update(monic, current, k);
}

void relative_residuals(std::span<const Complex> coeffs, std::span<const Complex> roots,
                        std::span<double> out) {
  for (std::size_t k = 0; k < roots.size(); ++k) out[k] = detail::relative_residual(coeffs, roots[k]);
}

double annulus_min_derivative(int n, Complex t, double inner, double outer, int radial_steps,
                              int angular_steps) {
  const int total = (radial_steps + 1) * angular_steps;
  double best = std::numeric_limits<double>::infinity();
  for (int idx = 0; idx < total; ++idx) {
    const double v = detail::annulus_sample(n, t, inner, outer, radial_steps, angular_steps, idx);
    if (v < best) best = v;
  }
  return best;
}

std::vector<std::vector<GroupSummary>> homology_batch(std::span<const ChainComplex> complexes) {
  std::vector<std::vector<GroupSummary>> out(complexes.size());
  for (std::size_t i = 0; i < complexes.size(); ++i) out[i] = homology(complexes[i]);
  return out;
}

}  // namespace lefschetz::kernels::serial
