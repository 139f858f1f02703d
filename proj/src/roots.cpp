#include "lefschetz/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "lefschetz/error.hpp"
#include "lefschetz/kernels.hpp"

namespace lefschetz {

double RootRefinement::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

namespace {

using Complex = std::complex<double>;

template <typename Sweep, typename Residuals>
RootRefinement refine(std::span<const Complex> coeffs, const RootOptions& options, Sweep sweep,
                      Residuals residuals) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0.0)) --n;
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "refine_roots: zero polynomial");
  const std::size_t degree = n - 1;
  coeffs = coeffs.first(n);

  RootRefinement out;
  if (degree == 0) {
    out.converged = true;
    return out;
  }

  const Complex lead = coeffs[degree];
  std::vector<Complex> monic(degree);
  double bound = 0.0;
  for (std::size_t i = 0; i < degree; ++i) {
    monic[i] = coeffs[i] / lead;
    bound = std::max(bound, std::abs(monic[i]));
  }

  // Initial guesses on a circle enclosing every root, rotated off the axes so
  // real-coefficient symmetry cannot pin two iterates together.
  const double radius = 1.0 + bound;
  const double offset = 0.4;
  std::vector<Complex> current(degree), next(degree);
  for (std::size_t k = 0; k < degree; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(degree) + offset;
    current[k] = std::polar(radius, angle);
  }

  std::vector<double> res(degree);
  auto all_below = [&] {
    return std::all_of(res.begin(), res.end(), [&](double r) { return r < options.tolerance; });
  };

  residuals(coeffs, current, res);
  int iter = 0;
  while (!all_below() && iter < options.max_iterations) {
    sweep(monic, current, next);
    std::swap(current, next);
    residuals(coeffs, current, res);
    ++iter;
  }

  std::vector<std::size_t> order(degree);
  for (std::size_t i = 0; i < degree; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (current[a].real() != current[b].real()) return current[a].real() < current[b].real();
    return current[a].imag() < current[b].imag();
  });
  out.roots.reserve(degree);
  out.residuals.reserve(degree);
  for (std::size_t i : order) {
    out.roots.push_back(current[i]);
    out.residuals.push_back(res[i]);
  }
  out.iterations = iter;
  out.converged = all_below();
  return out;
}

}  // namespace

RootRefinement refine_roots(std::span<const Complex> coeffs, const RootOptions& options) {
  return refine(coeffs, options, kernels::parallel::weierstrass_sweep,
                kernels::parallel::relative_residuals);
}

RootRefinement refine_roots_serial(std::span<const Complex> coeffs, const RootOptions& options) {
  return refine(coeffs, options, kernels::serial::weierstrass_sweep,
                kernels::serial::relative_residuals);
}

RootRefinement refine_roots(const UPoly& p, const RootOptions& options) {
  std::vector<Complex> c;
  c.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) c.emplace_back(q.get_d(), 0.0);
  return refine_roots(c, options);
}

}  // namespace lefschetz
