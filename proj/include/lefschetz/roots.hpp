#pragma once

#include <complex>
#include <span>
#include <vector>

#include "lefschetz/univariate.hpp"

namespace lefschetz {

struct RootOptions {
  double tolerance = 1e-12;
  int max_iterations = 200;
};

/// Roots from simultaneous (Weierstrass / Durand-Kerner) iteration.
///
/// `residuals[i]` is the relative backward error |p(z)| / sum |a_k||z|^k of
/// `roots[i]`; convergence means every residual fell below the tolerance.
/// Roots are sorted by (real, imaginary) so the output does not depend on
/// how the sweep was scheduled.
struct RootRefinement {
  std::vector<std::complex<double>> roots;
  std::vector<double> residuals;
  int iterations = 0;
  bool converged = false;

  double max_residual() const;
};

// Coefficients low to high; the leading one must be nonzero.
RootRefinement refine_roots(std::span<const std::complex<double>> coeffs,
                            const RootOptions& options = {});
RootRefinement refine_roots_serial(std::span<const std::complex<double>> coeffs,
                                   const RootOptions& options = {});

RootRefinement refine_roots(const UPoly& p, const RootOptions& options = {});

}  // namespace lefschetz
