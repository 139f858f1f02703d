#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lefschetz/roots.hpp"

namespace lefschetz {

/// A branched cover C -> B of degree d, described by the ramification
/// indices over each branch point.
struct RamificationProfile {
  std::int64_t degree = 1;
  std::int64_t base_genus = 0;
  std::vector<std::vector<std::int64_t>> fibers;
};

struct ProfileValidation {
  bool valid = true;
  std::vector<std::string> diagnostics;
  // Fibres made only of 1s: legal, but they are not branch points.
  std::vector<std::size_t> spurious_fibers;
};

ProfileValidation validate_profile(const RamificationProfile& profile);

// Sum of (n_p - 1) over every point of every fibre. Throws InvalidProfile.
std::int64_t total_splitting_count(const RamificationProfile& profile);

// 2g(C) - 2 = d (2g(B) - 2) + sum (n_p - 1). Throws InvalidProfile,
// NonIntegerGenus or NegativeGenus.
std::int64_t rh_genus(const RamificationProfile& profile);
// d e(B) - sum (n_p - 1). Throws InvalidProfile.
std::int64_t rh_euler(const RamificationProfile& profile);

// Degree d over P^1 with d(d-1) simple branch points.
RamificationProfile plane_curve_profile(std::int64_t d);
std::int64_t plane_curve_via_rh(std::int64_t d);

struct AnnulusCheck {
  bool clear = true;
  // (|t|/n)^(1/(n-1)): common modulus of the critical points of z^n - t z.
  double root_magnitude = 0.0;
  // Smallest |n z^(n-1) - t| on a polar grid over eps <= |z| <= 1/2.
  double min_sampled_derivative = 0.0;
};

// Critical points of f_t(z) = z^n - t z against the annulus eps <= |z| <= 1/2.
// Throws InvalidArgument unless n >= 2 and 0 < eps < 1/2.
AnnulusCheck annulus_check(int n, std::complex<double> t, double epsilon);
bool annulus_clear(int n, std::complex<double> t, double epsilon);

struct PerturbationResult {
  int n = 2;
  std::complex<double> t;
  double epsilon = 0.0;
  std::vector<std::complex<double>> critical_points;
  // |n z^(n-1) - t| at each point.
  std::vector<double> residuals;
  double min_separation = 0.0;
  bool all_nondegenerate = false;
  bool all_inside_epsilon_disc = false;
  bool annulus_clear = false;
  AnnulusCheck annulus;
  bool converged = false;
  int iterations = 0;
};

// Splits the degenerate critical point of z^n at 0 into the n-1 critical
// points of z^n - t z. Throws InvalidArgument, ZeroT or BoundViolated
// (|t| >= n eps^(n-1)).
PerturbationResult split_degenerate(int n, double epsilon, std::complex<double> t,
                                    const RootOptions& options = {});

}  // namespace lefschetz
