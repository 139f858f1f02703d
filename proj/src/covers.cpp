#include "lefschetz/covers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"
#include "lefschetz/kernels.hpp"

namespace lefschetz {

ProfileValidation validate_profile(const RamificationProfile& profile) {
  ProfileValidation out;
  auto fail = [&](std::string message) {
    out.valid = false;
    out.diagnostics.push_back(std::move(message));
  };
  if (profile.degree < 1) fail("degree must be positive, got " + std::to_string(profile.degree));
  if (profile.base_genus < 0) fail("base genus must be non-negative, got " + std::to_string(profile.base_genus));
  for (std::size_t i = 0; i < profile.fibers.size(); ++i) {
    const auto& fiber = profile.fibers[i];
    const std::string where = "fiber " + std::to_string(i);
    if (std::any_of(fiber.begin(), fiber.end(), [](std::int64_t n) { return n < 1; })) {
      fail(where + " has a ramification index below 1");
      continue;
    }
    const std::int64_t sum = std::accumulate(fiber.begin(), fiber.end(), std::int64_t{0});
    if (sum != profile.degree)
      fail(where + " sums to " + std::to_string(sum) + ", expected " + std::to_string(profile.degree));
    if (std::all_of(fiber.begin(), fiber.end(), [](std::int64_t n) { return n == 1; }))
      out.spurious_fibers.push_back(i);
  }
  return out;
}

namespace {

void require_valid(const RamificationProfile& profile) {
  const auto v = validate_profile(profile);
  if (!v.valid) throw Error(ErrorCode::InvalidProfile, v.diagnostics.front());
}

}  // namespace

std::int64_t total_splitting_count(const RamificationProfile& profile) {
  require_valid(profile);
  std::int64_t total = 0;
  for (const auto& fiber : profile.fibers)
    for (std::int64_t n : fiber) total += n - 1;
  return total;
}

std::int64_t rh_euler(const RamificationProfile& profile) {
  return profile.degree * (2 - 2 * profile.base_genus) - total_splitting_count(profile);
}

std::int64_t rh_genus(const RamificationProfile& profile) {
  const std::int64_t twice_genus =
      2 + 2 * profile.degree * (profile.base_genus - 1) + total_splitting_count(profile);
  if (twice_genus % 2 != 0)
    throw Error(ErrorCode::NonIntegerGenus,
                "sum of (n_p - 1) is odd, genus would be " + std::to_string(twice_genus) + "/2");
  if (twice_genus < 0) throw Error(ErrorCode::NegativeGenus, "genus would be " + std::to_string(twice_genus / 2));
  const std::int64_t g = twice_genus / 2;
  ensure(rh_euler(profile) == 2 - 2 * g, "euler characteristic and genus disagree");
  return g;
}

RamificationProfile plane_curve_profile(std::int64_t d) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  RamificationProfile p{d, 0, {}};
  if (d >= 2) {
    std::vector<std::int64_t> simple(static_cast<std::size_t>(d - 1), 1);
    simple.front() = 2;
    p.fibers.assign(static_cast<std::size_t>(d * (d - 1)), simple);
  }
  return p;
}

std::int64_t plane_curve_via_rh(std::int64_t d) {
  const std::int64_t g = rh_genus(plane_curve_profile(d));
  ensure(g == (d - 1) * (d - 2) / 2, "cover genus disagrees with the plane-curve formula");
  return g;
}

// ---------------------------------------------------------------------------

namespace {

constexpr int kRadialSteps = 64;
constexpr int kAngularSteps = 256;

void require_local_model(int n, double epsilon) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be at least 2");
  if (!(epsilon > 0.0 && epsilon < 0.5)) throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1/2)");
}

}  // namespace

AnnulusCheck annulus_check(int n, std::complex<double> t, double epsilon) {
  require_local_model(n, epsilon);
  AnnulusCheck out;
  out.root_magnitude = std::pow(std::abs(t) / n, 1.0 / (n - 1));
  out.clear = t == 0.0 || out.root_magnitude < epsilon || out.root_magnitude > 0.5;
  out.min_sampled_derivative =
      kernels::parallel::annulus_min_derivative(n, t, epsilon, 0.5, kRadialSteps, kAngularSteps);
  return out;
}

bool annulus_clear(int n, std::complex<double> t, double epsilon) { return annulus_check(n, t, epsilon).clear; }

PerturbationResult split_degenerate(int n, double epsilon, std::complex<double> t, const RootOptions& options) {
  require_local_model(n, epsilon);
  if (t == 0.0) throw Error(ErrorCode::ZeroT, "t = 0 leaves the degenerate critical point unsplit");
  const double bound = n * std::pow(epsilon, n - 1);
  if (std::abs(t) >= bound) {
    std::ostringstream msg;
    msg << "|t| = " << std::abs(t) << " is not below n*eps^(n-1) = " << bound;
    throw Error(ErrorCode::BoundViolated, msg.str());
  }

  PerturbationResult out;
  out.n = n;
  out.t = t;
  out.epsilon = epsilon;

  // f_t'(z) = n z^(n-1) - t
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(n), 0.0);
  coeffs.front() = -t;
  coeffs.back() = static_cast<double>(n);
  const auto refined = refine_roots(coeffs, options);
  out.critical_points = refined.roots;
  out.converged = refined.converged;
  out.iterations = refined.iterations;

  out.min_separation = std::numeric_limits<double>::infinity();
  out.all_nondegenerate = true;
  out.all_inside_epsilon_disc = true;
  for (std::size_t i = 0; i < out.critical_points.size(); ++i) {
    const auto z = out.critical_points[i];
    out.residuals.push_back(std::abs(static_cast<double>(n) * std::pow(z, n - 1) - t));
    const auto second = static_cast<double>(n) * (n - 1) * std::pow(z, n - 2);
    out.all_nondegenerate = out.all_nondegenerate && second != 0.0;
    out.all_inside_epsilon_disc = out.all_inside_epsilon_disc && std::abs(z) < epsilon;
    for (std::size_t j = i + 1; j < out.critical_points.size(); ++j)
      out.min_separation = std::min(out.min_separation, std::abs(z - out.critical_points[j]));
  }
  out.annulus = annulus_check(n, t, epsilon);
  out.annulus_clear = out.annulus.clear;
  return out;
}

}  // namespace lefschetz
