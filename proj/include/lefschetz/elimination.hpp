#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/polynomial.hpp"
#include "lefschetz/univariate.hpp"

namespace lefschetz {

// A polynomial in a "fibre" variable v whose coefficients are univariate
// polynomials in a "base" variable u; index i holds the coefficient of v^i.
using FibrePoly = std::vector<UPoly>;

/// One branch of a gcd computed over Q[u]/(modulus) by dynamic evaluation:
/// at every root u0 of `modulus`, gcd_v of the inputs specialised at u0 equals
/// `gcd` specialised at u0. `gcd` is monic in v, or empty when every input
/// vanishes identically on the fibre.
struct FibreBranch {
  UPoly modulus;
  FibrePoly gcd;

  bool vanishes_identically() const { return gcd.empty(); }
  std::size_t degree() const { return gcd.empty() ? 0 : gcd.size() - 1; }
};

// `modulus` must be squarefree. The branches' moduli multiply to it.
std::vector<FibreBranch> fibre_gcd(const UPoly& modulus, const std::vector<FibrePoly>& polys);

// Gcd in Q[u, v] of two polynomials over the same two variables, normalised
// to have leading coefficient 1 in grlex order.
Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b);

struct CommonZero {
  // Either a common factor of the system (a curve of common zeros) or a
  // squarefree polynomial in the first variable whose roots carry a common
  // zero in every fibre.
  Polynomial certificate;
  std::string kind;  // "common factor", "eliminant" or "identically zero"
};

/// Decides exactly whether polynomials over two variables share a zero in C^2.
std::optional<CommonZero> find_common_zero(const std::vector<Polynomial>& system);

}  // namespace lefschetz
