#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Dense univariate polynomial over Q, coefficients stored low to high with no
// trailing zeros. Used by the elimination code where the sparse map would
// only get in the way.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  static UPoly constant(const Rational& c);
  static UPoly x();

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // Precondition: nonzero.
  std::size_t degree() const;
  const Rational& lc() const;
  const Rational& operator[](std::size_t i) const { return c_[i]; }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& s);
  bool operator==(const UPoly& other) const = default;

  Rational evaluate(const Rational& at) const;
  std::complex<double> evaluate(std::complex<double> at) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Quotient and remainder; throws on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly rem(const UPoly& a, const UPoly& b);
UPoly monic(const UPoly& p);
UPoly derivative(const UPoly& p);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
// Inverse of a modulo m; throws unless gcd(a, m) = 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
// p / gcd(p, p'), made monic.
UPoly squarefree_part(const UPoly& p);
bool is_squarefree(const UPoly& p);

UPoly to_upoly(const Polynomial& p);  // throws NotUnivariate
Polynomial to_polynomial(const UPoly& p, std::string_view var);

// Coefficients of p in powers of `var`, each coefficient univariate in the
// remaining single variable. p must involve at most two variables.
std::vector<UPoly> coefficients_in(const Polynomial& p, std::string_view var);

std::string to_string(const UPoly& p, std::string_view var);

}  // namespace lefschetz
