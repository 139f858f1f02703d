#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lefschetz {

using Integer = mpz_class;
using Rational = mpq_class;

// Builds num/den in lowest terms with a positive denominator.
Rational make_rational(const Integer& num, const Integer& den);

using Exponent = std::vector<unsigned>;

// Graded lexicographic order on exponent vectors: total degree first, ties
// broken lexicographically in declared variable order.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in grlex order; the zero polynomial has no terms. Two
/// polynomials can only be combined when they carry the same ordered variable
/// list, which keeps exponent vectors comparable without silent re-indexing.
class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::string_view name);
  static Polynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t variable_count() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  // Index of `name` in the variable list; throws UnknownVariable.
  std::size_t index_of(std::string_view name) const;
  bool has_variable(std::string_view name) const;

  // Undefined (nullopt) for the zero polynomial.
  std::optional<unsigned> total_degree() const;
  std::optional<unsigned> degree_in(std::string_view name) const;
  std::optional<unsigned> degree_in(std::size_t index) const;

  Rational coefficient(const Exponent& e) const;
  // Leading term in grlex order. Precondition: nonzero.
  const std::pair<const Exponent, Rational>& leading_term() const;

  // Accumulates c·x^e into this polynomial, dropping the term if it cancels.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  bool operator==(const Polynomial& other) const = default;

  Polynomial pow(unsigned k) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Canonical text: grlex-descending terms, `c*x^a*y^b` with `+`/`-` joins.
  std::string to_string() const;

 private:
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Parses a sum of signed monomial terms over `variables`. Coefficients are
/// integers or `p/q`; factors are joined by `*` and powers written `x^k`.
Polynomial parse(std::string_view text, const std::vector<std::string>& variables);

Polynomial derivative(const Polynomial& p, std::string_view var);

// d if every term has total degree d; nullopt otherwise (including zero).
std::optional<unsigned> homogeneous_degree(const Polynomial& f);

// Sets `var` to 1 in a homogeneous polynomial and drops it from the
// variable list. The default turns f(x,y,z) into F(x,z) = f(x,1,z).
Polynomial dehomogenize(const Polynomial& f, std::string_view var = "y");

// Substitutes a rational value for `var` and drops it from the variable list.
Polynomial specialize(const Polynomial& p, std::string_view var, const Rational& value);

// Replaces the i-th variable of `p` by images[i]; all images must share one
// variable list, which becomes the result's.
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images);

// Re-expresses `p` over `variables`. Every variable p actually uses must
// appear there; unused ones may be dropped.
Polynomial with_variables(const Polynomial& p, const std::vector<std::string>& variables);

// Exact quotient a / b; throws InexactDivision when b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Sylvester matrix of p and q with respect to `var` (row-major, square of
/// size deg p + deg q). Entries live over the remaining variables.
std::vector<Polynomial> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                         std::string_view var);

/// Res_var(p, q): determinant of the Sylvester matrix by fraction-free
/// elimination. The result is expressed over the variables other than `var`.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var);

// Same determinant, computed with the serial elimination kernel.
Polynomial resultant_serial(const Polynomial& p, const Polynomial& q, std::string_view var);

/// Monic gcd of two univariate polynomials; gcd(p, 0) is p made monic.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

}  // namespace lefschetz
