#include "lefschetz/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lefschetz/error.hpp"
#include "lefschetz/kernels.hpp"
#include "lefschetz/univariate.hpp"

namespace lefschetz {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

unsigned degree_of(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); }

}  // namespace

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(std::vector<std::string> variables) : vars_(std::move(variables)) {}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Polynomial p(std::move(variables));
  p.add_term(Exponent(p.vars_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::string_view name) {
  Polynomial p(std::move(variables));
  Exponent e(p.vars_.size(), 0);
  e[p.index_of(name)] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
  Polynomial p(std::move(variables));
  if (e.size() != p.vars_.size())
    throw Error(ErrorCode::VariableMismatch, "exponent length does not match variable count");
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && degree_of(terms_.begin()->first) == 0;
}

std::size_t Polynomial::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

bool Polynomial::has_variable(std::string_view name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

std::optional<unsigned> Polynomial::total_degree() const {
  if (terms_.empty()) return std::nullopt;
  return degree_of(terms_.rbegin()->first);
}

std::optional<unsigned> Polynomial::degree_in(std::string_view name) const {
  return degree_in(index_of(name));
}

std::optional<unsigned> Polynomial::degree_in(std::size_t index) const {
  if (terms_.empty()) return std::nullopt;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[index]);
  return d;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

const std::pair<const Exponent, Rational>& Polynomial::leading_term() const {
  ensure(!terms_.empty(), "leading term of the zero polynomial");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (vars_ != other.vars_)
    throw Error(ErrorCode::VariableMismatch, "polynomials over different variable lists");
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_variables(b);
  Polynomial r(a.vars_);
  Exponent e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != vars_.size())
    throw Error(ErrorCode::VariableMismatch, "evaluation point has wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool is_one = (mag == 1);
    bool wrote = false;
    if (!is_one || degree_of(e) == 0) {
      out << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) out << '*';
      out << vars_[i];
      if (e[i] > 1) out << '^' << e[i];
      wrote = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial result(vars_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) {
        if (first) fail("empty expression");
        break;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Polynomial term = parse_term();
      if (sign < 0) term = -term;
      result += term;
      first = false;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at column " + std::to_string(pos_ + 1) + " in '" + std::string(text_) + "'");
  }

  Integer parse_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial parse_factor() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      Integer num = parse_digits();
      Integer den = 1;
      if (!at_end() && peek() == '/') {
        ++pos_;
        den = parse_digits();
        if (den == 0) {
          pos_ = start;
          throw Error(ErrorCode::ZeroDenominator,
                      "zero denominator at column " + std::to_string(start + 1));
        }
      }
      return Polynomial::constant(vars_, make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        throw Error(ErrorCode::UnknownVariable,
                    "unknown variable '" + name + "' at column " + std::to_string(start + 1));
      }
      Exponent e(vars_.size(), 0);
      unsigned power = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        Integer k = parse_digits();
        if (!k.fits_uint_p()) fail("exponent too large");
        power = static_cast<unsigned>(k.get_ui());
      }
      e[static_cast<std::size_t>(it - vars_.begin())] = power;
      return Polynomial::monomial(vars_, e, 1);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  Polynomial parse_term() {
    Polynomial term = parse_factor();
    while (true) {
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      term = term * parse_factor();
    }
    return term;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

// ---------------------------------------------------------------------------
// Calculus and substitutions

Polynomial derivative(const Polynomial& p, std::string_view var) {
  const std::size_t k = p.index_of(var);
  Polynomial r(p.variables());
  for (const auto& [e, c] : p.terms()) {
    if (e[k] == 0) continue;
    Exponent d = e;
    d[k] -= 1;
    r.add_term(d, c * e[k]);
  }
  return r;
}

std::optional<unsigned> homogeneous_degree(const Polynomial& f) {
  if (f.is_zero()) return std::nullopt;
  const unsigned d = degree_of(f.terms().begin()->first);
  for (const auto& [e, c] : f.terms())
    if (degree_of(e) != d) return std::nullopt;
  return d;
}

Polynomial specialize(const Polynomial& p, std::string_view var, const Rational& value) {
  const std::size_t k = p.index_of(var);
  std::vector<std::string> rest = p.variables();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  Polynomial r(rest);
  for (const auto& [e, c] : p.terms()) {
    Rational coef = c;
    for (unsigned i = 0; i < e[k]; ++i) coef *= value;
    Exponent d = e;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
    r.add_term(d, coef);
  }
  return r;
}

Polynomial dehomogenize(const Polynomial& f, std::string_view var) {
  if (!homogeneous_degree(f))
    throw Error(ErrorCode::NotHomogeneous, "dehomogenize: input is not homogeneous");
  return specialize(f, var, 1);
}

Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (images.size() != p.variable_count())
    throw Error(ErrorCode::VariableMismatch, "compose: need one image per variable");
  if (images.empty()) return p;
  const auto& target = images.front().variables();
  for (const auto& img : images)
    if (img.variables() != target)
      throw Error(ErrorCode::VariableMismatch, "compose: images over different variables");

  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, 1));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  Polynomial result(target);
  for (const auto& [e, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    result += term;
  }
  return result;
}

Polynomial with_variables(const Polynomial& p, const std::vector<std::string>& variables) {
  std::vector<std::optional<std::size_t>> map(p.variable_count());
  for (std::size_t i = 0; i < p.variable_count(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), p.variables()[i]);
    if (it != variables.end()) map[i] = static_cast<std::size_t>(it - variables.begin());
  }
  Polynomial r(variables);
  for (const auto& [e, c] : p.terms()) {
    Exponent d(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!map[i])
        throw Error(ErrorCode::UnknownVariable,
                    "variable '" + p.variables()[i] + "' missing from target list");
      d[*map[i]] = e[i];
    }
    r.add_term(d, c);
  }
  return r;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables())
    throw Error(ErrorCode::VariableMismatch, "divide_exact: different variable lists");
  if (b.is_zero()) throw Error(ErrorCode::InexactDivision, "division by the zero polynomial");
  Polynomial quotient(a.variables());
  Polynomial remainder = a;
  const auto& [lb_e, lb_c] = b.leading_term();
  Exponent q_e(a.variable_count());
  while (!remainder.is_zero()) {
    const auto& [lr_e, lr_c] = remainder.leading_term();
    for (std::size_t i = 0; i < q_e.size(); ++i) {
      if (lr_e[i] < lb_e[i]) throw Error(ErrorCode::InexactDivision, "divide_exact: not divisible");
      q_e[i] = lr_e[i] - lb_e[i];
    }
    const Polynomial step = Polynomial::monomial(a.variables(), q_e, lr_c / lb_c);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Resultants

namespace {

// Coefficients of p in powers of var, each expressed over the other variables.
std::vector<Polynomial> coefficients_over_rest(const Polynomial& p, std::size_t k,
                                               const std::vector<std::string>& rest, unsigned deg) {
  std::vector<Polynomial> coeffs(deg + 1, Polynomial(rest));
  for (const auto& [e, c] : p.terms()) {
    Exponent d = e;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(k));
    coeffs[e[k]].add_term(d, c);
  }
  return coeffs;
}

struct SylvesterInput {
  std::vector<std::string> rest;
  kernels::PolyMatrix matrix;
};

SylvesterInput build_sylvester(const Polynomial& p, const Polynomial& q, std::string_view var) {
  if (p.variables() != q.variables())
    throw Error(ErrorCode::VariableMismatch, "resultant: different variable lists");
  const std::size_t k = p.index_of(var);
  const auto dp = p.degree_in(k);
  const auto dq = q.degree_in(k);
  if (!dp || !dq || *dp == 0 || *dq == 0)
    throw Error(ErrorCode::ConstantInVariable,
                "resultant: both inputs must have positive degree in '" + std::string(var) + "'");
  std::vector<std::string> rest = p.variables();
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
  const auto a = coefficients_over_rest(p, k, rest, *dp);
  const auto b = coefficients_over_rest(q, k, rest, *dq);
  const std::size_t m = *dp;
  const std::size_t n = *dq;
  kernels::PolyMatrix s{m + n, std::vector<Polynomial>((m + n) * (m + n), Polynomial(rest))};
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t i = 0; i <= m; ++i) s(row, row + i) = a[m - i];
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t j = 0; j <= n; ++j) s(n + row, row + j) = b[n - j];
  return {std::move(rest), std::move(s)};
}

template <typename Step>
Polynomial bareiss_determinant(kernels::PolyMatrix m, const std::vector<std::string>& vars, Step step) {
  const std::size_t n = m.n;
  bool negate = false;
  Polynomial prev = Polynomial::constant(vars, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k).is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial(vars);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    step(m, k, prev);
    prev = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

}  // namespace

std::vector<Polynomial> sylvester_matrix(const Polynomial& p, const Polynomial& q,
                                         std::string_view var) {
  return build_sylvester(p, q, var).matrix.entries;
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::string_view var) {
  auto input = build_sylvester(p, q, var);
  return bareiss_determinant(std::move(input.matrix), input.rest,
                             [](auto& m, std::size_t k, const Polynomial& prev) {
                               kernels::parallel::bareiss_step(m, k, prev);
                             });
}

Polynomial resultant_serial(const Polynomial& p, const Polynomial& q, std::string_view var) {
  auto input = build_sylvester(p, q, var);
  return bareiss_determinant(std::move(input.matrix), input.rest,
                             [](auto& m, std::size_t k, const Polynomial& prev) {
                               kernels::serial::bareiss_step(m, k, prev);
                             });
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.variables() != q.variables())
    throw Error(ErrorCode::VariableMismatch, "gcd: different variable lists");
  std::optional<std::size_t> used;
  for (const auto* poly : {&p, &q}) {
    for (const auto& [e, c] : poly->terms()) {
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (used && *used != i) throw Error(ErrorCode::NotUnivariate, "gcd: multivariate input");
        used = i;
      }
    }
  }
  if (!used) {
    // Both constant.
    if (p.is_zero() && q.is_zero()) return Polynomial(p.variables());
    return Polynomial::constant(p.variables(), 1);
  }
  const std::string var = p.variables()[*used];
  const std::vector<std::string> single{var};
  const UPoly g = gcd(to_upoly(with_variables(p, single)), to_upoly(with_variables(q, single)));
  return with_variables(to_polynomial(g, var), p.variables());
}

}  // namespace lefschetz
