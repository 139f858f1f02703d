#include "lefschetz/univariate.hpp"

#include <algorithm>

#include "lefschetz/error.hpp"

namespace lefschetz {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::constant(const Rational& c) { return UPoly({c}); }

UPoly UPoly::x() { return UPoly({Rational(0), Rational(1)}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t UPoly::degree() const {
  ensure(!c_.empty(), "degree of the zero polynomial");
  return c_.size() - 1;
}

const Rational& UPoly::lc() const {
  ensure(!c_.empty(), "leading coefficient of the zero polynomial");
  return c_.back();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(const UPoly& a, const Rational& s) {
  if (s == 0) return UPoly();
  UPoly r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::complex<double> UPoly::evaluate(std::complex<double> at) const {
  std::complex<double> acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::InvalidArgument, "polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = b.degree();
  std::vector<Rational> q(a.degree() - db + 1);
  const Rational inv_lc = 1 / b.lc();
  for (std::size_t i = r.size(); i-- > db;) {
    if (r[i] == 0) continue;
    const Rational factor = r[i] * inv_lc;
    q[i - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= factor * bc[j];
  }
  r.resize(db);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly rem(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

UPoly monic(const UPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lc());
}

UPoly derivative(const UPoly& p) {
  if (p.coeffs().size() <= 1) return UPoly();
  std::vector<Rational> d(p.coeffs().size() - 1);
  for (std::size_t i = 1; i < p.coeffs().size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
  return UPoly(std::move(d));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  UPoly r0 = m, r1 = rem(a, m);
  UPoly s0, s1 = UPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.is_zero() || r0.degree() != 0)
    throw Error(ErrorCode::InvalidArgument, "inverse_mod: not invertible");
  return rem(s0 * (1 / r0.lc()), m);
}

UPoly squarefree_part(const UPoly& p) {
  if (p.is_zero()) return p;
  const UPoly g = gcd(p, derivative(p));
  return monic(divmod(p, g).first);
}

bool is_squarefree(const UPoly& p) {
  if (p.is_zero()) return false;
  return gcd(p, derivative(p)).degree() == 0;
}

UPoly to_upoly(const Polynomial& p) {
  if (p.variable_count() > 1) {
    std::optional<std::size_t> used;
    for (const auto& [e, c] : p.terms())
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) {
          if (used && *used != i) throw Error(ErrorCode::NotUnivariate, "expected a univariate polynomial");
          used = i;
        }
    if (!used) return p.is_zero() ? UPoly() : UPoly::constant(p.terms().begin()->second);
    return to_upoly(with_variables(p, {p.variables()[*used]}));
  }
  if (p.is_zero()) return UPoly();
  std::vector<Rational> c(p.total_degree().value() + 1);
  for (const auto& [e, coef] : p.terms()) c[e.empty() ? 0 : e[0]] = coef;
  return UPoly(std::move(c));
}

Polynomial to_polynomial(const UPoly& p, std::string_view var) {
  Polynomial r({std::string(var)});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) r.add_term({static_cast<unsigned>(i)}, p[i]);
  return r;
}

std::vector<UPoly> coefficients_in(const Polynomial& p, std::string_view var) {
  if (p.variable_count() > 2) throw Error(ErrorCode::NotUnivariate, "coefficients_in: more than two variables");
  const std::size_t k = p.index_of(var);
  const std::size_t other = p.variable_count() == 2 ? 1 - k : k;
  if (p.is_zero()) return {};
  const unsigned deg = p.degree_in(k).value();
  std::vector<std::vector<Rational>> dense(deg + 1);
  for (const auto& [e, c] : p.terms()) {
    const unsigned o = p.variable_count() == 2 ? e[other] : 0;
    auto& row = dense[e[k]];
    if (row.size() <= o) row.resize(o + 1);
    row[o] = c;
  }
  std::vector<UPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

std::string to_string(const UPoly& p, std::string_view var) { return to_polynomial(p, var).to_string(); }

}  // namespace lefschetz
