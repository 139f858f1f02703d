#include "lefschetz/elimination.hpp"

#include <algorithm>

#include "lefschetz/error.hpp"

namespace lefschetz {

namespace {

void trim(FibrePoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

FibrePoly reduce(const UPoly& m, const FibrePoly& p) {
  FibrePoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(rem(c, m));
  trim(r);
  return r;
}

// Splits `m` until the leading coefficient of p is a unit modulo each piece
// (or p reduces to zero there).
void split_on_leading(const UPoly& m, FibrePoly p, std::vector<FibreBranch>& out) {
  p = reduce(m, p);
  if (p.empty()) {
    out.push_back({m, {}});
    return;
  }
  const UPoly g = gcd(p.back(), m);
  if (g.degree() == 0) {
    out.push_back({m, std::move(p)});
    return;
  }
  // lc vanishes on the roots of g and nowhere else.
  const UPoly cofactor = monic(divmod(m, g).first);
  FibrePoly lower(p.begin(), p.end() - 1);
  split_on_leading(g, std::move(lower), out);
  if (cofactor.degree() > 0) split_on_leading(cofactor, std::move(p), out);
}

FibrePoly make_monic(const UPoly& m, FibrePoly p) {
  if (p.empty()) return p;
  const UPoly inv = inverse_mod(p.back(), m);
  for (auto& c : p) c = rem(c * inv, m);
  return p;
}

// a mod b in (Q[u]/m)[v]; lc(b) must be a unit modulo m.
FibrePoly remainder(const UPoly& m, FibrePoly a, const FibrePoly& b) {
  const UPoly inv = inverse_mod(b.back(), m);
  a = reduce(m, a);
  while (!a.empty() && a.size() >= b.size()) {
    const UPoly factor = rem(a.back() * inv, m);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = rem(a[shift + i] - factor * b[i], m);
    trim(a);
  }
  return a;
}

void gcd_branches(const UPoly& m, const FibrePoly& a, const FibrePoly& b, std::vector<FibreBranch>& out) {
  std::vector<FibreBranch> split;
  split_on_leading(m, b, split);
  for (auto& [mb, bb] : split) {
    if (bb.empty()) {
      std::vector<FibreBranch> tail;
      split_on_leading(mb, a, tail);
      for (auto& [ma, aa] : tail) out.push_back({ma, make_monic(ma, std::move(aa))});
      continue;
    }
    FibrePoly r = remainder(mb, a, bb);
    gcd_branches(mb, bb, r, out);
  }
}

// ---- Q[u][v] arithmetic for the bivariate gcd --------------------------------

UPoly content(const FibrePoly& p) {
  UPoly g;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

FibrePoly primitive_part(const FibrePoly& p) {
  const UPoly c = content(p);
  FibrePoly r;
  r.reserve(p.size());
  for (const auto& coef : p) r.push_back(divmod(coef, c).first);
  return r;
}

FibrePoly pseudo_remainder(FibrePoly a, const FibrePoly& b) {
  while (!a.empty() && a.size() >= b.size()) {
    const UPoly la = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& c : a) c = c * b.back();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = a[shift + i] - la * b[i];
    trim(a);
  }
  return a;
}

FibrePoly as_fibre(const Polynomial& p) { return coefficients_in(p, p.variables()[1]); }

Polynomial from_fibre(const FibrePoly& p, const std::vector<std::string>& vars) {
  Polynomial r(vars);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p[i].coeffs().size(); ++j)
      r.add_term({static_cast<unsigned>(j), static_cast<unsigned>(i)}, p[i][j]);
  return r;
}

}  // namespace

std::vector<FibreBranch> fibre_gcd(const UPoly& modulus, const std::vector<FibrePoly>& polys) {
  ensure(!modulus.is_zero() && modulus.degree() > 0, "fibre_gcd needs a nonconstant modulus");
  std::vector<FibreBranch> branches;
  if (polys.empty()) return {{monic(modulus), {}}};
  split_on_leading(monic(modulus), polys.front(), branches);
  for (auto& b : branches) b.gcd = make_monic(b.modulus, std::move(b.gcd));
  for (std::size_t k = 1; k < polys.size(); ++k) {
    std::vector<FibreBranch> next;
    for (const auto& b : branches) gcd_branches(b.modulus, b.gcd, polys[k], next);
    branches = std::move(next);
  }
  return branches;
}

Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables() || a.variable_count() != 2)
    throw Error(ErrorCode::VariableMismatch, "bivariate_gcd expects two polynomials over the same two variables");
  const auto& vars = a.variables();
  if (a.is_zero() && b.is_zero()) return Polynomial(vars);
  FibrePoly x = as_fibre(a);
  FibrePoly y = as_fibre(b);
  UPoly c;
  if (x.empty()) {
    c = content(y);
    y = primitive_part(y);
    std::swap(x, y);
  } else if (y.empty()) {
    c = content(x);
    x = primitive_part(x);
  } else {
    c = gcd(content(x), content(y));
    x = primitive_part(x);
    y = primitive_part(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      if (y.size() == 1) {
        // Primitive and free of v: a unit.
        x = {UPoly::constant(1)};
        break;
      }
      FibrePoly r = pseudo_remainder(x, y);
      x = std::move(y);
      y = r.empty() ? r : primitive_part(r);
    }
  }
  for (auto& coef : x) coef = coef * c;
  Polynomial g = from_fibre(x, vars);
  const Rational scale = 1 / g.leading_term().second;
  return g * scale;
}

std::optional<CommonZero> find_common_zero(const std::vector<Polynomial>& system) {
  std::vector<Polynomial> sys;
  for (const auto& p : system)
    if (!p.is_zero()) sys.push_back(p);
  if (sys.empty()) {
    return CommonZero{system.empty() ? Polynomial() : Polynomial(system.front().variables()), "identically zero"};
  }
  for (const auto& p : sys)
    if (p.is_constant()) return std::nullopt;
  if (sys.size() == 1) return CommonZero{sys.front(), "common factor"};
  std::stable_sort(sys.begin(), sys.end(), [](const Polynomial& p, const Polynomial& q) {
    return *p.total_degree() < *q.total_degree();
  });

  const auto& vars = sys.front().variables();
  const Polynomial& g1 = sys[0];
  const Polynomial& g2 = sys[1];
  const Polynomial common = bivariate_gcd(g1, g2);
  if (!common.is_constant()) {
    // V(g1, g2) = V(common) ∪ V(g1/common, g2/common).
    std::vector<Polynomial> on_factor{common};
    std::vector<Polynomial> off_factor{divide_exact(g1, common), divide_exact(g2, common)};
    for (std::size_t i = 2; i < sys.size(); ++i) {
      on_factor.push_back(sys[i]);
      off_factor.push_back(sys[i]);
    }
    if (auto z = find_common_zero(on_factor)) return z;
    return find_common_zero(off_factor);
  }

  // g1, g2 coprime: their common zeros project onto the roots of an
  // eliminant in the first variable.
  const std::string& v = vars[1];
  const unsigned d1 = *g1.degree_in(v);
  const unsigned d2 = *g2.degree_in(v);
  UPoly eliminant;
  if (d1 == 0 && d2 == 0) {
    eliminant = gcd(to_upoly(g1), to_upoly(g2));
  } else if (d1 == 0) {
    eliminant = to_upoly(g1);
  } else if (d2 == 0) {
    eliminant = to_upoly(g2);
  } else {
    eliminant = to_upoly(resultant(g1, g2, v));
  }
  ensure(!eliminant.is_zero(), "eliminant of coprime polynomials vanished");
  if (eliminant.degree() == 0) return std::nullopt;

  std::vector<FibrePoly> fibres;
  fibres.reserve(sys.size());
  for (const auto& p : sys) fibres.push_back(as_fibre(p));
  for (const auto& branch : fibre_gcd(squarefree_part(eliminant), fibres)) {
    if (branch.vanishes_identically() || branch.degree() > 0)
      return CommonZero{with_variables(to_polynomial(branch.modulus, vars[0]), vars), "eliminant"};
  }
  return std::nullopt;
}

}  // namespace lefschetz
