#include "lefschetz/curve_pencil.hpp"

#include <random>
#include <sstream>

#include "lefschetz/elimination.hpp"
#include "lefschetz/univariate.hpp"

namespace lefschetz {

const std::vector<std::string>& projective_variables() {
  static const std::vector<std::string> vars{"x", "y", "z"};
  return vars;
}

HomogeneousCurve::HomogeneousCurve(Polynomial f) : f_(std::move(f)) {
  if (f_.variables() != projective_variables())
    throw Error(ErrorCode::VariableMismatch, "curve polynomial must be over [x, y, z]");
  const auto d = homogeneous_degree(f_);
  if (!d) throw Error(ErrorCode::NotHomogeneous, "curve polynomial is zero or not homogeneous");
  if (*d == 0) throw Error(ErrorCode::NotHomogeneous, "curve polynomial is a nonzero constant");
  degree_ = *d;
}

HomogeneousCurve HomogeneousCurve::parse(std::string_view text) {
  return HomogeneousCurve(lefschetz::parse(text, projective_variables()));
}

HomogeneousCurve apply_linear_change(const HomogeneousCurve& curve, const LinearChange& m) {
  const auto& vars = projective_variables();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial form(vars);
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent e(3, 0);
      e[j] = 1;
      form.add_term(e, Rational(m[i][j]));
    }
    images.push_back(std::move(form));
  }
  return HomogeneousCurve(compose(curve.polynomial(), images));
}

std::string describe_linear_change(const LinearChange& m) {
  const auto& vars = projective_variables();
  std::ostringstream out;
  for (std::size_t i = 0; i < 3; ++i) {
    Polynomial form(vars);
    for (std::size_t j = 0; j < 3; ++j) {
      Exponent e(3, 0);
      e[j] = 1;
      form.add_term(e, Rational(m[i][j]));
    }
    if (i > 0) out << ", ";
    out << vars[i] << " -> " << form.to_string();
  }
  return out.str();
}

// ---------------------------------------------------------------------------

SmoothnessCheck check_smooth(const HomogeneousCurve& curve) {
  const Polynomial& f = curve.polynomial();
  const std::vector<Polynomial> gradient{derivative(f, "x"), derivative(f, "y"), derivative(f, "z")};

  // By Euler's identity d·f = x f_x + y f_y + z f_z, a common zero of the
  // gradient already lies on the curve.
  std::vector<Polynomial> chart;
  for (const auto& g : gradient) chart.push_back(specialize(g, "z", 1));
  if (auto zero = find_common_zero(chart)) return {false, "z=1", zero->kind, zero->certificate};

  UPoly line_gcd;
  for (const auto& g : gradient) line_gcd = gcd(line_gcd, to_upoly(specialize(specialize(g, "z", 0), "y", 1)));
  if (line_gcd.is_zero() || line_gcd.degree() > 0)
    return {false, "z=0,y=1", line_gcd.is_zero() ? "identically zero" : "eliminant", to_polynomial(line_gcd, "x")};

  const std::vector<Rational> point{1, 0, 0};
  bool all_zero = true;
  for (const auto& g : gradient) all_zero = all_zero && g.evaluate(point) == 0;
  if (all_zero) return {false, "(1:0:0)", "point", std::nullopt};
  return {};
}

bool check_axis_admissible(const HomogeneousCurve& curve) {
  const std::vector<Rational> axis{0, 0, 1};
  return curve.polynomial().evaluate(axis) != 0;
}

LinearChange suggest_coordinate_change(const HomogeneousCurve& curve, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LinearChange m{};
    for (std::size_t i = 0; i < 3; ++i) m[i][i] = 1;
    // Products of elementary row operations stay unimodular.
    for (int step = 0; step < 4; ++step) {
      const auto i = static_cast<std::size_t>(pick(rng));
      const auto j = static_cast<std::size_t>(pick(rng));
      const int k = mult(rng);
      if (i == j || k == 0) continue;
      for (std::size_t c = 0; c < 3; ++c) m[i][c] += k * m[j][c];
    }
    const std::vector<Rational> image{Rational(m[0][2]), Rational(m[1][2]), Rational(m[2][2])};
    if (curve.polynomial().evaluate(image) != 0) return m;
  }
  throw Error(ErrorCode::InvariantBreach, "no admissible coordinate change found");
}

// ---------------------------------------------------------------------------

namespace {

void require_preconditions(const HomogeneousCurve& curve) {
  const auto smooth = check_smooth(curve);
  if (!smooth.smooth)
    throw Error(ErrorCode::NotSmooth, "curve is singular (common gradient zero on " + smooth.patch + ")");
  if (!check_axis_admissible(curve))
    throw Error(ErrorCode::AxisOnCurve, "axis (0:0:1) lies on the curve; suggested change: " +
                                            describe_linear_change(suggest_coordinate_change(curve, 0)));
}

Polynomial affine_part(const HomogeneousCurve& curve) { return dehomogenize(curve.polynomial(), "y"); }

CriticalPointSet compute_critical(const HomogeneousCurve& curve, const RootOptions& options) {
  const Polynomial F = affine_part(curve);
  const Polynomial Fz = derivative(F, "z");
  const unsigned dz = F.degree_in("z").value();
  CriticalPointSet out;
  if (Fz.degree_in("z").value_or(0) == 0) {
    // Res(p, c) = c^deg p for c free of z.
    out.resultant = with_variables(Fz, {"x"}).pow(dz);
  } else {
    out.resultant = resultant(F, Fz, "z");
  }
  const UPoly R = to_upoly(out.resultant);
  ensure(!R.is_zero(), "Res_z(F, dF/dz) vanished on a smooth curve");
  const std::int64_t d = curve.degree();
  out.count_with_multiplicity = static_cast<std::int64_t>(R.degree());
  out.multiplicity_at_infinity = d * (d - 1) - out.count_with_multiplicity;
  out.squarefree = is_squarefree(R);
  if (R.degree() > 0) {
    const auto refined = refine_roots(squarefree_part(R), options);
    out.distinct_x_values = refined.roots;
    out.residuals = refined.residuals;
    out.converged = refined.converged;
    out.iterations = refined.iterations;
  }
  return out;
}

LefschetzCheck compute_lefschetz(const HomogeneousCurve& curve, const CriticalPointSet& crit) {
  LefschetzCheck out;
  const UPoly R = to_upoly(crit.resultant);
  out.resultant_squarefree = crit.squarefree;
  out.fibres_quadratic = true;

  if (crit.multiplicity_at_infinity > 1) {
    out.resultant_squarefree = false;
    out.fibres_quadratic = false;
    out.reason = "fibre over (1:0) has multiplicity " + std::to_string(crit.multiplicity_at_infinity);
  } else if (crit.multiplicity_at_infinity == 1) {
    const Polynomial at_infinity = specialize(specialize(curve.polynomial(), "y", 0), "x", 1);
    const UPoly g = to_upoly(at_infinity);
    if (gcd(g, derivative(g)).degree() != 1) {
      out.fibres_quadratic = false;
      out.reason = "fibre over (1:0) is not a simple tangency";
    }
  }

  if (R.degree() > 0) {
    const Polynomial F = affine_part(curve);
    const std::vector<FibrePoly> system{coefficients_in(F, "z"), coefficients_in(derivative(F, "z"), "z")};
    for (const auto& branch : fibre_gcd(squarefree_part(R), system)) {
      if (branch.vanishes_identically() || branch.degree() != 1) {
        out.fibres_quadratic = false;
        if (out.reason.empty())
          out.reason = "fibres over roots of " + to_string(branch.modulus, "x") + " have " +
                       (branch.vanishes_identically() ? "a non-reduced" : std::to_string(branch.degree()) + " repeated") +
                       " root(s)";
      }
    }
  }
  if (!out.resultant_squarefree && out.reason.empty()) out.reason = "Res_z(F, dF/dz) is not squarefree";
  out.lefschetz = out.resultant_squarefree && out.fibres_quadratic;
  return out;
}

MorseCellCounts compute_counts(const HomogeneousCurve& curve, const CriticalPointSet& crit) {
  const Polynomial F = affine_part(curve);
  const UPoly R = to_upoly(crit.resultant);
  std::vector<std::int64_t> fibre_sizes;
  for (long k = 0; fibre_sizes.size() < 2; ++k) {
    // 0, 1, -1, 2, -2, ...
    const Rational x0 = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (R.evaluate(x0) == 0) continue;
    const UPoly fibre = to_upoly(specialize(F, "x", x0));
    fibre_sizes.push_back(static_cast<std::int64_t>(squarefree_part(fibre).degree()));
  }
  MorseCellCounts counts;
  counts.index0 = fibre_sizes[0];
  counts.index2 = fibre_sizes[1];
  counts.index1 = crit.count_with_multiplicity + crit.multiplicity_at_infinity;
  const std::int64_t d = curve.degree();
  ensure(counts.index0 == d && counts.index2 == d, "regular fibre does not have d points");
  return counts;
}

std::int64_t closed_form_genus(std::int64_t d) { return (d - 1) * (d - 2) / 2; }

std::int64_t checked_genus(const HomogeneousCurve& curve, const MorseCellCounts& counts) {
  const std::int64_t g = closed_form_genus(curve.degree());
  ensure(2 - 2 * g == counts.index0 - counts.index1 + counts.index2,
         "euler characteristic from cell counts disagrees with the genus formula");
  ensure(genus_from_cell_counts(counts) == g, "homology rank chase disagrees with the genus formula");
  return g;
}

}  // namespace

CriticalPointSet critical_locus(const HomogeneousCurve& curve, const RootOptions& options) {
  require_preconditions(curve);
  return compute_critical(curve, options);
}

LefschetzCheck lefschetz_check(const HomogeneousCurve& curve) {
  require_preconditions(curve);
  return compute_lefschetz(curve, compute_critical(curve, {}));
}

bool is_lefschetz(const HomogeneousCurve& curve) { return lefschetz_check(curve).lefschetz; }

MorseCellCounts morse_cell_counts(const HomogeneousCurve& curve) {
  require_preconditions(curve);
  return compute_counts(curve, compute_critical(curve, {}));
}

std::int64_t genus(const HomogeneousCurve& curve) {
  require_preconditions(curve);
  return checked_genus(curve, compute_counts(curve, compute_critical(curve, {})));
}

std::int64_t euler(const HomogeneousCurve& curve) { return 2 - 2 * genus(curve); }

TopologyReport analyze(const HomogeneousCurve& curve, const AnalysisOptions& options) {
  TopologyReport report;
  report.degree = curve.degree();
  report.smoothness = check_smooth(curve);
  if (!report.smoothness.smooth) {
    report.failure = ErrorCode::NotSmooth;
    return report;
  }
  report.axis_admissible = check_axis_admissible(curve);
  if (!*report.axis_admissible) {
    report.suggested_change = suggest_coordinate_change(curve, options.seed);
    report.failure = ErrorCode::AxisOnCurve;
    return report;
  }
  report.critical = compute_critical(curve, options.roots);
  report.lefschetz = compute_lefschetz(curve, *report.critical);
  report.cell_counts = compute_counts(curve, *report.critical);
  report.genus = checked_genus(curve, *report.cell_counts);
  report.euler = 2 - 2 * *report.genus;

  if (report.critical->multiplicity_at_infinity > 0)
    report.warnings.push_back("pencil has a critical fibre over (1:0) of multiplicity " +
                              std::to_string(report.critical->multiplicity_at_infinity));
  if (!report.lefschetz->lefschetz)
    report.warnings.push_back("pencil is not Lefschetz (" + report.lefschetz->reason +
                              "); index-1 cells are counted with multiplicity");
  if (!report.critical->converged)
    report.warnings.push_back("root refinement stopped before reaching the residual tolerance");
  return report;
}

}  // namespace lefschetz
