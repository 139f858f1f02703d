#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lefschetz/chain_complex.hpp"
#include "lefschetz/error.hpp"
#include "lefschetz/polynomial.hpp"
#include "lefschetz/roots.hpp"

namespace lefschetz {

/// A plane projective curve V(f), f homogeneous in (x, y, z).
///
/// The pencil studied here is projection from the axis p = (0:0:1), i.e.
/// (x:y:z) -> (x:y). Its fibres are the lines through p.
class HomogeneousCurve {
 public:
  // Throws VariableMismatch unless f is over exactly [x, y, z], and
  // NotHomogeneous for zero or inhomogeneous f.
  explicit HomogeneousCurve(Polynomial f);
  static HomogeneousCurve parse(std::string_view text);

  const Polynomial& polynomial() const { return f_; }
  unsigned degree() const { return degree_; }
  std::string to_string() const { return f_.to_string(); }

 private:
  Polynomial f_;
  unsigned degree_ = 0;
};

const std::vector<std::string>& projective_variables();

using LinearChange = std::array<std::array<Integer, 3>, 3>;

// f'(v) = f(M v): substitutes each old coordinate by a row of M.
HomogeneousCurve apply_linear_change(const HomogeneousCurve& curve, const LinearChange& m);
// "x -> x + 2*z, y -> y, z -> z"
std::string describe_linear_change(const LinearChange& m);

struct SmoothnessCheck {
  bool smooth = true;
  // When singular: where the common zero of the gradient was found
  // ("z=1", "z=0,y=1" or "(1:0:0)") and the polynomial certifying it.
  std::string patch;
  std::string certificate_kind;
  std::optional<Polynomial> certificate;
};

// Exact: gradient common zeros are decided on the chart z=1, the line z=0
// (chart y=1) and the point (1:0:0), which together cover P^2.
SmoothnessCheck check_smooth(const HomogeneousCurve& curve);

// f(0,0,1) != 0, i.e. the axis does not lie on the curve.
bool check_axis_admissible(const HomogeneousCurve& curve);

// Deterministic (given `seed`) unimodular change of coordinates that moves
// the curve off the axis.
LinearChange suggest_coordinate_change(const HomogeneousCurve& curve, std::uint64_t seed);

struct CriticalPointSet {
  // R(x) = Res_z(F, dF/dz) with F(x, z) = f(x, 1, z).
  Polynomial resultant;
  std::int64_t count_with_multiplicity = 0;  // deg_x R
  // d(d-1) - deg_x R: multiplicity of the fibre over (1:0), which the affine
  // chart y=1 cannot see.
  std::int64_t multiplicity_at_infinity = 0;
  bool squarefree = false;
  // Roots of the squarefree part of R, sorted by (real, imaginary).
  std::vector<std::complex<double>> distinct_x_values;
  std::vector<double> residuals;
  bool converged = true;
  int iterations = 0;
};

// Throws NotSmooth or AxisOnCurve when the preconditions fail.
CriticalPointSet critical_locus(const HomogeneousCurve& curve, const RootOptions& options = {});

struct LefschetzCheck {
  bool lefschetz = false;
  bool resultant_squarefree = false;
  // Every critical fibre has exactly one repeated root, of multiplicity 2.
  bool fibres_quadratic = false;
  std::string reason;
};

LefschetzCheck lefschetz_check(const HomogeneousCurve& curve);
bool is_lefschetz(const HomogeneousCurve& curve);

// index0 / index2: points in regular fibres over two rational values; index1:
// pencil critical points counted with multiplicity.
MorseCellCounts morse_cell_counts(const HomogeneousCurve& curve);

std::int64_t genus(const HomogeneousCurve& curve);
std::int64_t euler(const HomogeneousCurve& curve);

struct AnalysisOptions {
  RootOptions roots;
  std::uint64_t seed = 0;
};

/// Aggregated pipeline. Fields past the first failed precondition stay empty;
/// `failure` names it.
struct TopologyReport {
  unsigned degree = 0;
  SmoothnessCheck smoothness;
  std::optional<bool> axis_admissible;
  std::optional<LinearChange> suggested_change;
  std::optional<CriticalPointSet> critical;
  std::optional<LefschetzCheck> lefschetz;
  std::optional<MorseCellCounts> cell_counts;
  std::optional<std::int64_t> genus;
  std::optional<std::int64_t> euler;
  std::optional<ErrorCode> failure;
  std::vector<std::string> warnings;
};

TopologyReport analyze(const HomogeneousCurve& curve, const AnalysisOptions& options = {});

}  // namespace lefschetz
