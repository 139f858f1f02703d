#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/polynomial.hpp"

namespace lefschetz {

// Dense integer matrix with arbitrary-precision entries. Shapes with a zero
// dimension are legal and mean the zero map between the given ranks.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols);
  // Throws DimensionMismatch if rows are ragged or disagree with `cols`.
  static IntegerMatrix from_rows(std::size_t rows, std::size_t cols,
                                 const std::vector<std::vector<Integer>>& data);
  static IntegerMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_zero() const;
  IntegerMatrix transpose() const;
  bool operator==(const IntegerMatrix& other) const = default;

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

// Invariant factors d_1 | d_2 | ... | d_k (all >= 1); rank = k.
struct SmithForm {
  std::vector<Integer> factors;
  std::size_t rank() const { return factors.size(); }
};

SmithForm smith_normal_form(IntegerMatrix m);

/// Finite chain complex 0 -> C_n -> ... -> C_0 -> 0 of free abelian groups.
/// boundary(λ) maps C_λ to C_{λ-1}; out-of-range boundaries are zero maps.
class ChainComplex {
 public:
  ChainComplex() = default;
  // boundaries[λ-1] is ∂_λ, λ = 1..n. Missing trailing boundaries are zero.
  // Throws DimensionMismatch unless ∂_λ is r_{λ-1} x r_λ.
  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries);

  const std::vector<std::size_t>& ranks() const { return ranks_; }
  std::size_t top_degree() const { return ranks_.empty() ? 0 : ranks_.size() - 1; }
  std::size_t rank(std::ptrdiff_t degree) const;
  IntegerMatrix boundary(std::ptrdiff_t degree) const;

 private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> boundaries_;
};

struct ComplexValidation {
  bool valid = true;
  std::optional<std::size_t> failing_degree;  // first λ with ∂_{λ-1} ∂_λ != 0
};

ComplexValidation validate(const ChainComplex& c);

struct GroupSummary {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool operator==(const GroupSummary&) const = default;
};

// "Z^2 + Z/2", "Z", "0".
std::string describe(const GroupSummary& g);

// Throws InvalidComplex when ∂∂ != 0.
std::vector<GroupSummary> homology(const ChainComplex& c);

std::int64_t euler_characteristic(const ChainComplex& c);

struct ExactnessResult {
  bool exact = true;
  std::optional<std::size_t> first_inexact_node;
  std::vector<bool> node_exact;  // one flag per node Z^{n_0}, ..., Z^{n_k}
};

/// Exactness of 0 -> Z^{n_0} -M_1-> Z^{n_1} -> ... -M_k-> Z^{n_k} -> 0, maps
/// acting on column vectors (M_i is n_i x n_{i-1}). Exact at a node means the
/// image of the incoming map equals the kernel of the outgoing one as
/// lattices, not merely in rank.
/// Throws DimensionMismatch or NonzeroComposition.
ExactnessResult check_exact(const std::vector<IntegerMatrix>& maps);

struct MorseCellCounts {
  std::int64_t index0 = 0;
  std::int64_t index1 = 0;
  std::int64_t index2 = 0;

  bool operator==(const MorseCellCounts&) const = default;
};

// Genus of a closed connected orientable surface with a Morse function
// having these critical point counts, via H_0 = H_2 = Z and the rank chase
// through the Morse complex. Throws InvalidCellCounts.
std::int64_t genus_from_cell_counts(const MorseCellCounts& counts);

}  // namespace lefschetz
