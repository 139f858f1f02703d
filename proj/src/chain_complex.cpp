#include "lefschetz/chain_complex.hpp"

#include <algorithm>

#include "lefschetz/error.hpp"

namespace lefschetz {

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix IntegerMatrix::from_rows(std::size_t rows, std::size_t cols,
                                       const std::vector<std::vector<Integer>>& data) {
  // An empty row list is accepted for any shape with no entries.
  if (rows * cols == 0 && (data.empty() || (data.size() == rows && std::all_of(data.begin(), data.end(),
                                                                               [](const auto& r) { return r.empty(); })))) {
    return IntegerMatrix(rows, cols);
  }
  if (data.size() != rows)
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(rows) + " rows, got " + std::to_string(data.size()));
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (data[i].size() != cols)
      throw Error(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " has " +
                                                    std::to_string(data[i].size()) + " entries, expected " +
                                                    std::to_string(cols));
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = data[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::DimensionMismatch, "matrix product: inner dimensions differ");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

void swap_rows(IntegerMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntegerMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row_dst -= q * row_src, restricted to columns >= from.
void row_axpy(IntegerMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t j = from; j < a.cols(); ++j) a(dst, j) -= q * a(src, j);
}

void col_axpy(IntegerMatrix& a, std::size_t dst, std::size_t src, const Integer& q, std::size_t from) {
  for (std::size_t i = from; i < a.rows(); ++i) a(i, dst) -= q * a(i, src);
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix a) {
  SmithForm out;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t i = t; i < a.rows(); ++i)
      for (std::size_t j = t; j < a.cols(); ++j)
        if (a(i, j) != 0 && (!found || abs(a(i, j)) < abs(a(pi, pj)))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(a, t, pi);
    swap_cols(a, t, pj);

    while (true) {
      bool clean = true;
      Integer q;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        row_axpy(a, i, t, q, t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        col_axpy(a, j, t, q, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder survived; it is smaller than the pivot, so promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < abs(a(bi, bj))) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < abs(a(bi, bj))) {
            bi = t;
            bj = j;
          }
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }
      // Row and column are clear; the pivot must divide the trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < a.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            row_axpy(a, t, i, -1, t);
            divides = false;
            break;
          }
      if (divides) break;
    }
    out.factors.push_back(abs(a(t, t)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Chain complexes

ChainComplex::ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries)) {
  const std::size_t n = top_degree();
  if (boundaries_.size() > n)
    throw Error(ErrorCode::DimensionMismatch, "more boundary maps than degrees");
  for (std::size_t lambda = 1; lambda <= boundaries_.size(); ++lambda) {
    const auto& d = boundaries_[lambda - 1];
    if (d.rows() != ranks_[lambda - 1] || d.cols() != ranks_[lambda])
      throw Error(ErrorCode::DimensionMismatch,
                  "boundary[" + std::to_string(lambda) + "] must be " + std::to_string(ranks_[lambda - 1]) +
                      "x" + std::to_string(ranks_[lambda]) + ", got " + std::to_string(d.rows()) + "x" +
                      std::to_string(d.cols()));
  }
}

std::size_t ChainComplex::rank(std::ptrdiff_t degree) const {
  if (degree < 0 || static_cast<std::size_t>(degree) >= ranks_.size()) return 0;
  return ranks_[static_cast<std::size_t>(degree)];
}

IntegerMatrix ChainComplex::boundary(std::ptrdiff_t degree) const {
  if (degree >= 1 && static_cast<std::size_t>(degree) <= boundaries_.size())
    return boundaries_[static_cast<std::size_t>(degree) - 1];
  return IntegerMatrix(rank(degree - 1), rank(degree));
}

ComplexValidation validate(const ChainComplex& c) {
  const auto n = static_cast<std::ptrdiff_t>(c.top_degree());
  for (std::ptrdiff_t lambda = 2; lambda <= n; ++lambda) {
    if (!(c.boundary(lambda - 1) * c.boundary(lambda)).is_zero())
      return {false, static_cast<std::size_t>(lambda)};
  }
  return {};
}

std::string describe(const GroupSummary& g) {
  std::string out;
  auto append = [&](const std::string& part) {
    if (!out.empty()) out += " + ";
    out += part;
  };
  if (g.betti == 1) append("Z");
  if (g.betti > 1) append("Z^" + std::to_string(g.betti));
  for (const auto& t : g.torsion) append("Z/" + t.get_str());
  return out.empty() ? "0" : out;
}

std::vector<GroupSummary> homology(const ChainComplex& c) {
  if (const auto v = validate(c); !v.valid)
    throw Error(ErrorCode::InvalidComplex,
                "boundary of boundary is nonzero at lambda=" + std::to_string(*v.failing_degree));
  const auto n = static_cast<std::ptrdiff_t>(c.top_degree());
  if (c.ranks().empty()) return {};
  std::vector<SmithForm> snf(static_cast<std::size_t>(n) + 2);
  for (std::ptrdiff_t lambda = 1; lambda <= n; ++lambda)
    snf[static_cast<std::size_t>(lambda)] = smith_normal_form(c.boundary(lambda));

  std::vector<GroupSummary> out;
  for (std::ptrdiff_t lambda = 0; lambda <= n; ++lambda) {
    const auto k = static_cast<std::size_t>(lambda);
    GroupSummary g;
    g.degree = k;
    g.betti = c.rank(lambda) - snf[k].rank() - snf[k + 1].rank();
    for (const auto& f : snf[k + 1].factors)
      if (f > 1) g.torsion.push_back(f);
    out.push_back(std::move(g));
  }
  return out;
}

std::int64_t euler_characteristic(const ChainComplex& c) {
  std::int64_t chi = 0;
  for (std::size_t lambda = 0; lambda < c.ranks().size(); ++lambda) {
    const auto r = static_cast<std::int64_t>(c.ranks()[lambda]);
    chi += (lambda % 2 == 0) ? r : -r;
  }
  return chi;
}

ExactnessResult check_exact(const std::vector<IntegerMatrix>& maps) {
  ExactnessResult out;
  if (maps.empty()) return out;
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (maps[i].cols() != maps[i - 1].rows())
      throw Error(ErrorCode::DimensionMismatch, "map " + std::to_string(i + 1) + " does not compose with map " +
                                                    std::to_string(i));
  }
  for (std::size_t i = 1; i < maps.size(); ++i) {
    if (!(maps[i] * maps[i - 1]).is_zero())
      throw Error(ErrorCode::NonzeroComposition,
                  "composition of maps " + std::to_string(i) + " and " + std::to_string(i + 1) + " is nonzero");
  }

  const std::size_t k = maps.size();
  for (std::size_t node = 0; node <= k; ++node) {
    const std::size_t dim = node == 0 ? maps[0].cols() : maps[node - 1].rows();
    const IntegerMatrix incoming = node == 0 ? IntegerMatrix(dim, 0) : maps[node - 1];
    const IntegerMatrix outgoing = node == k ? IntegerMatrix(0, dim) : maps[node];
    const std::size_t kernel_rank = dim - smith_normal_form(outgoing).rank();
    const SmithForm image = smith_normal_form(incoming);
    const bool saturated =
        std::all_of(image.factors.begin(), image.factors.end(), [](const Integer& f) { return f == 1; });
    const bool exact = image.rank() == kernel_rank && saturated;
    out.node_exact.push_back(exact);
    if (!exact && out.exact) {
      out.exact = false;
      out.first_inexact_node = node;
    }
  }
  return out;
}

std::int64_t genus_from_cell_counts(const MorseCellCounts& counts) {
  auto reject = [](const std::string& why) -> std::int64_t {
    throw Error(ErrorCode::InvalidCellCounts, why);
  };
  if (counts.index0 < 1 || counts.index2 < 1)
    return reject("a closed connected surface needs at least one minimum and one maximum");
  if (counts.index1 < 0) return reject("negative index-1 count");
  const std::int64_t euler = counts.index0 - counts.index1 + counts.index2;
  if (euler % 2 != 0 || euler > 2)
    return reject("euler characteristic " + std::to_string(euler) + " is not that of an orientable surface");
  // H_0 = Z forces rank im ∂_1 = index0 - 1; H_2 = Z forces rank im ∂_2 = index2 - 1.
  const std::int64_t image1 = counts.index0 - 1;
  const std::int64_t image2 = counts.index2 - 1;
  const std::int64_t h1 = counts.index1 - image1 - image2;
  if (h1 < 0 || h1 % 2 != 0) return reject("rank of H_1 would be " + std::to_string(h1));
  return h1 / 2;
}

}  // namespace lefschetz
