#include "support.hpp"

#include <algorithm>
#include <numeric>

namespace lefschetz::oracle {

const std::vector<CorpusCurve>& curve_corpus() {
  static const std::vector<CorpusCurve> corpus{
      {1, "x + y + z"},
      {1, "2*x + 3*y + z"},
      {2, "x^2 + y^2 + z^2"},
      {2, "x^2 + 3*y^2 + z^2 + x*y + y*z"},
      {3, "x^3 + y^3 + z^3"},
      {3, "x^3 + y^3 + z^3 + x*y*z"},
      {3, "x^3 + 2*y^3 + 3*z^3 + x^2*y + y*z^2"},
      {3, "z^2*y + z^3 - x^3 + x*y^2 + 2*x*y*z + x*z^2"},
      {4, "x^4 + y^4 + z^4"},
      {4, "x^4 + y^4 + z^4 + x^2*y*z + x*y^3"},
      {5, "x^5 + y^5 + z^5"},
      {5, "x^5 + y^5 + z^5 + x^2*y^2*z + x*y^4 + 2*x^3*z^2"},
      {6, "x^6 + y^6 + z^6"},
      {6, "x^6 + 2*y^6 + 3*z^6 + x^5*y + y^5*z + z^5*x"},
  };
  return corpus;
}

Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_degree,
                             int terms, int coeff_bound) {
  std::uniform_int_distribution<unsigned> exp(0, max_degree);
  std::uniform_int_distribution<int> num(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> den(1, 3);
  Polynomial p(vars);
  for (int t = 0; t < terms; ++t) {
    Exponent e(vars.size());
    unsigned total = 0;
    for (auto& k : e) {
      k = total < max_degree ? exp(rng) % (max_degree - total + 1) : 0;
      total += k;
    }
    p.add_term(e, make_rational(num(rng), den(rng)));
  }
  return p;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = d(rng);
  return m;
}

Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  Unimodular out{IntegerMatrix::identity(n), IntegerMatrix::identity(n)};
  if (n < 2) return out;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> mult(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    const int k = mult(rng);
    if (i == j || k == 0) continue;
    // u <- E u with E = I + k e_i e_j^T; inverse <- inverse E^{-1}.
    for (std::size_t c = 0; c < n; ++c) out.u(i, c) += k * out.u(j, c);
    for (std::size_t r = 0; r < n; ++r) out.inverse(r, j) -= k * out.inverse(r, i);
  }
  return out;
}

namespace {

// All integer vectors in [-bound, bound]^n killed by m (m has n columns).
std::vector<std::vector<int>> kernel_vectors(const IntegerMatrix& m, int bound) {
  const std::size_t n = m.cols();
  std::vector<std::vector<int>> out;
  std::vector<int> v(n, -bound);
  while (true) {
    bool zero = true;
    for (std::size_t i = 0; i < m.rows() && zero; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
      zero = s == 0;
    }
    if (zero) out.push_back(v);
    std::size_t k = 0;
    while (k < n && v[k] == bound) v[k++] = -bound;
    if (k == n) break;
    ++v[k];
  }
  return out;
}

}  // namespace

ChainComplex random_valid_complex(std::mt19937_64& rng, std::size_t max_rank, int bound) {
  std::uniform_int_distribution<std::size_t> rank(0, max_rank);
  std::uniform_int_distribution<std::size_t> length(2, 4);
  std::vector<std::size_t> ranks(length(rng));
  for (auto& r : ranks) r = rank(rng);
  std::vector<IntegerMatrix> boundaries;
  boundaries.push_back(random_matrix(rng, ranks[0], ranks[1], -bound, bound));
  for (std::size_t lambda = 2; lambda < ranks.size(); ++lambda) {
    const IntegerMatrix& prev = boundaries.back();
    IntegerMatrix next(ranks[lambda - 1], ranks[lambda]);
    if (ranks[lambda - 1] > 0) {
      const auto kernel = kernel_vectors(prev, bound);
      std::uniform_int_distribution<std::size_t> pick(0, kernel.size() - 1);
      for (std::size_t c = 0; c < ranks[lambda]; ++c) {
        const auto& v = kernel[pick(rng)];
        for (std::size_t r = 0; r < ranks[lambda - 1]; ++r) next(r, c) = v[r];
      }
    }
    boundaries.push_back(std::move(next));
  }
  return ChainComplex(ranks, boundaries);
}

std::vector<IntegerMatrix> random_exact_sequence(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> maps_count(2, 4);
  std::uniform_int_distribution<std::size_t> rank(1, 3);
  const std::size_t k = maps_count(rng);
  // r[j] = rank of M_j (j = 1..k); node j = im M_j ⊕ complement of rank r[j+1].
  std::vector<std::size_t> r(k + 2, 0);
  for (std::size_t j = 1; j <= k; ++j) r[j] = rank(rng);
  std::vector<std::size_t> n(k + 1);
  for (std::size_t j = 0; j <= k; ++j) n[j] = r[j] + r[j + 1];

  std::vector<Unimodular> u;
  for (std::size_t j = 0; j <= k; ++j) u.push_back(random_unimodular(rng, n[j], 12));

  std::vector<IntegerMatrix> maps;
  for (std::size_t j = 1; j <= k; ++j) {
    // Sends the complement block of node j-1 onto the image block of node j.
    IntegerMatrix e(n[j], n[j - 1]);
    for (std::size_t i = 0; i < r[j]; ++i) e(i, r[j - 1] + i) = 1;
    maps.push_back(u[j].u * e * u[j - 1].inverse);
  }
  return maps;
}

// ---- oracles ----------------------------------------------------------------

std::size_t rational_rank(const IntegerMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const Rational f = a[i][col] / a[rank][col];
      for (std::size_t j = col; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

namespace {

Integer det_by_cofactors(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Integer> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(a[i][j]);
      minor.push_back(std::move(row));
    }
    const Integer term = a[0][c] * det_by_cofactors(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

Integer minor_gcd(const IntegerMatrix& m, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), k, 0, cur, rows);
  subsets(m.cols(), k, 0, cur, cols);
  Integer g = 0;
  for (const auto& rs : rows)
    for (const auto& cs : cols) {
      std::vector<std::vector<Integer>> a(k, std::vector<Integer>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = m(rs[i], cs[j]);
      const Integer d = det_by_cofactors(a);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

}  // namespace

std::vector<Integer> determinantal_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    const Integer dk = minor_gcd(m, k);
    if (dk == 0) break;
    out.push_back(dk / prev);
    prev = dk;
  }
  return out;
}

std::vector<GroupSummary> homology_oracle(const ChainComplex& c) {
  std::vector<GroupSummary> out;
  const auto& ranks = c.ranks();
  for (std::size_t lambda = 0; lambda < ranks.size(); ++lambda) {
    const auto d = static_cast<std::ptrdiff_t>(lambda);
    GroupSummary g;
    g.degree = lambda;
    g.betti = ranks[lambda] - rational_rank(c.boundary(d)) - rational_rank(c.boundary(d + 1));
    for (const auto& f : determinantal_factors(c.boundary(d + 1)))
      if (f > 1) g.torsion.push_back(f);
    out.push_back(std::move(g));
  }
  return out;
}

bool exact_oracle(const std::vector<IntegerMatrix>& maps) {
  // Node j sits between maps[j-1] (incoming) and maps[j] (outgoing).
  for (std::size_t node = 0; node <= maps.size(); ++node) {
    const std::size_t dim = node == 0 ? maps.front().cols() : maps[node - 1].rows();
    const std::size_t in_rank = node == 0 ? 0 : rational_rank(maps[node - 1]);
    const std::size_t out_rank = node == maps.size() ? 0 : rational_rank(maps[node]);
    if (in_rank + out_rank != dim) return false;
    if (node > 0 && in_rank > 0 && minor_gcd(maps[node - 1], in_rank) != 1) return false;
  }
  return true;
}

Polynomial resultant_from_roots(const std::vector<Polynomial>& roots_in_x, const Polynomial& q) {
  // q over [x, z]; each root is over [x].
  Polynomial out = Polynomial::constant({"x"}, 1);
  for (const auto& a : roots_in_x) {
    const Polynomial x = Polynomial::variable({"x"}, "x");
    out = out * compose(q, {x, a});
  }
  return out;
}

}  // namespace lefschetz::oracle
