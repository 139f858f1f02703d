#pragma once

// Generators and independent oracles shared by the unit tests and the
// acceptance binary. Nothing here calls the library routine it checks.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lefschetz/chain_complex.hpp"
#include "lefschetz/polynomial.hpp"

namespace lefschetz::oracle {

struct CorpusCurve {
  unsigned degree;
  std::string text;
};

// Smooth curves with the axis (0:0:1) off the curve and no critical fibre
// over (1:0), degrees 1..6, Fermat curves included.
const std::vector<CorpusCurve>& curve_corpus();

Polynomial random_polynomial(std::mt19937_64& rng, const std::vector<std::string>& vars, unsigned max_degree,
                             int terms, int coeff_bound = 5);

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int lo, int hi);

struct Unimodular {
  IntegerMatrix u;
  IntegerMatrix inverse;
};
// Product of `steps` elementary operations with multipliers in [-2, 2].
Unimodular random_unimodular(std::mt19937_64& rng, std::size_t n, int steps);

// ranks <= max_rank, boundary entries in [-bound, bound], with d∘d = 0 by
// construction (columns of each boundary drawn from the kernel of the next).
ChainComplex random_valid_complex(std::mt19937_64& rng, std::size_t max_rank, int bound);

// 0 -> Z^{n_0} -> ... -> Z^{n_k} -> 0 exact by construction, k >= 2, every
// map nonzero.
std::vector<IntegerMatrix> random_exact_sequence(std::mt19937_64& rng);

// ---- oracles ----------------------------------------------------------------

// Rank over Q by fraction-field row reduction.
std::size_t rational_rank(const IntegerMatrix& m);
// d_k = D_k / D_{k-1} with D_k the gcd of all k x k minors (cofactor
// expansion); only for small matrices.
std::vector<Integer> determinantal_factors(const IntegerMatrix& m);
// Betti numbers by rational rank, torsion by determinantal divisors.
std::vector<GroupSummary> homology_oracle(const ChainComplex& c);
// Exactness through ranks and saturation (gcd of maximal minors = 1).
// Precondition: consecutive compositions vanish.
bool exact_oracle(const std::vector<IntegerMatrix>& maps);

// Res_z(p, q) for monic p = prod (z - a_i(x)): prod q(a_i(x), x).
Polynomial resultant_from_roots(const std::vector<Polynomial>& roots_in_x, const Polynomial& q);

}  // namespace lefschetz::oracle
