#pragma once

#include <cstdint>
#include <vector>

#include "awcd/graph.hpp"
#include "awcd/types.hpp"
#include "awcd/weight_matrix.hpp"

namespace awcd {

enum class VariantTag { circle, debiased, plus };

// Which indicator gates the bias correction for the debiased variant at
// k >= 2: subtract when the direct edge ij exists (edge) or only on the
// diagonal (diag). At k = 1 the correction is always edge-gated.
enum class BiasIndicator { edge, diag };

struct Variant {
  VariantTag tag = VariantTag::debiased;
  BiasIndicator bias = BiasIndicator::edge;
};

struct AwcdConfig {
  unsigned k = 1;         // neighborhood radius
  double lambda = 0.0;    // test threshold
  unsigned l_max = 1;     // iteration count
  Variant variant;
};

// Clamped edge count S and pair count N for one vertex pair; 0 <= S <= N.
struct CountPair {
  double s = 0.0;
  std::uint64_t n = 0;
};

// Bernoulli Kullback-Leibler divergence
//   K(p, q) = p log(p/q) + (1-p) log((1-p)/(1-q))
// with 0 log(0/x) = 0; +infinity iff (q = 0, p > 0) or (q = 1, p < 1).
// Throws std::domain_error outside [0,1] x [0,1].
double bernoulli_kl(double p, double q);

// Exact-distance-k neighborhoods of every vertex plus the (k-1)-hop sets
// the plus variant subtracts. For k == 1 the 0-hop set of x is {x} and
// at_km1 stays empty.
struct Rings {
  unsigned k = 1;
  std::vector<VertexSet> at_k;
  std::vector<VertexSet> at_km1;
};

Rings make_rings(const Graph& g, unsigned k, unsigned jobs = 0);

// Starting communities taken verbatim from caller-supplied sets (k = 1
// count rules). Each set must exclude its own index.
Rings rings_from_sets(std::vector<VertexSet> sets);

// Per-pair counts for i <= j. Reference implementation by direct set
// enumeration; the bulk path used by step() must agree exactly.
//
//   circle    S = sum over (v1, v2) in C_i^k x C_j^k of adj(v1, v2),
//             N = |C_i^k| (|C_j^k| - [i = j]).
//   debiased  circle S minus a correction, clamped at 0. k = 1:
//             [adj(i,j)] (|C_i| + |C_j| - 1). k >= 2, edge indicator:
//             [adj(i,j)] (|C_i^k| + |C_j^k|); diag indicator:
//             [i = j] (|C_i^k| + |C_j^k|). N as in circle.
//   plus      S over (C_i^k \ C_j^{k-1}) x (C_j^k \ C_i^{k-1}), N the
//             number of such ordered pairs with v1 != v2; C_x^0 = {x}.
CountPair pair_counts(const Graph& g, const Rings& rings, Vertex i, Vertex j,
                      Variant variant);

// Dense (S, N) matrices from the bulk path behind test_matrix, for code
// that needs the raw counts (quadratic memory).
struct PairCountMatrices {
  std::size_t dim = 0;
  std::vector<double> s;         // row-major
  std::vector<std::uint64_t> n;  // row-major
};

PairCountMatrices pair_counts_all(const Graph& g, const Rings& rings,
                                  Variant variant, unsigned jobs = 0);

struct ThetaEstimates {
  double within_i = 0.0;
  double within_j = 0.0;
  double cross = 0.0;
  double pooled = 0.0;
};

// Bernoulli MLEs: each estimate is S/N when N > 0, else 0; the pooled
// estimate is (S_ii + 2 S_ij + S_jj) / (N_ii + 2 N_ij + N_jj) under the
// same convention.
ThetaEstimates estimate_thetas(CountPair c_ii, CountPair c_jj, CountPair c_ij);

// Likelihood-ratio statistic
//   T = N_ii K(th_ii, th_pool) + N_jj K(th_jj, th_pool)
//     + N_ij K(th_ij, th_pool);
// a term with N = 0 contributes 0, so all-zero counts give T = 0.
double test_statistic(CountPair c_ii, CountPair c_jj, CountPair c_ij);

// T_ij for every unordered pair via the bulk count path. For an
// off-diagonal pair whose three pair counts are all zero, T_ij is set to
// +infinity (no evidence of a common community keeps vertices apart).
TestMatrix test_matrix(const Graph& g, const Rings& rings, Variant variant,
                       unsigned jobs = 0);

// W_ij = 1 iff T_ij <= lambda (inclusive); unit diagonal.
WeightMatrix threshold(const TestMatrix& t, double lambda);

struct StepResult {
  WeightMatrix weights;
  TestMatrix stats;
};

// One test-and-threshold pass over all pairs. rings.k must equal
// config.k.
StepResult step(const Graph& g, const Rings& rings, const AwcdConfig& config,
                unsigned jobs = 0);

// As step, but with caller-supplied starting communities and k = 1 count
// rules (enables oracle-start experiments).
WeightMatrix step_with_start(const Graph& g, const std::vector<VertexSet>& start,
                             Variant variant, double lambda, unsigned jobs = 0);

struct RunResult {
  WeightMatrix weights;
  std::vector<TestMatrix> stats;  // one per iteration
};

// Full procedure: iteration 1 starts from the exact-k rings; iterations
// 2..l_max reuse the previous weight matrix rows (minus the diagonal) as
// starting communities with the k = 1 count rules.
RunResult run(const Graph& g, const AwcdConfig& config, unsigned jobs = 0);

}  // namespace awcd
