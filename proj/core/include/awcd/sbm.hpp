#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "awcd/graph.hpp"
#include "awcd/types.hpp"
#include "awcd/weight_matrix.hpp"

namespace awcd {

// Stochastic block model: per-block within probabilities theta_alpha and
// one shared between-block probability rho. The symmetric model has all
// block sizes and thetas equal.
struct SbmSpec {
  std::vector<std::uint32_t> block_sizes;
  std::vector<double> theta_within;  // one per block
  double rho_between = 0.0;

  static SbmSpec symmetric(std::uint32_t block_size, std::uint32_t num_blocks,
                           double theta, double rho);

  std::size_t total_vertices() const;
  std::size_t num_blocks() const { return block_sizes.size(); }

  // Throws std::invalid_argument when sizes/probabilities are out of range.
  void validate() const;
};

// Canonical contiguous labeling: vertices 0..n_1-1 carry label 0, the
// next n_2 carry label 1, and so on.
Labeling canonical_labels(const SbmSpec& spec);

// Draws a graph: each unordered pair {u, v} is an edge independently with
// probability theta_alpha when both endpoints lie in block alpha, else
// rho. One SplitMix64 draw per pair, pairs visited in lexicographic
// order, so identical (spec, seed) gives a bit-identical graph.
std::pair<Graph, Labeling> sample(const SbmSpec& spec, std::uint64_t seed);

// W*_ij = 1 iff labels[i] == labels[j].
WeightMatrix true_weights(const Labeling& labels);

// Uniform random subset of i's true community (excluding i) of the given
// size; deterministic in the seed. Throws std::invalid_argument when
// size exceeds |block of i| - 1.
VertexSet oracle_start(const Labeling& labels, Vertex i, std::size_t size,
                       std::uint64_t seed);

}  // namespace awcd
