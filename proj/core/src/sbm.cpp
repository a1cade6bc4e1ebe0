#include "awcd/sbm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "awcd/rng.hpp"

namespace awcd {

SbmSpec SbmSpec::symmetric(std::uint32_t block_size, std::uint32_t num_blocks,
                           double theta, double rho) {
  SbmSpec spec;
  spec.block_sizes.assign(num_blocks, block_size);
  spec.theta_within.assign(num_blocks, theta);
  spec.rho_between = rho;
  return spec;
}

std::size_t SbmSpec::total_vertices() const {
  std::size_t total = 0;
  for (auto s : block_sizes) total += s;
  return total;
}

void SbmSpec::validate() const {
  if (block_sizes.empty()) throw std::invalid_argument("at least one block required");
  if (theta_within.size() != block_sizes.size())
    throw std::invalid_argument("one theta per block required");
  for (auto s : block_sizes)
    if (s == 0) throw std::invalid_argument("block sizes must be positive");
  for (double t : theta_within)
    if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("theta outside [0,1]");
  if (!(rho_between >= 0.0 && rho_between <= 1.0))
    throw std::invalid_argument("rho outside [0,1]");
}

Labeling canonical_labels(const SbmSpec& spec) {
  Labeling labels;
  labels.reserve(spec.total_vertices());
  for (std::uint32_t block = 0; block < spec.block_sizes.size(); ++block)
    labels.insert(labels.end(), spec.block_sizes[block], block);
  return labels;
}

std::pair<Graph, Labeling> sample(const SbmSpec& spec, std::uint64_t seed) {
  spec.validate();
  const Labeling labels = canonical_labels(spec);
  const std::size_t n = labels.size();

  SplitMix64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const double p = labels[u] == labels[v] ? spec.theta_within[labels[u]]
                                              : spec.rho_between;
      if (rng.next_unit() < p)
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  }
  return {Graph(n, std::move(edges)), labels};
}

WeightMatrix true_weights(const Labeling& labels) {
  const std::size_t n = labels.size();
  WeightMatrix w(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (labels[i] == labels[j]) w.set_pair(i, j, true);
  return w;
}

VertexSet oracle_start(const Labeling& labels, Vertex i, std::size_t size,
                       std::uint64_t seed) {
  if (i >= labels.size()) throw std::invalid_argument("vertex out of range");
  VertexSet pool;
  for (Vertex v = 0; v < labels.size(); ++v)
    if (labels[v] == labels[i] && v != i) pool.push_back(v);
  if (size > pool.size())
    throw std::invalid_argument("requested start size exceeds community size - 1");

  // Partial Fisher-Yates: the first `size` slots end up a uniform subset.
  SplitMix64 rng(seed);
  for (std::size_t s = 0; s < size; ++s) {
    const std::size_t r = s + static_cast<std::size_t>(rng.next_below(pool.size() - s));
    std::swap(pool[s], pool[r]);
  }
  pool.resize(size);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace awcd
