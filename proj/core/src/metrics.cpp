#include "awcd/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace awcd {

double rand_index(const WeightMatrix& w, const WeightMatrix& w_star) {
  if (w.dim() != w_star.dim()) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = w.dim();
  if (n < 2) throw std::invalid_argument("rand_index needs at least two vertices");
  // count_disagreements counts each mismatched unordered pair twice; the
  // diagonals always agree.
  const std::size_t mismatched = w.count_disagreements(w_star);
  return 1.0 - static_cast<double>(mismatched) /
                   (static_cast<double>(n) * static_cast<double>(n - 1));
}

bool exact_recovery(const WeightMatrix& w, const WeightMatrix& w_star) {
  if (w.dim() != w_star.dim()) throw std::invalid_argument("dimension mismatch");
  return w == w_star;
}

Labeling partition_from_weights(const WeightMatrix& w) {
  const std::size_t n = w.dim();
  constexpr std::uint32_t unassigned = ~std::uint32_t{0};
  Labeling labels(n, unassigned);
  std::uint32_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (labels[v] != unassigned) continue;
    const std::uint32_t label = next++;
    labels[v] = label;
    stack.push_back(v);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex x : w.row_members(u, false)) {
        if (labels[x] != unassigned) continue;
        labels[x] = label;
        stack.push_back(x);
      }
    }
  }
  return labels;
}

double modularity(const Graph& g, const Labeling& labels) {
  if (labels.size() != g.num_vertices())
    throw std::invalid_argument("one label per vertex required");
  const std::size_t m = g.num_edges();
  if (m == 0) throw std::invalid_argument("modularity undefined on a zero-edge graph");

  std::uint32_t num_labels = 0;
  for (auto l : labels) num_labels = std::max(num_labels, l + 1);
  std::vector<double> within(num_labels, 0.0);   // edges inside each community
  std::vector<double> deg_sum(num_labels, 0.0);

  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    deg_sum[labels[v]] += static_cast<double>(g.degree(v));
    for (Vertex u : g.neighbors(v))
      if (u > v && labels[u] == labels[v]) within[labels[v]] += 1.0;
  }

  const double two_m = 2.0 * static_cast<double>(m);
  double q = 0.0;
  for (std::uint32_t c = 0; c < num_labels; ++c) {
    const double frac = deg_sum[c] / two_m;
    q += 2.0 * within[c] / two_m - frac * frac;
  }
  return q;
}

TuneResult tune_lambda(const Graph& g, const Rings& rings, Variant variant,
                       std::span<const double> lambda_grid, unsigned jobs) {
  if (lambda_grid.empty()) throw std::invalid_argument("empty lambda grid");
  const TestMatrix t = test_matrix(g, rings, variant, jobs);

  std::vector<double> grid(lambda_grid.begin(), lambda_grid.end());
  std::sort(grid.begin(), grid.end());

  TuneResult best{grid.front(), -std::numeric_limits<double>::infinity()};
  for (double lambda : grid) {
    const WeightMatrix w = threshold(t, lambda);
    const double q = modularity(g, partition_from_weights(w));
    if (q > best.modularity_score) best = {lambda, q};
  }
  return best;
}

double best_rand_over_lambda(const TestMatrix& t, const WeightMatrix& w_star) {
  const std::size_t n = t.dim();
  if (n != w_star.dim()) throw std::invalid_argument("dimension mismatch");
  if (n < 2) throw std::invalid_argument("need at least two vertices");

  // Sweep the threshold over the sorted finite T values: crossing a value
  // flips its pairs from W = 0 to W = 1.
  std::vector<std::pair<double, std::uint8_t>> entries;
  entries.reserve(n * (n - 1) / 2);
  std::size_t zeros = 0;  // pairs with W*_ij = 0 (all agree when lambda < min T)
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool target = w_star.get(i, j);
      if (!target) ++zeros;
      const double value = t.get(i, j);
      if (!std::isinf(value)) entries.emplace_back(value, target ? 1 : 0);
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::int64_t best = static_cast<std::int64_t>(zeros);
  std::int64_t current = best;
  std::size_t idx = 0;
  while (idx < entries.size()) {
    const double value = entries[idx].first;
    while (idx < entries.size() && entries[idx].first == value) {
      current += entries[idx].second ? 1 : -1;
      ++idx;
    }
    best = std::max(best, current);
  }
  const double total = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  return static_cast<double>(best) / total;
}

}  // namespace awcd
