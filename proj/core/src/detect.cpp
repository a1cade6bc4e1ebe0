#include "awcd/detect.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <thread>

#include "rings_detail.hpp"

namespace awcd {

double bernoulli_kl(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0))
    throw std::domain_error("bernoulli_kl arguments must lie in [0,1]");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double kl = 0.0;
  if (p > 0.0) {
    if (q == 0.0) return inf;
    kl += p * std::log(p / q);
  }
  const double p1 = 1.0 - p;
  const double q1 = 1.0 - q;
  if (p1 > 0.0) {
    if (q1 == 0.0) return inf;
    kl += p1 * std::log(p1 / q1);
  }
  // Rounding can push the sum a hair below zero when p is close to q;
  // the divergence itself is nonnegative.
  return kl < 0.0 ? 0.0 : kl;
}

Rings make_rings(const Graph& g, unsigned k, unsigned jobs) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  Rings rings;
  rings.k = k;
  detail::rings_two_levels(g, k, rings.at_k, rings.at_km1, jobs);
  if (k == 1) rings.at_km1.clear();  // 0-hop sets are implicit singletons
  return rings;
}

Rings rings_from_sets(std::vector<VertexSet> sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (!std::is_sorted(sets[i].begin(), sets[i].end()))
      throw std::invalid_argument("start sets must be sorted");
    if (std::binary_search(sets[i].begin(), sets[i].end(), static_cast<Vertex>(i)))
      throw std::invalid_argument("start sets must exclude their own index");
  }
  Rings rings;
  rings.k = 1;
  rings.at_k = std::move(sets);
  return rings;
}

namespace {

// |a intersect b| for sorted ranges.
std::uint64_t intersect_size(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::uint64_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

// Sum over v1 in a of |adj(v1) intersect b|, i.e. the number of ordered
// pairs (v1, v2) in a x b joined by an edge.
std::uint64_t edges_between(const Graph& g, std::span<const Vertex> a,
                            std::span<const Vertex> b) {
  std::uint64_t s = 0;
  for (Vertex v1 : a) s += intersect_size(g.neighbors(v1), b);
  return s;
}

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_minus_one(const VertexSet& a, Vertex x) {
  VertexSet out;
  out.reserve(a.size());
  for (Vertex v : a)
    if (v != x) out.push_back(v);
  return out;
}

std::uint64_t circle_pair_count(const Rings& rings, Vertex i, Vertex j) {
  const std::uint64_t si = rings.at_k[i].size();
  const std::uint64_t sj = rings.at_k[j].size();
  if (si == 0 || sj == 0) return 0;
  return si * (sj - (i == j ? 1 : 0));
}

std::uint64_t debias_correction(const Graph& g, const Rings& rings, Variant variant,
                                Vertex i, Vertex j) {
  const std::uint64_t si = rings.at_k[i].size();
  const std::uint64_t sj = rings.at_k[j].size();
  if (rings.k == 1)
    return g.has_edge(i, j) ? si + sj - 1 : 0;
  if (variant.bias == BiasIndicator::edge)
    return g.has_edge(i, j) ? si + sj : 0;
  return i == j ? si + sj : 0;
}

CountPair circleish_counts(const Graph& g, const Rings& rings, Variant variant,
                           Vertex i, Vertex j, std::uint64_t raw_s) {
  const std::uint64_t n = circle_pair_count(rings, i, j);
  if (variant.tag == VariantTag::circle)
    return {static_cast<double>(raw_s), n};
  const std::uint64_t corr = debias_correction(g, rings, variant, i, j);
  const double s = raw_s >= corr ? static_cast<double>(raw_s - corr) : 0.0;
  return {s, n};
}

CountPair plus_counts(const Graph& g, const Rings& rings, Vertex i, Vertex j) {
  const VertexSet* a = &rings.at_k[i];
  const VertexSet* b = &rings.at_k[j];
  VertexSet a_store, b_store;
  if (rings.k == 1) {
    if (i != j) {
      a_store = set_minus_one(*a, j);
      b_store = set_minus_one(*b, i);
      a = &a_store;
      b = &b_store;
    }
  } else {
    a_store = set_minus(*a, rings.at_km1[j]);
    b_store = set_minus(*b, rings.at_km1[i]);
    a = &a_store;
    b = &b_store;
  }
  const std::uint64_t s = edges_between(g, *a, *b);
  const std::uint64_t overlap = (i == j) ? a->size() : intersect_size(*a, *b);
  const std::uint64_t n = static_cast<std::uint64_t>(a->size()) * b->size() - overlap;
  return {static_cast<double>(s), n};
}

}  // namespace

CountPair pair_counts(const Graph& g, const Rings& rings, Vertex i, Vertex j,
                      Variant variant) {
  if (i >= g.num_vertices() || j >= g.num_vertices())
    throw std::invalid_argument("vertex out of range");
  if (variant.tag == VariantTag::plus) return plus_counts(g, rings, i, j);
  const std::uint64_t raw = edges_between(g, rings.at_k[i], rings.at_k[j]);
  return circleish_counts(g, rings, variant, i, j, raw);
}

ThetaEstimates estimate_thetas(CountPair c_ii, CountPair c_jj, CountPair c_ij) {
  auto ratio = [](CountPair c) {
    return c.n ? c.s / static_cast<double>(c.n) : 0.0;
  };
  ThetaEstimates e;
  e.within_i = ratio(c_ii);
  e.within_j = ratio(c_jj);
  e.cross = ratio(c_ij);
  const double num = c_ii.s + 2.0 * c_ij.s + c_jj.s;
  const double den = static_cast<double>(c_ii.n) + 2.0 * static_cast<double>(c_ij.n) +
                     static_cast<double>(c_jj.n);
  e.pooled = den > 0.0 ? num / den : 0.0;
  return e;
}

double test_statistic(CountPair c_ii, CountPair c_jj, CountPair c_ij) {
  const ThetaEstimates e = estimate_thetas(c_ii, c_jj, c_ij);
  double t = 0.0;
  auto add = [&](CountPair c, double th) {
    if (c.n) t += static_cast<double>(c.n) * bernoulli_kl(th, e.pooled);
  };
  add(c_ii, e.within_i);
  add(c_jj, e.within_j);
  add(c_ij, e.cross);
  return t;
}

namespace {

// Bulk engine behind test_matrix and pair_counts_all. Row i visits every
// j >= i; for the circle/debiased variants one scatter pass over the
// adjacency of C_i^k turns every S_ij of the row into a gather over
// C_j^k, so the whole matrix costs one sparse triple product. Rows are
// independent, which keeps parallel output bit-identical to sequential.
template <typename RowFn>
void visit_count_rows(const Graph& g, const Rings& rings, Variant variant,
                      unsigned jobs, RowFn&& fn) {
  const std::size_t n = g.num_vertices();
  if (rings.at_k.size() != n)
    throw std::invalid_argument("rings do not match the graph");

  // Diagonal counts first; every off-diagonal statistic needs them.
  std::vector<CountPair> diag(n);

  unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max<std::size_t>(n, 1), workers));

  const bool plus = variant.tag == VariantTag::plus;

  auto diag_work = [&](unsigned w) {
    std::vector<std::uint32_t> buf(n, 0);
    for (std::size_t i = w; i < n; i += workers) {
      const VertexSet& ring = rings.at_k[i];
      for (Vertex v1 : ring)
        for (Vertex v2 : g.neighbors(v1)) ++buf[v2];
      std::uint64_t raw = 0;
      for (Vertex v2 : ring) raw += buf[v2];
      for (Vertex v1 : ring)
        for (Vertex v2 : g.neighbors(v1)) --buf[v2];
      const Vertex vi = static_cast<Vertex>(i);
      diag[i] = plus ? CountPair{static_cast<double>(raw), circle_pair_count(rings, vi, vi)}
                     : circleish_counts(g, rings, variant, vi, vi, raw);
    }
  };

  auto row_work = [&](unsigned w) {
    std::vector<std::uint32_t> buf(n, 0);
    std::vector<CountPair> row;
    for (std::size_t i = w; i < n; i += workers) {
      const Vertex vi = static_cast<Vertex>(i);
      row.assign(n - i, CountPair{});
      row[0] = diag[i];
      if (!plus) {
        const VertexSet& ring = rings.at_k[i];
        for (Vertex v1 : ring)
          for (Vertex v2 : g.neighbors(v1)) ++buf[v2];
        for (std::size_t j = i + 1; j < n; ++j) {
          std::uint64_t raw = 0;
          for (Vertex v2 : rings.at_k[j]) raw += buf[v2];
          row[j - i] = circleish_counts(g, rings, variant, vi, static_cast<Vertex>(j), raw);
        }
        for (Vertex v1 : ring)
          for (Vertex v2 : g.neighbors(v1)) --buf[v2];
      } else {
        for (std::size_t j = i + 1; j < n; ++j)
          row[j - i] = plus_counts(g, rings, vi, static_cast<Vertex>(j));
      }
      fn(vi, std::span<const CountPair>(row), std::span<const CountPair>(diag));
    }
  };

  auto run_parallel = [&](auto& work) {
    if (workers <= 1 || n == 0) {
      if (n > 0) work(0);
      return;
    }
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  };

  run_parallel(diag_work);
  run_parallel(row_work);
}

}  // namespace

PairCountMatrices pair_counts_all(const Graph& g, const Rings& rings, Variant variant,
                                  unsigned jobs) {
  const std::size_t n = g.num_vertices();
  PairCountMatrices out;
  out.dim = n;
  out.s.assign(n * n, 0.0);
  out.n.assign(n * n, 0);
  visit_count_rows(g, rings, variant, jobs,
                   [&](Vertex i, std::span<const CountPair> row,
                       std::span<const CountPair>) {
                     for (std::size_t j = i; j < n; ++j) {
                       const CountPair& c = row[j - i];
                       out.s[std::size_t{i} * n + j] = c.s;
                       out.s[j * n + i] = c.s;
                       out.n[std::size_t{i} * n + j] = c.n;
                       out.n[j * n + i] = c.n;
                     }
                   });
  return out;
}

TestMatrix test_matrix(const Graph& g, const Rings& rings, Variant variant,
                       unsigned jobs) {
  const std::size_t n = g.num_vertices();
  TestMatrix t(n);
  constexpr double inf = std::numeric_limits<double>::infinity();

  visit_count_rows(g, rings, variant, jobs,
                   [&](Vertex i, std::span<const CountPair> row,
                       std::span<const CountPair> diag) {
                     for (std::size_t j = i + 1; j < n; ++j) {
                       const CountPair& c_ij = row[j - i];
                       const CountPair& c_ii = diag[i];
                       const CountPair& c_jj = diag[j];
                       double value;
                       if (c_ii.n == 0 && c_jj.n == 0 && c_ij.n == 0)
                         value = inf;  // no evidence: keep the pair apart
                       else
                         value = test_statistic(c_ii, c_jj, c_ij);
                       t.set_pair(i, static_cast<Vertex>(j), value);
                     }
                   });
  return t;
}

WeightMatrix threshold(const TestMatrix& t, double lambda) {
  const std::size_t n = t.dim();
  WeightMatrix w(n);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (t.get(i, j) <= lambda) w.set_pair(i, j, true);
  return w;
}

StepResult step(const Graph& g, const Rings& rings, const AwcdConfig& config,
                unsigned jobs) {
  if (rings.k != config.k)
    throw std::invalid_argument("rings were built for a different k");
  StepResult out;
  out.stats = test_matrix(g, rings, config.variant, jobs);
  out.weights = threshold(out.stats, config.lambda);
  return out;
}

WeightMatrix step_with_start(const Graph& g, const std::vector<VertexSet>& start,
                             Variant variant, double lambda, unsigned jobs) {
  if (start.size() != g.num_vertices())
    throw std::invalid_argument("one start set per vertex required");
  const Rings rings = rings_from_sets(start);
  return threshold(test_matrix(g, rings, variant, jobs), lambda);
}

RunResult run(const Graph& g, const AwcdConfig& config, unsigned jobs) {
  if (config.l_max < 1) throw std::invalid_argument("l_max must be >= 1");
  const std::size_t n = g.num_vertices();

  RunResult out;
  out.stats.reserve(config.l_max);

  Rings rings = make_rings(g, config.k, jobs);
  TestMatrix t = test_matrix(g, rings, config.variant, jobs);
  WeightMatrix w = threshold(t, config.lambda);
  out.stats.push_back(std::move(t));

  for (unsigned l = 2; l <= config.l_max; ++l) {
    std::vector<VertexSet> start(n);
    for (Vertex i = 0; i < n; ++i) start[i] = w.row_members(i, false);
    const Rings r1 = rings_from_sets(std::move(start));
    TestMatrix tl = test_matrix(g, r1, config.variant, jobs);
    w = threshold(tl, config.lambda);
    out.stats.push_back(std::move(tl));
  }
  out.weights = std::move(w);
  return out;
}

}  // namespace awcd
