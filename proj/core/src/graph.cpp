#include "awcd/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>

namespace awcd {

namespace {

std::vector<std::vector<Vertex>> build_adjacency(
    std::size_t n, std::vector<std::pair<Vertex, Vertex>>& edges,
    std::size_t& n_edges_out) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::vector<Vertex>> adj(n);
  std::vector<std::uint32_t> deg(n, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  for (std::size_t i = 0; i < n; ++i) adj[i].reserve(deg[i]);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  n_edges_out = edges.size();
  return adj;
}

}  // namespace

Graph::Graph(std::size_t n_vertices, std::vector<std::pair<Vertex, Vertex>> edges) {
  adj_ = build_adjacency(n_vertices, edges, n_edges_);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u == v) return false;
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

namespace {

// Strips a '#' comment and surrounding whitespace; empty result means
// the line carries no data.
std::string_view strip_line(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos)
    line = line.substr(0, pos);
  while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    line.remove_suffix(1);
  while (!line.empty() && (line.front() == ' ' || line.front() == '\t'))
    line.remove_prefix(1);
  return line;
}

long long parse_int(std::string_view token, std::size_t line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                     std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  long long n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    const auto data = strip_line(line);
    if (data.empty()) continue;
    const auto tokens = split_ws(data);

    if (!have_n) {
      if (tokens.size() != 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected a single vertex count");
      n = parse_int(tokens[0], line_no);
      if (n < 0)
        throw ParseError("line " + std::to_string(line_no) + ": negative vertex count");
      have_n = true;
      continue;
    }

    if (tokens.size() != 2)
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
    const long long u = parse_int(tokens[0], line_no);
    const long long v = parse_int(tokens[1], line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("line " + std::to_string(line_no) + ": vertex index out of range");
    if (u == v)
      throw ParseError("line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!have_n) throw ParseError("missing vertex count line");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return load_edge_list(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << '\n';
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v : g.neighbors(u))
      if (u < v) out << u << ' ' << v << '\n';
}

namespace {

// BFS out to depth k; fills `ring` with the vertices at distance exactly
// k and, when ring_km1 is non-null, those at distance k-1.
void bfs_ring(const Graph& g, Vertex start, unsigned k, std::vector<int>& dist,
              std::vector<Vertex>& queue, VertexSet& ring, VertexSet* ring_km1) {
  ring.clear();
  if (ring_km1) ring_km1->clear();
  queue.clear();
  queue.push_back(start);
  dist[start] = 0;
  std::size_t head = 0;
  while (head < queue.size()) {
    const Vertex v = queue[head++];
    const unsigned dv = static_cast<unsigned>(dist[v]);
    if (dv == k) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] >= 0) continue;
      dist[w] = static_cast<int>(dv + 1);
      queue.push_back(w);
    }
  }
  for (Vertex v : queue) {
    if (static_cast<unsigned>(dist[v]) == k) ring.push_back(v);
    else if (ring_km1 && static_cast<unsigned>(dist[v]) + 1 == k && v != start)
      ring_km1->push_back(v);
    dist[v] = -1;  // reset for reuse
  }
  std::sort(ring.begin(), ring.end());
  if (ring_km1) std::sort(ring_km1->begin(), ring_km1->end());
}

}  // namespace

VertexSet k_ring(const Graph& g, Vertex i, unsigned k) {
  if (i >= g.num_vertices()) throw std::invalid_argument("vertex out of range");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue;
  VertexSet ring;
  bfs_ring(g, i, k, dist, queue, ring, nullptr);
  return ring;
}

std::vector<VertexSet> k_rings_all(const Graph& g, unsigned k, unsigned jobs) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> rings(n);
  if (n == 0) return rings;

  unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));

  auto work = [&](unsigned w) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue;
    for (std::size_t i = w; i < n; i += workers)
      bfs_ring(g, static_cast<Vertex>(i), k, dist, queue, rings[i], nullptr);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  return rings;
}

namespace detail {

// Shared by k_rings_all and make_rings: one BFS per vertex capturing the
// k and (k-1) levels together.
void rings_two_levels(const Graph& g, unsigned k, std::vector<VertexSet>& at_k,
                      std::vector<VertexSet>& at_km1, unsigned jobs) {
  const std::size_t n = g.num_vertices();
  at_k.assign(n, {});
  at_km1.assign(n, {});

  unsigned workers = jobs ? jobs : std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  workers = static_cast<unsigned>(std::min<std::size_t>(std::max<std::size_t>(n, 1), workers));

  auto work = [&](unsigned w) {
    std::vector<int> dist(n, -1);
    std::vector<Vertex> queue;
    for (std::size_t i = w; i < n; i += workers)
      bfs_ring(g, static_cast<Vertex>(i), k, dist, queue, at_k[i], &at_km1[i]);
  };
  if (workers <= 1 || n == 0) {
    if (n > 0) work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
}

}  // namespace detail

}  // namespace awcd
