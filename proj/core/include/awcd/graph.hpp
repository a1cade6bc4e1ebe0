#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "awcd/types.hpp"

namespace awcd {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected simple graph on vertices 0..n-1: symmetric adjacency,
// no self-loops, no duplicate edges.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n_vertices) : adj_(n_vertices) {}

  // Builds from an edge list; duplicate pairs and swapped orderings
  // collapse to a single edge. Throws std::invalid_argument on
  // out-of-range endpoints or self-loops.
  Graph(std::size_t n_vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t num_vertices() const { return adj_.size(); }
  std::size_t num_edges() const { return n_edges_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  // adj(u, v); false when u == v.
  bool has_edge(Vertex u, Vertex v) const;

 private:
  std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
  std::size_t n_edges_ = 0;
};

// Parses the edge-list format: '#' starts a comment running to end of
// line, blank lines are skipped, the first data line holds the vertex
// count n, and every further data line holds "u v" with 0 <= u,v < n,
// u != v. Throws ParseError (with the 1-based line number) on malformed
// input.
Graph load_edge_list(std::istream& in);

// Same, reading from a file; throws IoError if the file cannot be opened.
Graph load_edge_list_file(const std::string& path);

// Writes the same format back (vertex count line, then "u v" per edge
// with u < v, ascending).
void write_edge_list(std::ostream& out, const Graph& g);

// Vertices at shortest-path distance exactly k from i; never contains i.
VertexSet k_ring(const Graph& g, Vertex i, unsigned k);

// k_ring(g, i, k) for every i, one BFS per vertex. jobs == 0 picks the
// hardware thread count; the result does not depend on jobs.
std::vector<VertexSet> k_rings_all(const Graph& g, unsigned k, unsigned jobs = 0);

}  // namespace awcd
