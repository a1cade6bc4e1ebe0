#pragma once

#include <vector>

#include "awcd/graph.hpp"
#include "awcd/types.hpp"

namespace awcd::detail {

// One BFS per vertex, capturing the exact-k and exact-(k-1) levels.
void rings_two_levels(const Graph& g, unsigned k, std::vector<VertexSet>& at_k,
                      std::vector<VertexSet>& at_km1, unsigned jobs);

}  // namespace awcd::detail
