#pragma once

#include <cstdint>
#include <vector>

namespace awcd {

using Vertex = std::uint32_t;

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;

// One block index per vertex.
using Labeling = std::vector<std::uint32_t>;

}  // namespace awcd
