#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

using Triangle = std::array<Vertex, 3>;

/// Number of r-vertex cliques. r = 1 gives n, r = 2 gives the edge count.
/// Throws std::invalid_argument for r = 0.
std::uint64_t count_cliques(const Graph& g, std::size_t r);
std::uint64_t count_cliques(const BitGraph& g, std::size_t r);

/// All triangles, each sorted ascending, in lexicographic order.
std::vector<Triangle> enumerate_triangles(const Graph& g);

/// All r-cliques as ascending vertex lists, in lexicographic order.
std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& g, std::size_t r);

/// Number of triangles through the edge uv, i.e. |N(u) ∩ N(v)|.
std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v);

}  // namespace gturan
