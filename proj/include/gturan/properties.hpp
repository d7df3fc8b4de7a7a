#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

/// Proper 2-coloring (0/1 per vertex), or nullopt if the graph has an odd
/// cycle. Each component's lowest vertex gets color 0.
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
bool is_bipartite(const Graph& g);

/// Series-parallel reduction: strip vertices of degree <= 1 and suppress
/// degree-2 vertices (joining their neighbors). True iff nothing remains.
bool has_treewidth_at_most_2(const Graph& g);

}  // namespace gturan
