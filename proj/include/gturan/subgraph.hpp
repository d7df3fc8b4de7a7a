#pragma once

#include <optional>
#include <vector>

#include "gturan/graph.hpp"
#include "gturan/matcher.hpp"

namespace gturan {

/// Lexicographically least embedding of `pattern` into `host` (non-induced),
/// or nullopt. Patterns above kMaxPatternOrder throw LimitExceeded.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern);

/// k pairwise vertex-disjoint copies of `pattern`, or nullopt.
std::optional<std::vector<Embedding>> contains_k_disjoint(const Graph& host, const Graph& pattern, std::size_t k);

/// Triangles through the edge e; throws std::invalid_argument if e is not an
/// edge of g.
std::size_t edge_book_degree(const Graph& g, Edge e);
/// Largest edge_book_degree over all edges (0 for an edgeless graph).
std::size_t max_book(const Graph& g);

}  // namespace gturan
