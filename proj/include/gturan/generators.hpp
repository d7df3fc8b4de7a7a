#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

enum class GeneratorKind { kComplete, kPath, kCycle, kCompleteBipartite, kTuran, kBook, kEmpty };

std::optional<GeneratorKind> parse_generator_kind(std::string_view name);
std::string_view to_string(GeneratorKind kind);

/// Builds a named standard graph. Parameter lists:
///   complete n | path n | cycle n | complete_bipartite a b | turan r n |
///   book t | empty n
/// Invalid parameters throw std::invalid_argument.
Graph build_standard(GeneratorKind kind, std::span<const std::int64_t> params);

Graph complete(std::size_t n);
/// Path on n >= 1 vertices.
Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Part of size a is [0, a), part of size b is [a, a + b).
Graph complete_bipartite(std::size_t a, std::size_t b);
/// Complete balanced r-partite graph; parts are ordered largest first and
/// occupy consecutive index blocks.
Graph turan(std::size_t r, std::size_t n);
std::vector<std::size_t> turan_part_sizes(std::size_t r, std::size_t n);
/// t triangles sharing the spine edge {0, 1}; pages are 2 .. t+1.
Graph book(std::size_t t);
Graph empty(std::size_t n);

/// g1 ∨ g2: disjoint union plus every edge between the two vertex sets.
/// Vertices of g1 keep their labels, g2's are shifted by |g1|.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_copies(const Graph& g, std::size_t k);

/// Random k-tree: K_k, then each new vertex is joined to a uniformly chosen
/// existing k-clique. Deterministic in `seed`.
Graph random_k_tree(std::size_t k, std::size_t n, std::uint64_t seed);

}  // namespace gturan
