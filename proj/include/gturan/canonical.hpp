#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

inline constexpr std::size_t kMaxCanonicalOrder = 16;
/// Largest order whose canonical string fits a 64-bit code.
inline constexpr std::size_t kMaxCode64Order = 11;

/// Isomorphism-class identifier: the order followed by the minimal
/// upper-triangle adjacency string (graph6 bit order), packed MSB first.
struct CanonicalKey {
  std::vector<std::uint8_t> bytes;

  std::string hex() const;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalLabeling {
  /// order[i] is the original vertex placed at canonical position i.
  std::vector<Vertex> order;
  /// columns[j]: adjacency of position j to positions 0..j-1, position 0 in
  /// the most significant of the j bits.
  std::vector<std::uint16_t> columns;
};

/// Minimal adjacency string over vertex orderings that list vertices by
/// non-increasing degree, with twin and automorphism pruning.
/// Throws LimitExceeded above kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const BitGraph& g);

CanonicalKey canonical_key(const BitGraph& g);
CanonicalKey canonical_key(const Graph& g);

/// The canonical representative: vertex i is order[i] of the labeling.
BitGraph canonical_form(const BitGraph& g);

/// Canonical string as an integer (orders up to kMaxCode64Order). Codes of
/// equal-order graphs compare like their strings.
std::uint64_t canonical_code64(const BitGraph& g);
std::uint64_t code64_from_columns(const std::vector<std::uint16_t>& columns);
BitGraph graph_from_code64(std::size_t n, std::uint64_t code);

}  // namespace gturan
