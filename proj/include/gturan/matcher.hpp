#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

inline constexpr std::size_t kMaxPatternOrder = 16;

/// embedding[i] is the host vertex that pattern vertex i maps to.
using Embedding = std::vector<Vertex>;

/// Pattern graph prepared for repeated non-induced matching.
class Pattern {
 public:
  /// Throws LimitExceeded above kMaxPatternOrder vertices.
  explicit Pattern(const Graph& pattern);

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::uint16_t row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return static_cast<std::size_t>(std::popcount(rows_[v])); }
  bool bipartite() const { return bipartite_; }
  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint16_t> rows_;
  bool bipartite_ = true;
};

/// Optional constraint that every reported embedding must satisfy.
struct Anchor {
  enum class Kind { kNone, kVertex, kEdge };
  Kind kind = Kind::kNone;
  Vertex u = 0;
  Vertex v = 0;

  static Anchor none() { return {}; }
  static Anchor vertex(Vertex s) { return {Kind::kVertex, s, 0}; }
  static Anchor edge(Vertex a, Vertex b) { return {Kind::kEdge, a, b}; }
};

/// Return true to stop the enumeration.
using EmbeddingVisitor = std::function<bool(const Embedding&)>;

/// Backtracking matcher. Pattern vertices are placed in index order and host
/// candidates are tried in ascending order, so without an anchor the first
/// embedding reported is the lexicographically least one. All host vertices
/// used lie in `allowed`. Returns true iff the visitor stopped the search.
bool for_each_embedding(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed,
                        const Anchor& anchor, const EmbeddingVisitor& visit);

std::optional<Embedding> first_embedding(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed,
                                         const Anchor& anchor = Anchor::none());

/// Injective and maps every pattern edge onto a host edge.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding);

/// k pairwise vertex-disjoint copies inside `allowed`, or nullopt.
std::optional<std::vector<Embedding>> pack_copies(const BitGraph& host, const Pattern& pattern, std::size_t k,
                                                  const VertexSet& allowed);

/// k pairwise vertex-disjoint copies inside `allowed`, one of which uses the
/// host edge uv; nullopt if none exist.
std::optional<std::vector<Embedding>> pack_copies_through_edge(const BitGraph& host, const Pattern& pattern,
                                                               std::size_t k, const VertexSet& allowed, Vertex u,
                                                               Vertex v);

}  // namespace gturan
