#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gturan {

using Vertex = std::uint32_t;

/// Undirected edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Largest order for which a dense bit-row form may be built.
inline constexpr std::size_t kMaxDenseOrder = 4096;
/// Graphs up to this order default to the dense form.
inline constexpr std::size_t kDefaultDenseLimit = 512;

/// Fixed-capacity vertex set over [0, n) with n <= kMaxDenseOrder. Only the
/// words actually in use are touched, so small sets stay cheap to copy.
class VertexSet {
 public:
  static constexpr std::size_t kWords = kMaxDenseOrder / 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t n, bool full = false);
  VertexSet(const VertexSet& other) : words_(other.words_) { copy_words(other); }
  VertexSet& operator=(const VertexSet& other) {
    words_ = other.words_;
    copy_words(other);
    return *this;
  }

  std::size_t word_count() const { return words_; }
  std::uint64_t word(std::size_t i) const { return w_[i]; }
  std::uint64_t& word(std::size_t i) { return w_[i]; }

  bool test(Vertex v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(w_[i]));
    return c;
  }
  bool empty() const {
    for (std::size_t i = 0; i < words_; ++i)
      if (w_[i] != 0) return false;
    return true;
  }
  /// Lowest member, or -1 when empty.
  std::int64_t first() const { return next(0); }
  /// Lowest member >= from, or -1.
  std::int64_t next(std::size_t from) const;

  void intersect(std::span<const std::uint64_t> row) {
    for (std::size_t i = 0; i < words_; ++i) w_[i] &= row[i];
  }
  void subtract(const VertexSet& other) {
    for (std::size_t i = 0; i < words_; ++i) w_[i] &= ~other.w_[i];
  }
  /// Removes every member below `v`.
  void drop_below(Vertex v);

  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.words_ != b.words_) return false;
    for (std::size_t i = 0; i < a.words_; ++i)
      if (a.w_[i] != b.w_[i]) return false;
    return true;
  }

 private:
  void copy_words(const VertexSet& other) {
    for (std::size_t i = 0; i < words_; ++i) w_[i] = other.w_[i];
  }

  std::size_t words_ = 0;
  std::array<std::uint64_t, kWords> w_{};
};

/// Mutable dense adjacency matrix, one bit row per vertex.
class BitGraph {
 public:
  BitGraph() = default;
  explicit BitGraph(std::size_t n);

  std::size_t order() const { return n_; }
  std::size_t words() const { return words_; }
  std::size_t edge_count() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const { return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u; }
  /// Adds uv; returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);

  std::span<const std::uint64_t> row(Vertex v) const { return {bits_.data() + v * words_, words_}; }
  /// First word of a row; the whole row when order() <= 64.
  std::uint64_t row_word(Vertex v) const { return bits_[v * words_]; }
  VertexSet neighbor_set(Vertex v) const;
  std::size_t degree(Vertex v) const;

  std::vector<Edge> edges() const;

  friend bool operator==(const BitGraph&, const BitGraph&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Representation { kDense, kSparse };

/// Immutable simple undirected graph on vertices [0, n).
///
/// Neighbor lists (CSR) are always present; the dense form additionally keeps
/// bit rows for fast adjacency tests and set intersections. Two graphs compare
/// equal iff they have the same labeled edge set, regardless of form.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges are merged; self-loops and out-of-range endpoints throw
  /// std::invalid_argument. Without an explicit form, graphs of order up to
  /// kDefaultDenseLimit are dense.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges,
                          std::optional<Representation> rep = std::nullopt);
  static Graph from_bits(const BitGraph& bits);

  std::size_t order() const { return n_; }
  std::size_t size() const { return targets_.size() / 2; }
  Representation representation() const {
    return dense_ ? Representation::kDense : Representation::kSparse;
  }

  bool has_edge(Vertex u, Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  std::size_t min_degree() const;
  std::vector<Edge> edges() const;

  /// Dense rows; throws std::logic_error for a sparse graph.
  const BitGraph& bits() const;
  /// Dense rows, built on demand for sparse graphs (throws LimitExceeded
  /// above kMaxDenseOrder).
  BitGraph to_bit_graph() const;

  Graph to_dense() const;
  Graph to_sparse() const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const;
  /// Relabeling where vertex v becomes perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::optional<BitGraph> dense_;
};

}  // namespace gturan
