#include "gturan/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gturan/errors.hpp"

namespace gturan {

// --- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::size_t n, bool full) : words_((n + 63) / 64) {
  if (n > kMaxDenseOrder)
    throw LimitExceeded("vertex set of order " + std::to_string(n) + " exceeds " +
                        std::to_string(kMaxDenseOrder));
  if (full) {
    for (std::size_t i = 0; i < n / 64; ++i) w_[i] = ~std::uint64_t{0};
    if (n % 64 != 0) w_[n / 64] = (std::uint64_t{1} << (n % 64)) - 1;
  }
}

std::int64_t VertexSet::next(std::size_t from) const {
  std::size_t i = from >> 6;
  if (i >= words_) return -1;
  std::uint64_t w = w_[i] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return static_cast<std::int64_t>((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
    if (++i >= words_) return -1;
    w = w_[i];
  }
}

void VertexSet::drop_below(Vertex v) {
  const std::size_t i = v >> 6;
  for (std::size_t j = 0; j < i && j < words_; ++j) w_[j] = 0;
  if (i < words_) w_[i] &= ~std::uint64_t{0} << (v & 63);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < words_; ++i) {
    std::uint64_t w = w_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>((i << 6) + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

// --- BitGraph --------------------------------------------------------------

BitGraph::BitGraph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

bool BitGraph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (has_edge(u, v)) return false;
  bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++edges_;
  return true;
}

bool BitGraph::remove_edge(Vertex u, Vertex v) {
  if (u == v || !has_edge(u, v)) return false;
  bits_[u * words_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * words_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --edges_;
  return true;
}

VertexSet BitGraph::neighbor_set(Vertex v) const {
  VertexSet s(n_);
  const auto r = row(v);
  for (std::size_t i = 0; i < words_; ++i) s.word(i) = r[i];
  return s;
}

std::size_t BitGraph::degree(Vertex v) const {
  std::size_t d = 0;
  for (const auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<Edge> BitGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < n_; ++u) {
    const auto r = row(u);
    for (std::size_t i = u >> 6; i < words_; ++i) {
      std::uint64_t w = r[i];
      if (i == (u >> 6)) w &= (u & 63) == 63 ? 0 : ~std::uint64_t{0} << ((u & 63) + 1);
      while (w != 0) {
        out.push_back({u, static_cast<Vertex>((i << 6) + static_cast<std::size_t>(std::countr_zero(w)))});
        w &= w - 1;
      }
    }
  }
  return out;
}

// --- Graph -----------------------------------------------------------------

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::optional<Representation> rep) {
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range for graph of order " + std::to_string(n));
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    normalized.push_back(make_edge(e.u, e.v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  Graph g;
  g.n_ = n;
  std::vector<std::size_t> deg(n, 0);
  for (const auto& e : normalized) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : normalized) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));

  const Representation form =
      rep.value_or(n <= kDefaultDenseLimit ? Representation::kDense : Representation::kSparse);
  if (form == Representation::kDense) {
    if (n > kMaxDenseOrder)
      throw LimitExceeded("dense form requested for order " + std::to_string(n) + " > " +
                          std::to_string(kMaxDenseOrder));
    BitGraph bits(n);
    for (const auto& e : normalized) bits.add_edge(e.u, e.v);
    g.dense_ = std::move(bits);
  }
  return g;
}

Graph Graph::from_bits(const BitGraph& bits) {
  const auto edges = bits.edges();
  return from_edges(bits.order(), edges, Representation::kDense);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_ || u == v) return false;
  if (dense_) return dense_->has_edge(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (Vertex u = 0; u < n_; ++u)
    for (const Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

const BitGraph& Graph::bits() const {
  if (!dense_) throw std::logic_error("graph is in sparse form");
  return *dense_;
}

BitGraph Graph::to_bit_graph() const {
  if (dense_) return *dense_;
  if (n_ > kMaxDenseOrder)
    throw LimitExceeded("graph of order " + std::to_string(n_) + " is too large for dense rows");
  BitGraph bits(n_);
  for (const auto& e : edges()) bits.add_edge(e.u, e.v);
  return bits;
}

Graph Graph::to_dense() const {
  if (dense_) return *this;
  return from_edges(n_, edges(), Representation::kDense);
}

Graph Graph::to_sparse() const {
  Graph g = *this;
  g.dense_.reset();
  return g;
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::int64_t> index(n_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= n_) throw std::invalid_argument("induced: vertex out of range");
    if (index[keep[i]] != -1) throw std::invalid_argument("induced: repeated vertex");
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (const Vertex w : neighbors(keep[i]))
      if (index[w] > static_cast<std::int64_t>(i)) out.push_back({static_cast<Vertex>(i), static_cast<Vertex>(index[w])});
  return from_edges(keep.size(), out, representation());
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("relabeled: permutation has wrong length");
  std::vector<bool> seen(n_, false);
  for (const Vertex p : perm) {
    if (p >= n_ || seen[p]) throw std::invalid_argument("relabeled: not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> out;
  out.reserve(size());
  for (const auto& e : edges()) out.push_back(make_edge(perm[e.u], perm[e.v]));
  return from_edges(n_, out, representation());
}

}  // namespace gturan
