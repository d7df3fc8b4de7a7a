#include "gturan/cliques.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace gturan {

namespace {

std::uint64_t above_mask(Vertex v) { return (v & 63) == 63 ? 0 : ~std::uint64_t{0} << ((v & 63) + 1); }

// Single-word fast path: order <= 64.
std::uint64_t count_small(const BitGraph& g, std::uint64_t cand, std::size_t depth) {
  if (depth == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  if (depth == 2) {
    while (cand != 0) {
      const auto v = static_cast<Vertex>(std::countr_zero(cand));
      cand &= cand - 1;
      total += static_cast<std::uint64_t>(std::popcount(cand & g.row_word(v)));
    }
    return total;
  }
  while (cand != 0) {
    const auto v = static_cast<Vertex>(std::countr_zero(cand));
    cand &= cand - 1;
    const std::uint64_t next = cand & g.row_word(v);
    if (static_cast<std::size_t>(std::popcount(next)) >= depth - 1) total += count_small(g, next, depth - 1);
  }
  return total;
}

std::uint64_t count_wide(const BitGraph& g, const VertexSet& cand, std::size_t depth) {
  if (depth == 1) return cand.count();
  std::uint64_t total = 0;
  for (auto v = cand.first(); v >= 0; v = cand.next(static_cast<std::size_t>(v) + 1)) {
    VertexSet next = cand;
    next.drop_below(static_cast<Vertex>(v) + 1);
    next.intersect(g.row(static_cast<Vertex>(v)));
    if (next.count() >= depth - 1) total += count_wide(g, next, depth - 1);
  }
  return total;
}

// Sparse form: forward neighbor lists (higher-indexed neighbors only).
std::uint64_t count_sparse(const Graph& g, const std::vector<Vertex>& cand, std::size_t depth) {
  if (depth == 1) return cand.size();
  std::uint64_t total = 0;
  std::vector<Vertex> next;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const auto nb = g.neighbors(cand[i]);
    next.clear();
    std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    if (next.size() >= depth - 1) total += count_sparse(g, next, depth - 1);
  }
  return total;
}

void collect(const Graph& g, std::vector<Vertex>& prefix, const std::vector<Vertex>& cand, std::size_t depth,
             std::vector<std::vector<Vertex>>& out) {
  if (depth == 0) {
    out.push_back(prefix);
    return;
  }
  std::vector<Vertex> next;
  for (std::size_t i = 0; i < cand.size(); ++i) {
    const auto nb = g.neighbors(cand[i]);
    next.clear();
    std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nb.begin(), nb.end(),
                          std::back_inserter(next));
    if (next.size() + 1 < depth) continue;
    prefix.push_back(cand[i]);
    collect(g, prefix, next, depth - 1, out);
    prefix.pop_back();
  }
}

}  // namespace

std::uint64_t count_cliques(const BitGraph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("clique size must be at least 1");
  const std::size_t n = g.order();
  if (r == 1) return n;
  if (r == 2) return g.edge_count();
  std::uint64_t total = 0;
  if (g.words() == 1) {
    for (Vertex v = 0; v < n; ++v) {
      const std::uint64_t cand = g.row_word(v) & above_mask(v);
      if (static_cast<std::size_t>(std::popcount(cand)) >= r - 1) total += count_small(g, cand, r - 1);
    }
    return total;
  }
  for (Vertex v = 0; v < n; ++v) {
    VertexSet cand = g.neighbor_set(v);
    cand.drop_below(v + 1);
    if (cand.count() >= r - 1) total += count_wide(g, cand, r - 1);
  }
  return total;
}

std::uint64_t count_cliques(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("clique size must be at least 1");
  if (r == 1) return g.order();
  if (r == 2) return g.size();
  if (g.representation() == Representation::kDense) return count_cliques(g.bits(), r);
  std::uint64_t total = 0;
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    cand.assign(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
    if (cand.size() >= r - 1) total += count_sparse(g, cand, r - 1);
  }
  return total;
}

std::vector<Triangle> enumerate_triangles(const Graph& g) {
  std::vector<Triangle> out;
  for (const auto& c : enumerate_cliques(g, 3)) out.push_back({c[0], c[1], c[2]});
  return out;
}

std::vector<std::vector<Vertex>> enumerate_cliques(const Graph& g, std::size_t r) {
  if (r == 0) throw std::invalid_argument("clique size must be at least 1");
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> prefix;
  std::vector<Vertex> cand;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    cand.assign(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
    if (cand.size() + 1 < r) continue;
    prefix.assign(1, v);
    collect(g, prefix, cand, r - 1, out);
  }
  return out;
}

std::size_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
  if (g.representation() == Representation::kDense) {
    const auto a = g.bits().row(u);
    const auto b = g.bits().row(v);
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
  }
  const auto a = g.neighbors(u);
  const auto b = g.neighbors(v);
  std::size_t c = 0;
  for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

}  // namespace gturan
