#include "gturan/subgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "gturan/cliques.hpp"

namespace gturan {

namespace {

BitGraph host_bits(const Graph& host) {
  return host.representation() == Representation::kDense ? host.bits() : host.to_bit_graph();
}

}  // namespace

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern) {
  const Pattern pat(pattern);
  if (pat.order() > host.order()) return std::nullopt;
  const BitGraph bits = host_bits(host);
  return first_embedding(bits, pat, VertexSet(host.order(), true));
}

std::optional<std::vector<Embedding>> contains_k_disjoint(const Graph& host, const Graph& pattern, std::size_t k) {
  if (k == 0) throw std::invalid_argument("number of copies must be positive");
  const Pattern pat(pattern);
  if (k * pat.order() > host.order()) return std::nullopt;
  const BitGraph bits = host_bits(host);
  return pack_copies(bits, pat, k, VertexSet(host.order(), true));
}

std::size_t edge_book_degree(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
  return common_neighbors(g, e.u, e.v);
}

std::size_t max_book(const Graph& g) {
  std::size_t best = 0;
  for (const auto& e : g.edges()) best = std::max(best, common_neighbors(g, e.u, e.v));
  return best;
}

}  // namespace gturan
