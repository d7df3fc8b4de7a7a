#include "gturan/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "gturan/random.hpp"

namespace gturan {

namespace {

constexpr std::array<std::pair<std::string_view, GeneratorKind>, 7> kKinds{{
    {"complete", GeneratorKind::kComplete},
    {"path", GeneratorKind::kPath},
    {"cycle", GeneratorKind::kCycle},
    {"complete_bipartite", GeneratorKind::kCompleteBipartite},
    {"turan", GeneratorKind::kTuran},
    {"book", GeneratorKind::kBook},
    {"empty", GeneratorKind::kEmpty},
}};

std::size_t nonneg(std::int64_t value, std::string_view what) {
  if (value < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(value);
}

void expect_params(std::span<const std::int64_t> params, std::size_t count, GeneratorKind kind) {
  if (params.size() != count)
    throw std::invalid_argument(std::string(to_string(kind)) + " expects " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(params.size()));
}

}  // namespace

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  for (const auto& [key, kind] : kKinds)
    if (key == name) return kind;
  return std::nullopt;
}

std::string_view to_string(GeneratorKind kind) {
  for (const auto& [key, k] : kKinds)
    if (k == kind) return key;
  return "unknown";
}

Graph build_standard(GeneratorKind kind, std::span<const std::int64_t> params) {
  switch (kind) {
    case GeneratorKind::kComplete:
      expect_params(params, 1, kind);
      return complete(nonneg(params[0], "n"));
    case GeneratorKind::kPath:
      expect_params(params, 1, kind);
      return path(nonneg(params[0], "n"));
    case GeneratorKind::kCycle:
      expect_params(params, 1, kind);
      return cycle(nonneg(params[0], "n"));
    case GeneratorKind::kCompleteBipartite:
      expect_params(params, 2, kind);
      return complete_bipartite(nonneg(params[0], "a"), nonneg(params[1], "b"));
    case GeneratorKind::kTuran:
      expect_params(params, 2, kind);
      return turan(nonneg(params[0], "r"), nonneg(params[1], "n"));
    case GeneratorKind::kBook:
      expect_params(params, 1, kind);
      return book(nonneg(params[0], "t"));
    case GeneratorKind::kEmpty:
      expect_params(params, 1, kind);
      return empty(nonneg(params[0], "n"));
  }
  throw std::invalid_argument("unknown generator kind");
}

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  edges.reserve(a * b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  return Graph::from_edges(a + b, edges);
}

std::vector<std::size_t> turan_part_sizes(std::size_t r, std::size_t n) {
  if (r < 1) throw std::invalid_argument("turan graph needs r >= 1");
  std::vector<std::size_t> sizes(r, n / r);
  for (std::size_t i = 0; i < n % r; ++i) ++sizes[i];
  return sizes;
}

Graph turan(std::size_t r, std::size_t n) {
  const auto sizes = turan_part_sizes(r, n);
  std::vector<std::size_t> part(n);
  std::size_t v = 0;
  for (std::size_t p = 0; p < r; ++p)
    for (std::size_t i = 0; i < sizes[p]; ++i) part[v++] = p;
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (part[a] != part[b]) edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

Graph book(std::size_t t) {
  if (t < 1) throw std::invalid_argument("book needs at least one page");
  std::vector<Edge> edges{{0, 1}};
  for (Vertex p = 2; p < t + 2; ++p) {
    edges.push_back({0, p});
    edges.push_back({1, p});
  }
  return Graph::from_edges(t + 2, edges);
}

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  const std::size_t n2 = g2.order();
  std::vector<Edge> edges = g1.edges();
  edges.reserve(g1.size() + g2.size() + n1 * n2);
  for (const auto& e : g2.edges())
    edges.push_back({static_cast<Vertex>(e.u + n1), static_cast<Vertex>(e.v + n1)});
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < n2; ++v) edges.push_back({u, static_cast<Vertex>(n1 + v)});
  return Graph::from_edges(n1 + n2, edges);
}

Graph disjoint_copies(const Graph& g, std::size_t k) {
  if (k < 1) throw std::invalid_argument("disjoint_copies needs k >= 1");
  const auto base = g.edges();
  std::vector<Edge> edges;
  edges.reserve(base.size() * k);
  for (std::size_t c = 0; c < k; ++c) {
    const auto shift = static_cast<Vertex>(c * g.order());
    for (const auto& e : base) edges.push_back({e.u + shift, e.v + shift});
  }
  return Graph::from_edges(g.order() * k, edges);
}

Graph random_k_tree(std::size_t k, std::size_t n, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("k-tree needs k >= 1");
  if (n < k) throw std::invalid_argument("k-tree needs n >= k");
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cliques;
  std::vector<Vertex> base(k);
  for (Vertex v = 0; v < k; ++v) {
    base[v] = v;
    for (Vertex u = 0; u < v; ++u) edges.push_back({u, v});
  }
  cliques.push_back(base);
  for (auto v = static_cast<Vertex>(k); v < n; ++v) {
    // copy: push_back below may reallocate
    const std::vector<Vertex> host = cliques[uniform_below(rng, cliques.size())];
    for (const Vertex u : host) edges.push_back({u, v});
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::vector<Vertex> next;
      next.reserve(k);
      for (std::size_t i = 0; i < k; ++i)
        if (i != drop) next.push_back(host[i]);
      next.push_back(v);
      cliques.push_back(std::move(next));
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace gturan
