#include "gturan/matcher.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "gturan/errors.hpp"
#include "gturan/properties.hpp"

namespace gturan {

namespace {

// Host restricted to `allowed` has no odd cycle.
bool restricted_bipartite(const BitGraph& host, const VertexSet& allowed) {
  const std::size_t n = host.order();
  std::vector<std::int8_t> color(n, -1);
  std::vector<Vertex> stack;
  for (auto s = allowed.first(); s >= 0; s = allowed.next(static_cast<std::size_t>(s) + 1)) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    stack.assign(1, static_cast<Vertex>(s));
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      const auto row = host.row(v);
      for (std::size_t i = 0; i < host.words(); ++i) {
        std::uint64_t w = row[i] & allowed.word(i);
        while (w != 0) {
          const auto x = static_cast<Vertex>((i << 6) + static_cast<std::size_t>(std::countr_zero(w)));
          w &= w - 1;
          if (color[x] < 0) {
            color[x] = static_cast<std::int8_t>(1 - color[v]);
            stack.push_back(x);
          } else if (color[x] == color[v]) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

class Matcher {
 public:
  Matcher(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed, const EmbeddingVisitor& visit)
      : host_(host),
        pat_(pattern),
        words_(host.words()),
        allowed_(allowed),
        visit_(visit),
        map_(pattern.order(), 0),
        fixed_(pattern.order(), false),
        used_(words_, 0),
        buf_(pattern.order() * words_, 0),
        allowed_deg_(host.order(), 0) {
    for (auto x = allowed.first(); x >= 0; x = allowed.next(static_cast<std::size_t>(x) + 1)) {
      std::size_t d = 0;
      const auto row = host.row(static_cast<Vertex>(x));
      for (std::size_t i = 0; i < words_; ++i)
        d += static_cast<std::size_t>(std::popcount(row[i] & allowed.word(i)));
      allowed_deg_[static_cast<std::size_t>(x)] = static_cast<std::uint32_t>(d);
    }
  }

  bool run(const Anchor& anchor) {
    const std::size_t p = pat_.order();
    if (p == 0) return visit_(map_);
    if (anchor.kind == Anchor::Kind::kNone) return extend(0);
    if (anchor.kind == Anchor::Kind::kVertex) {
      const Vertex s = anchor.u;
      if (s >= host_.order() || !allowed_.test(s)) return false;
      for (Vertex a = 0; a < p; ++a) {
        if (allowed_deg_[s] < pat_.degree(a)) continue;
        if (place_fixed(a, s) && extend(0)) return true;
        unplace_fixed(a, s);
      }
      return false;
    }
    const Vertex u = anchor.u;
    const Vertex v = anchor.v;
    if (u >= host_.order() || v >= host_.order() || !allowed_.test(u) || !allowed_.test(v) || !host_.has_edge(u, v))
      return false;
    for (const auto& e : pat_.edges()) {
      for (int flip = 0; flip < 2; ++flip) {
        const Vertex a = flip ? e.v : e.u;
        const Vertex b = flip ? e.u : e.v;
        if (allowed_deg_[u] < pat_.degree(a) || allowed_deg_[v] < pat_.degree(b)) continue;
        place_fixed(a, u);
        place_fixed(b, v);
        const bool stop = extend(0);
        unplace_fixed(b, v);
        unplace_fixed(a, u);
        if (stop) return true;
      }
    }
    return false;
  }

 private:
  bool place_fixed(Vertex a, Vertex x) {
    map_[a] = x;
    fixed_[a] = true;
    used_[x >> 6] |= std::uint64_t{1} << (x & 63);
    return true;
  }
  void unplace_fixed(Vertex a, Vertex x) {
    fixed_[a] = false;
    used_[x >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  bool extend(Vertex i) {
    const std::size_t p = pat_.order();
    while (i < p && fixed_[i]) ++i;
    if (i == p) return visit_(map_);
    std::uint64_t* cand = buf_.data() + i * words_;
    for (std::size_t w = 0; w < words_; ++w) cand[w] = allowed_.word(w) & ~used_[w];
    // Constraints from every pattern neighbor that already has an image.
    for (std::uint16_t nb = pat_.row(i); nb != 0; nb &= static_cast<std::uint16_t>(nb - 1)) {
      const auto j = static_cast<Vertex>(std::countr_zero(nb));
      if (j >= i && !fixed_[j]) continue;
      const auto row = host_.row(map_[j]);
      for (std::size_t w = 0; w < words_; ++w) cand[w] &= row[w];
    }
    const std::size_t need = pat_.degree(i);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = cand[w];
      while (bits != 0) {
        const auto x = static_cast<Vertex>((w << 6) + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
        if (allowed_deg_[x] < need) continue;
        map_[i] = x;
        used_[w] |= std::uint64_t{1} << (x & 63);
        const bool stop = extend(i + 1);
        used_[w] &= ~(std::uint64_t{1} << (x & 63));
        if (stop) return true;
      }
    }
    return false;
  }

  const BitGraph& host_;
  const Pattern& pat_;
  std::size_t words_;
  const VertexSet& allowed_;
  const EmbeddingVisitor& visit_;
  Embedding map_;
  std::vector<bool> fixed_;
  std::vector<std::uint64_t> used_;
  std::vector<std::uint64_t> buf_;
  std::vector<std::uint32_t> allowed_deg_;
};

VertexSet minus_vertices(VertexSet set, const Embedding& e) {
  for (const Vertex x : e) set.reset(x);
  return set;
}

// Greedy find-and-remove; returns the copies found (at most k).
std::vector<Embedding> greedy_pack(const BitGraph& host, const Pattern& pattern, std::size_t k, VertexSet allowed) {
  std::vector<Embedding> out;
  while (out.size() < k) {
    auto e = first_embedding(host, pattern, allowed);
    if (!e) break;
    allowed = minus_vertices(allowed, *e);
    out.push_back(std::move(*e));
  }
  return out;
}

// True when some set of at most `budget` vertices meets every copy in
// `allowed`; k disjoint copies are then impossible for k > budget.
bool hitting_set_exists(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed, std::size_t budget) {
  const auto e = first_embedding(host, pattern, allowed);
  if (!e) return true;
  if (budget == 0) return false;
  for (const Vertex x : *e) {
    VertexSet rest = allowed;
    rest.reset(x);
    if (hitting_set_exists(host, pattern, rest, budget - 1)) return true;
  }
  return false;
}

// Exhaustive packing; copies are chosen in order of strictly increasing
// minimum host vertex.
bool exact_pack(const BitGraph& host, const Pattern& pattern, std::size_t k, const VertexSet& allowed,
                std::vector<Embedding>& out) {
  const std::size_t p = pattern.order();
  if (k == 0) return true;
  if (allowed.count() < k * p) return false;
  if (k == 1) {
    auto e = first_embedding(host, pattern, allowed);
    if (!e) return false;
    out.push_back(std::move(*e));
    return true;
  }
  for (auto s = allowed.first(); s >= 0; s = allowed.next(static_cast<std::size_t>(s) + 1)) {
    VertexSet window = allowed;
    window.drop_below(static_cast<Vertex>(s));
    if (window.count() < k * p) break;
    std::set<std::vector<Vertex>> seen;
    bool found = false;
    for_each_embedding(host, pattern, window, Anchor::vertex(static_cast<Vertex>(s)), [&](const Embedding& e) {
      std::vector<Vertex> key(e);
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) return false;
      VertexSet rest = minus_vertices(window, e);
      rest.drop_below(static_cast<Vertex>(s) + 1);
      out.push_back(e);
      if (exact_pack(host, pattern, k - 1, rest, out)) {
        found = true;
        return true;
      }
      out.pop_back();
      return false;
    });
    if (found) return true;
  }
  return false;
}

}  // namespace

Pattern::Pattern(const Graph& pattern) : graph_(pattern), n_(pattern.order()), edges_(pattern.edges()) {
  if (n_ > kMaxPatternOrder)
    throw LimitExceeded("pattern graphs are limited to " + std::to_string(kMaxPatternOrder) + " vertices, got " +
                        std::to_string(n_));
  rows_.assign(n_, 0);
  for (const auto& e : edges_) {
    rows_[e.u] |= static_cast<std::uint16_t>(1u << e.v);
    rows_[e.v] |= static_cast<std::uint16_t>(1u << e.u);
  }
  bipartite_ = is_bipartite(pattern);
}

bool for_each_embedding(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed,
                        const Anchor& anchor, const EmbeddingVisitor& visit) {
  if (pattern.order() > allowed.count()) return false;
  Matcher m(host, pattern, allowed, visit);
  return m.run(anchor);
}

std::optional<Embedding> first_embedding(const BitGraph& host, const Pattern& pattern, const VertexSet& allowed,
                                         const Anchor& anchor) {
  std::optional<Embedding> out;
  for_each_embedding(host, pattern, allowed, anchor, [&](const Embedding& e) {
    out = e;
    return true;
  });
  return out;
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& embedding) {
  if (embedding.size() != pattern.order()) return false;
  std::vector<Vertex> sorted(embedding);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const Vertex x : embedding)
    if (x >= host.order()) return false;
  for (const auto& e : pattern.edges())
    if (!host.has_edge(embedding[e.u], embedding[e.v])) return false;
  return true;
}

std::optional<std::vector<Embedding>> pack_copies(const BitGraph& host, const Pattern& pattern, std::size_t k,
                                                  const VertexSet& allowed) {
  if (k == 0) throw std::invalid_argument("number of copies must be positive");
  if (k * pattern.order() > allowed.count()) return std::nullopt;
  if (!pattern.bipartite() && restricted_bipartite(host, allowed)) return std::nullopt;
  auto greedy = greedy_pack(host, pattern, k, allowed);
  if (greedy.size() == k) return greedy;
  if (greedy.empty()) return std::nullopt;
  if (hitting_set_exists(host, pattern, allowed, k - 1)) return std::nullopt;
  std::vector<Embedding> out;
  if (exact_pack(host, pattern, k, allowed, out)) return out;
  return std::nullopt;
}

std::optional<std::vector<Embedding>> pack_copies_through_edge(const BitGraph& host, const Pattern& pattern,
                                                               std::size_t k, const VertexSet& allowed, Vertex u,
                                                               Vertex v) {
  if (k == 0) throw std::invalid_argument("number of copies must be positive");
  if (k * pattern.order() > allowed.count()) return std::nullopt;
  if (k == 1) {
    auto e = first_embedding(host, pattern, allowed, Anchor::edge(u, v));
    if (!e) return std::nullopt;
    return std::vector<Embedding>{std::move(*e)};
  }
  {
    VertexSet rest = allowed;
    rest.reset(u);
    rest.reset(v);
    auto others = greedy_pack(host, pattern, k - 1, rest);
    if (others.size() == k - 1) {
      VertexSet free = allowed;
      for (const auto& e : others) free = minus_vertices(free, e);
      if (auto e = first_embedding(host, pattern, free, Anchor::edge(u, v))) {
        others.insert(others.begin(), std::move(*e));
        return others;
      }
    }
  }
  std::set<std::vector<Vertex>> seen;
  std::optional<std::vector<Embedding>> out;
  for_each_embedding(host, pattern, allowed, Anchor::edge(u, v), [&](const Embedding& e) {
    std::vector<Vertex> key(e);
    std::sort(key.begin(), key.end());
    if (!seen.insert(key).second) return false;
    if (auto rest = pack_copies(host, pattern, k - 1, minus_vertices(allowed, e))) {
      rest->insert(rest->begin(), e);
      out = std::move(*rest);
      return true;
    }
    return false;
  });
  return out;
}

}  // namespace gturan
