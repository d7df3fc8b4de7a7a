#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code with it beyond the Graph container and the edge list it returns.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gturan/graph.hpp"

namespace oracle {

using gturan::Edge;
using gturan::Graph;
using gturan::Vertex;

struct Mat {
  std::size_t n = 0;
  std::vector<std::vector<char>> adj;

  explicit Mat(std::size_t order = 0) : n(order), adj(order, std::vector<char>(order, 0)) {}
  explicit Mat(const Graph& g) : Mat(g.order()) {
    for (const Edge& e : g.edges()) add(e.u, e.v);
  }
  void add(std::size_t u, std::size_t v) { adj[u][v] = adj[v][u] = 1; }
  void remove(std::size_t u, std::size_t v) { adj[u][v] = adj[v][u] = 0; }
  bool has(std::size_t u, std::size_t v) const { return adj[u][v] != 0; }
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (has(u, v)) out.emplace_back(u, v);
    return out;
  }
  Graph to_graph() const {
    std::vector<Edge> es;
    for (auto [u, v] : edges()) es.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    return Graph::from_edges(n, es);
  }
};

/// Graph whose edges are the set bits of `mask` over pairs (i<j) in
/// lexicographic order.
inline Mat from_mask(std::size_t n, std::uint64_t mask) {
  Mat m(n);
  std::size_t bit = 0;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) m.add(u, v);
  return m;
}

inline std::uint64_t count_cliques(const Mat& m, std::size_t r) {
  std::uint64_t count = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == r) {
      ++count;
      return;
    }
    for (std::size_t v = from; v < m.n; ++v) {
      bool ok = true;
      for (auto u : pick) ok = ok && m.has(u, v);
      if (!ok) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

/// Every injective map from pattern to host preserving edges, reported as
/// vertex images. Stops when `visit` returns true.
inline bool for_each_injective(const Mat& host, const Mat& pattern,
                               const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> img;
  std::vector<char> used(host.n, 0);
  std::function<bool()> rec = [&]() -> bool {
    const std::size_t i = img.size();
    if (i == pattern.n) return visit(img);
    for (std::size_t h = 0; h < host.n; ++h) {
      if (used[h]) continue;
      img.push_back(h);
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = !pattern.has(i, j) || host.has(img[j], h);
      if (ok) {
        used[h] = 1;
        if (rec()) return true;
        used[h] = 0;
      }
      img.pop_back();
    }
    return false;
  };
  return rec();
}

inline bool contains(const Mat& host, const Mat& pattern) {
  if (pattern.n > host.n) return false;
  return for_each_injective(host, pattern, [](const auto&) { return true; });
}

/// k vertex-disjoint copies, by trying every combination of copy vertex sets.
inline bool contains_k_disjoint(const Mat& host, const Mat& pattern, std::size_t k) {
  if (k * pattern.n > host.n) return false;
  std::set<std::uint64_t> sets;
  for_each_injective(host, pattern, [&](const std::vector<std::size_t>& img) {
    std::uint64_t s = 0;
    for (auto v : img) s |= std::uint64_t{1} << v;
    sets.insert(s);
    return false;
  });
  const std::vector<std::uint64_t> list(sets.begin(), sets.end());
  std::function<bool(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t need, std::size_t from,
                                                                         std::uint64_t used) {
    if (need == 0) return true;
    for (std::size_t i = from; i < list.size(); ++i)
      if ((list[i] & used) == 0 && rec(need - 1, i + 1, used | list[i])) return true;
    return false;
  };
  return rec(k, 0, 0);
}

/// Proper c-colorability by trying all colorings.
inline bool colorable(const Mat& m, std::size_t colors) {
  std::vector<std::size_t> col(m.n, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v == m.n) return true;
    for (std::size_t c = 0; c < colors; ++c) {
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = !(m.has(u, v) && col[u] == c);
      if (!ok) continue;
      col[v] = c;
      if (rec(v + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

inline std::size_t chromatic_number(const Mat& m) {
  if (m.n == 0) return 0;
  std::size_t c = 1;
  while (!colorable(m, c)) ++c;
  return c;
}

/// Some single edge deletion lowers the chromatic number.
inline bool edge_critical(const Mat& m) {
  const std::size_t chi = chromatic_number(m);
  for (auto [u, v] : m.edges()) {
    Mat d = m;
    d.remove(u, v);
    if (chromatic_number(d) < chi) return true;
  }
  return false;
}

/// Isomorphism-invariant code: the minimum edge mask over all relabelings.
inline std::uint64_t min_code(const Mat& m) {
  std::vector<std::size_t> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < m.n; ++u)
      for (std::size_t v = u + 1; v < m.n; ++v, ++bit)
        if (m.has(perm[u], perm[v])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Mat& a, const Mat& b) { return a.n == b.n && min_code(a) == min_code(b); }

/// Number of isomorphism classes of n-vertex graphs (n <= 6).
inline std::size_t class_count(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> codes;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) codes.insert(min_code(from_mask(n, mask)));
  return codes.size();
}

struct Extremal {
  std::uint64_t value = 0;
  /// min_code of every extremal class.
  std::set<std::uint64_t> classes;
};

/// max N_r over all labeled n-vertex graphs without `copies` disjoint copies
/// of the pattern (n <= 6).
inline Extremal extremal_all_graphs(std::size_t n, std::size_t r, const Mat& pattern, std::size_t copies) {
  const std::size_t pairs = n * (n - 1) / 2;
  Extremal best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Mat g = from_mask(n, mask);
    const std::uint64_t value = count_cliques(g, r);
    if (value < best.value) continue;
    if (contains_k_disjoint(g, pattern, copies)) continue;
    if (value > best.value) {
      best.value = value;
      best.classes.clear();
    }
    best.classes.insert(min_code(g));
  }
  return best;
}

/// max (e + c N_r) with c = p/q, scaled by q, over F-free graphs (n <= 6).
inline Extremal phi_all_graphs(std::size_t n, std::size_t r, std::uint64_t p, std::uint64_t q, const Mat& pattern) {
  const std::size_t pairs = n * (n - 1) / 2;
  Extremal best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Mat g = from_mask(n, mask);
    const std::uint64_t value = q * g.edges().size() + p * count_cliques(g, r);
    if (value < best.value) continue;
    if (contains(g, pattern)) continue;
    if (value > best.value) {
      best.value = value;
      best.classes.clear();
    }
    best.classes.insert(min_code(g));
  }
  return best;
}

/// Minimum of e(A) + e(B) over all 2^n splits.
inline std::size_t min_internal_edges(const Mat& m) {
  std::size_t best = m.edges().size();
  for (std::uint64_t side = 0; side < (std::uint64_t{1} << m.n); ++side) {
    std::size_t internal = 0;
    for (auto [u, v] : m.edges()) internal += ((side >> u) & 1u) == ((side >> v) & 1u);
    best = std::min(best, internal);
  }
  return best;
}

/// Sorted r-subsets that are cliques.
inline std::vector<std::vector<std::size_t>> cliques(const Mat& m, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == r) {
      out.push_back(pick);
      return;
    }
    for (std::size_t v = from; v < m.n; ++v) {
      bool ok = true;
      for (auto u : pick) ok = ok && m.has(u, v);
      if (!ok) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return out;
}

/// Minimum sum of squared loads over every assignment. Single mode: each
/// (k+1)-clique picks one of its k-subsets. Pair mode: each triangle picks two
/// of its three edges.
inline std::uint64_t min_psi(const Mat& m, bool pair, std::size_t k) {
  const std::size_t source_size = pair ? 3 : k + 1;
  const auto sources = cliques(m, source_size);
  std::map<std::vector<std::size_t>, std::uint32_t> load;
  std::uint64_t best = ~std::uint64_t{0};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == sources.size()) {
      std::uint64_t psi = 0;
      for (const auto& [t, l] : load) psi += std::uint64_t{l} * l;
      best = std::min(best, psi);
      return;
    }
    const auto& s = sources[i];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      std::vector<std::vector<std::size_t>> chosen;
      if (pair) {
        // Exclude the edge opposite to vertex `drop`.
        for (std::size_t a = 0; a < 3; ++a)
          if (a != drop) chosen.push_back({std::min(s[drop], s[a]), std::max(s[drop], s[a])});
      } else {
        std::vector<std::size_t> sub;
        for (std::size_t a = 0; a < s.size(); ++a)
          if (a != drop) sub.push_back(s[a]);
        chosen.push_back(sub);
      }
      for (const auto& t : chosen) ++load[t];
      rec(i + 1);
      for (const auto& t : chosen) --load[t];
    }
  };
  rec(0);
  return sources.empty() ? 0 : best;
}

/// Any a < b < c in the set with a + c = 2b.
inline bool has_3ap(const std::vector<std::int64_t>& s) {
  const std::set<std::int64_t> members(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      const std::int64_t lo = std::min(s[i], s[j]);
      const std::int64_t hi = std::max(s[i], s[j]);
      if ((lo + hi) % 2 == 0 && lo != hi && members.count((lo + hi) / 2)) return true;
    }
  return false;
}

/// G(n, p) with p = num/den, deterministic in the engine state.
inline Mat random_graph(std::size_t n, std::uint32_t num, std::uint32_t den, std::mt19937_64& rng) {
  Mat m(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng() % den < num) m.add(u, v);
  return m;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  return perm;
}

}  // namespace oracle
