#include "gturan/construct.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "gturan/generators.hpp"

namespace gturan {

namespace {

constexpr std::int64_t kMinBase = 3;
constexpr std::int64_t kMaxBase = 32;

// Best candidate for one base: largest radius shell, plus the full digit
// family where it is progression-free (bases 3 and 4).
std::vector<std::int64_t> best_for_base(std::int64_t m, std::int64_t d) {
  const std::int64_t half = (d + 1) / 2;  // digits 0 .. half-1 satisfy 2a < d
  std::map<std::int64_t, std::vector<std::int64_t>> shells;
  std::vector<std::int64_t> family;
  for (std::int64_t x = 0; x < m; ++x) {
    std::int64_t rest = x;
    std::int64_t radius = 0;
    bool ok = true;
    while (rest > 0) {
      const std::int64_t digit = rest % d;
      if (digit >= half) {
        ok = false;
        break;
      }
      radius += digit * digit;
      rest /= d;
    }
    if (!ok) continue;
    shells[radius].push_back(x + 1);
    family.push_back(x + 1);
  }
  std::vector<std::int64_t> best;
  for (auto& [radius, members] : shells)
    if (members.size() > best.size()) best = std::move(members);
  if (half == 2 && family.size() > best.size()) best = std::move(family);
  return best;
}

}  // namespace

bool is_3ap_free(const std::vector<std::int64_t>& sorted) {
  if (sorted.empty()) return true;
  const std::int64_t lo = sorted.front();
  const std::int64_t hi = sorted.back();
  std::vector<bool> member(static_cast<std::size_t>(hi - lo + 1), false);
  for (const auto x : sorted) member[static_cast<std::size_t>(x - lo)] = true;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      const std::int64_t sum = sorted[i] + sorted[j];
      if (sum % 2 != 0) continue;
      const std::int64_t mid = sum / 2;
      if (mid != sorted[i] && mid != sorted[j] && member[static_cast<std::size_t>(mid - lo)]) return false;
    }
  return true;
}

APFreeSet behrend_set(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("behrend_set needs m >= 1");
  APFreeSet out;
  out.m = m;
  for (std::int64_t d = kMinBase; d <= kMaxBase; ++d) {
    auto candidate = best_for_base(m, d);
    if (candidate.size() > out.elements.size()) {
      out.elements = std::move(candidate);
      out.base = d;
    }
  }
  if (!is_3ap_free(out.elements)) throw std::logic_error("behrend_set produced a 3-term progression");
  return out;
}

TriangleSystem ruzsa_szemeredi(std::int64_t m, const std::vector<std::int64_t>& set) {
  if (m < 1) throw std::invalid_argument("ruzsa_szemeredi needs m >= 1");
  for (const auto a : set)
    if (a < 1 || a > m)
      throw std::invalid_argument("set element " + std::to_string(a) + " lies outside [1, " + std::to_string(m) + "]");
  std::vector<std::int64_t> s(set);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());

  const auto X = [](std::int64_t x) { return static_cast<Vertex>(x - 1); };
  const auto Y = [m](std::int64_t y) { return static_cast<Vertex>(m + y - 1); };
  const auto Z = [m](std::int64_t z) { return static_cast<Vertex>(3 * m + z - 1); };

  TriangleSystem ts;
  std::vector<Edge> edges;
  for (std::int64_t x = 1; x <= m; ++x)
    for (const auto a : s) {
      const Vertex u = X(x);
      const Vertex v = Y(x + a);
      const Vertex w = Z(x + 2 * a);
      edges.push_back({u, v});
      edges.push_back({v, w});
      edges.push_back({u, w});
      ts.triangles.push_back({u, v, w});
    }
  std::sort(ts.triangles.begin(), ts.triangles.end());
  ts.graph = Graph::from_edges(static_cast<std::size_t>(6 * m), edges);
  return ts;
}

bool verify_linear_triangle_system(const TriangleSystem& ts) {
  std::vector<Triangle> listed;
  for (auto t : ts.triangles) {
    std::sort(t.begin(), t.end());
    listed.push_back(t);
  }
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return false;
  if (listed != enumerate_triangles(ts.graph)) return false;
  for (const auto& e : ts.graph.edges())
    if (common_neighbors(ts.graph, e.u, e.v) != 1) return false;
  return true;
}

Graph matched_bipartite(std::size_t n) {
  if (n < 2) throw std::invalid_argument("matched_bipartite needs n >= 2");
  const std::size_t big = (n + 1) / 2;
  auto edges = complete_bipartite(big, n - big).edges();
  for (Vertex v = 0; v + 1 < big; v += 2) edges.push_back({v, v + 1});
  return Graph::from_edges(n, edges);
}

Graph apex_turan(std::size_t k, std::size_t n) {
  if (k < 1 || n < k) throw std::invalid_argument("apex_turan needs 1 <= k <= n");
  return join(complete(k - 1), turan(2, n - k + 1));
}

}  // namespace gturan
