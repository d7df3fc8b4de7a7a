#include "gturan/properties.hpp"

#include <deque>
#include <set>

namespace gturan {

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> color(g.order(), kUnset);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] != kUnset) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (const Vertex w : g.neighbors(v)) {
        if (color[w] == kUnset) {
          color[w] = static_cast<std::uint8_t>(1 - color[v]);
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

bool has_treewidth_at_most_2(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<bool> gone(n, false);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < n; ++v)
    if (adj[v].size() <= 2) queue.push_back(v);
  std::size_t left = n;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (gone[v] || adj[v].size() > 2) continue;
    gone[v] = true;
    --left;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (const Vertex w : nb) adj[w].erase(v);
    if (nb.size() == 2) {
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    adj[v].clear();
    for (const Vertex w : nb)
      if (adj[w].size() <= 2) queue.push_back(w);
  }
  return left == 0;
}

}  // namespace gturan
