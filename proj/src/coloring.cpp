#include "gturan/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "gturan/errors.hpp"
#include "gturan/properties.hpp"

namespace gturan {

namespace {

// Leaves of distinct colors around v, lowest leaf first per new color.
std::vector<Vertex> rainbow_leaves(const EdgeColoring& c, Vertex v, std::size_t k) {
  std::vector<Vertex> leaves;
  std::set<Color> colors;
  for (const auto& [w, col] : c.incident(v)) {
    if (leaves.size() == k) break;
    if (colors.insert(col).second) leaves.push_back(w);
  }
  return leaves;
}

ColoredWitness star(Vertex center, std::vector<Vertex> leaves) {
  ColoredWitness w;
  w.kind = WitnessKind::kRainbowStar;
  w.center = center;
  w.leaves = std::move(leaves);
  return w;
}

ColoredWitness matching(Color color, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  ColoredWitness w;
  w.kind = WitnessKind::kMonochromaticMatching;
  w.color = color;
  w.matching = std::move(edges);
  return w;
}

// Maximum matching among edges of one color (augmenting paths from A).
std::vector<Edge> max_color_matching(const EdgeColoring& c, Color color) {
  const std::size_t n = c.host().order();
  std::vector<std::int64_t> mate(n, -1);
  std::vector<char> seen;
  const std::function<bool(Vertex)> augment = [&](Vertex a) {
    for (const auto& [b, col] : c.incident(a)) {
      if (col != color || seen[b]) continue;
      seen[b] = 1;
      if (mate[b] < 0 || augment(static_cast<Vertex>(mate[b]))) {
        mate[b] = a;
        return true;
      }
    }
    return false;
  };
  for (const Vertex a : c.part_a()) {
    seen.assign(n, 0);
    augment(a);
  }
  std::vector<Edge> out;
  for (Vertex b = 0; b < n; ++b)
    if (mate[b] >= 0) out.push_back(make_edge(static_cast<Vertex>(mate[b]), b));
  return out;
}

}  // namespace

EdgeColoring::EdgeColoring(Graph host, std::vector<bool> in_a) : host_(std::move(host)), in_a_(std::move(in_a)) {
  if (in_a_.size() != host_.order()) throw std::invalid_argument("part declaration has wrong length");
  incident_.resize(host_.order());
  for (Vertex v = 0; v < host_.order(); ++v)
    for (const Vertex w : host_.neighbors(v)) {
      if (in_a_[v] == in_a_[w])
        throw std::invalid_argument("edge (" + std::to_string(v) + "," + std::to_string(w) +
                                    ") lies inside one part; host must be bipartite");
      incident_[v].push_back({w, 0});
    }
}

EdgeColoring EdgeColoring::complete_bipartite(std::size_t a, std::size_t b, Color initial) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, static_cast<Vertex>(a + v)});
  std::vector<bool> in_a(a + b, false);
  for (std::size_t v = 0; v < a; ++v) in_a[v] = true;
  EdgeColoring c(Graph::from_edges(a + b, edges), std::move(in_a));
  for (auto& inc : c.incident_)
    for (auto& entry : inc) entry.second = initial;
  return c;
}

EdgeColoring EdgeColoring::parse(std::string_view text) {
  std::vector<std::pair<Edge, Color>> entries;
  std::size_t n = 0;
  std::size_t offset = 0;
  while (offset < text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(offset, end - offset);
    std::size_t pos = 0;
    std::uint64_t fields[3] = {0, 0, 0};
    int count = 0;
    auto skip_space = [&] {
      while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    };
    skip_space();
    if (pos < line.size() && line[pos] != '#') {
      while (pos < line.size() && line[pos] != '#') {
        if (count == 3) throw ParseError("too many fields in coloring line", offset + pos);
        const auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), fields[count]);
        if (ec != std::errc{}) throw ParseError("expected a nonnegative integer", offset + pos);
        pos = static_cast<std::size_t>(ptr - line.data());
        ++count;
        skip_space();
      }
      if (count != 3) throw ParseError("coloring line needs 'u v color'", offset + pos);
      if (fields[0] == fields[1]) throw ParseError("self-loop in coloring", offset);
      if (fields[0] >= kMaxDenseOrder || fields[1] >= kMaxDenseOrder || fields[2] > 0xFFFFFFFFull)
        throw ParseError("value out of range", offset);
      entries.push_back({make_edge(static_cast<Vertex>(fields[0]), static_cast<Vertex>(fields[1])),
                         static_cast<Color>(fields[2])});
      n = std::max<std::size_t>(n, std::max(fields[0], fields[1]) + 1);
    }
    offset = end + 1;
  }
  std::vector<Edge> edges;
  for (const auto& [e, c] : entries) edges.push_back(e);
  const Graph host = Graph::from_edges(n, edges);
  if (host.size() != entries.size()) throw std::invalid_argument("coloring lists an edge twice");
  const auto parts = two_coloring(host);
  if (!parts) throw std::invalid_argument("colored host graph is not bipartite");
  std::vector<bool> in_a(n);
  for (Vertex v = 0; v < n; ++v) in_a[v] = (*parts)[v] == 0;
  EdgeColoring out(host, std::move(in_a));
  for (const auto& [e, c] : entries) out.set_color(e.u, e.v, c);
  return out;
}

std::vector<Vertex> EdgeColoring::part_a() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < host_.order(); ++v)
    if (in_a_[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> EdgeColoring::part_b() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < host_.order(); ++v)
    if (!in_a_[v]) out.push_back(v);
  return out;
}

std::size_t EdgeColoring::slot(Vertex u, Vertex v) const {
  if (u >= host_.order()) throw std::invalid_argument("vertex out of range");
  const auto& inc = incident_[u];
  const auto it = std::lower_bound(inc.begin(), inc.end(), v, [](const auto& p, Vertex x) { return p.first < x; });
  if (it == inc.end() || it->first != v)
    throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v) + ") is not a host edge");
  return static_cast<std::size_t>(it - inc.begin());
}

Color EdgeColoring::color(Vertex u, Vertex v) const { return incident_[u][slot(u, v)].second; }

void EdgeColoring::set_color(Vertex u, Vertex v, Color c) {
  incident_[u][slot(u, v)].second = c;
  incident_[v][slot(v, u)].second = c;
}

std::string EdgeColoring::to_text() const {
  std::string out;
  for (const auto& e : host_.edges())
    out += std::to_string(e.u) + ' ' + std::to_string(e.v) + ' ' + std::to_string(color(e.u, e.v)) + '\n';
  return out;
}

std::string_view to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kRainbowStar: return "RainbowStar";
    case WitnessKind::kMonochromaticMatching: return "MonochromaticMatching";
    case WitnessKind::kNotFound: return "NotFound";
  }
  return "unknown";
}

ColoredWitness rainbow_or_matching(const EdgeColoring& c, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  const auto part_a = c.part_a();
  const auto part_b = c.part_b();

  for (const Vertex a : part_a) {
    auto leaves = rainbow_leaves(c, a, k);
    if (leaves.size() == k) return star(a, std::move(leaves));
  }

  // Every A-vertex now sees fewer than k colors: keep its largest color
  // class as a monochromatic star.
  struct Star {
    Vertex center;
    Color color;
    std::vector<Vertex> leaves;
  };
  std::vector<Star> stars;
  for (const Vertex a : part_a) {
    std::map<Color, std::vector<Vertex>> classes;
    for (const auto& [b, col] : c.incident(a)) classes[col].push_back(b);
    if (classes.empty()) continue;
    auto best = classes.begin();
    for (auto it = classes.begin(); it != classes.end(); ++it)
      if (it->second.size() > best->second.size()) best = it;
    stars.push_back({a, best->first, best->second});
  }

  std::map<Color, std::vector<const Star*>> by_color;
  for (const auto& s : stars) by_color[s.color].push_back(&s);
  for (const auto& [col, group] : by_color) {
    std::set<Vertex> taken;
    std::vector<Edge> edges;
    for (const Star* s : group) {
      for (const Vertex b : s->leaves)
        if (!taken.count(b)) {
          taken.insert(b);
          edges.push_back(make_edge(s->center, b));
          break;
        }
      if (edges.size() == k + 1) return matching(col, std::move(edges));
    }
  }

  // One star per color; a B-vertex lying in k of them is a rainbow center.
  std::vector<const Star*> kept;
  for (const auto& [col, group] : by_color) kept.push_back(group.front());
  for (const Vertex b : part_b) {
    std::vector<Vertex> leaves;
    for (const Star* s : kept) {
      if (std::binary_search(s->leaves.begin(), s->leaves.end(), b)) leaves.push_back(s->center);
      if (leaves.size() == k) return star(b, std::move(leaves));
    }
  }

  for (const Vertex b : part_b) {
    auto leaves = rainbow_leaves(c, b, k);
    if (leaves.size() == k) return star(b, std::move(leaves));
  }
  std::set<Color> all_colors;
  for (const Vertex a : part_a)
    for (const auto& [b, col] : c.incident(a)) all_colors.insert(col);
  for (const Color col : all_colors) {
    auto edges = max_color_matching(c, col);
    if (edges.size() >= k + 1) {
      edges.resize(k + 1);
      return matching(col, std::move(edges));
    }
  }
  return {};
}

bool verify_witness(const EdgeColoring& c, std::size_t k, const ColoredWitness& w) {
  const Graph& g = c.host();
  if (w.kind == WitnessKind::kRainbowStar) {
    if (w.leaves.size() != k || w.center >= g.order()) return false;
    std::set<Vertex> leaves;
    std::set<Color> colors;
    for (const Vertex x : w.leaves) {
      if (!g.has_edge(w.center, x)) return false;
      leaves.insert(x);
      colors.insert(c.color(w.center, x));
    }
    return leaves.size() == k && colors.size() == k;
  }
  if (w.kind == WitnessKind::kMonochromaticMatching) {
    if (w.matching.size() != k + 1) return false;
    std::set<Vertex> ends;
    for (const auto& e : w.matching) {
      if (!g.has_edge(e.u, e.v) || c.color(e.u, e.v) != w.color) return false;
      ends.insert(e.u);
      ends.insert(e.v);
    }
    return ends.size() == 2 * (k + 1);
  }
  return false;
}

}  // namespace gturan
