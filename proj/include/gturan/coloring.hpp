#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

using Color = std::uint32_t;

/// Edge coloring of a bipartite host with declared parts A and B.
class EdgeColoring {
 public:
  /// `in_a[v]` declares the part of v. Throws std::invalid_argument when an
  /// edge lies inside a part. Every edge starts with color 0.
  EdgeColoring(Graph host, std::vector<bool> in_a);
  /// K_{a,b} with A = [0, a) and B = [a, a + b), all edges colored `initial`.
  static EdgeColoring complete_bipartite(std::size_t a, std::size_t b, Color initial = 0);
  /// One "u v color" line per edge; blank lines and '#' comments are skipped.
  /// Parts come from the 2-coloring of the host (lowest vertex of each
  /// component in A). Throws ParseError on malformed text and
  /// std::invalid_argument for a non-bipartite host.
  static EdgeColoring parse(std::string_view text);

  const Graph& host() const { return host_; }
  bool in_a(Vertex v) const { return in_a_[v]; }
  std::vector<Vertex> part_a() const;
  std::vector<Vertex> part_b() const;

  /// Throws std::invalid_argument when uv is not a host edge.
  Color color(Vertex u, Vertex v) const;
  void set_color(Vertex u, Vertex v, Color c);
  /// Colored incidences of v, ordered by neighbor.
  const std::vector<std::pair<Vertex, Color>>& incident(Vertex v) const { return incident_[v]; }

  std::string to_text() const;

 private:
  std::size_t slot(Vertex u, Vertex v) const;

  Graph host_;
  std::vector<bool> in_a_;
  std::vector<std::vector<std::pair<Vertex, Color>>> incident_;
};

enum class WitnessKind { kRainbowStar, kMonochromaticMatching, kNotFound };

std::string_view to_string(WitnessKind kind);

struct ColoredWitness {
  WitnessKind kind = WitnessKind::kNotFound;
  /// Rainbow star: center and its k leaves.
  Vertex center = 0;
  std::vector<Vertex> leaves;
  /// Monochromatic matching: k+1 disjoint edges of `color`.
  std::vector<Edge> matching;
  Color color = 0;
};

/// Rainbow K_{1,k} or a monochromatic matching of size k+1. Tries, in order:
/// a rainbow star centered in A; monochromatic stars (one per A-vertex)
/// assembled greedily into per-color matchings; one star per color and a
/// rainbow star centered in B; finally an exhaustive check for either
/// structure. kNotFound means neither structure exists.
ColoredWitness rainbow_or_matching(const EdgeColoring& coloring, std::size_t k);

/// Structural check of a witness against the coloring.
bool verify_witness(const EdgeColoring& coloring, std::size_t k, const ColoredWitness& witness);

}  // namespace gturan
