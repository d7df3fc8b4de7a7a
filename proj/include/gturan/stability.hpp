#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gturan/graph.hpp"
#include "gturan/rational.hpp"
#include "gturan/theta.hpp"

namespace gturan {

/// Largest order solved by exhaustive bipartition search.
inline constexpr std::size_t kMaxExactBipartitionOrder = 20;

struct PeelResult {
  /// Surviving vertices, ascending.
  std::vector<Vertex> kept;
  /// (vertex, degree at removal) in removal order.
  std::vector<std::pair<Vertex, std::size_t>> removal_order;
  Rational alpha;
};

/// Repeatedly deletes a minimum-degree vertex (lowest index on ties) while
/// its degree is below alpha times the current order. alpha must lie in
/// (0, 1).
PeelResult degree_peel(const Graph& g, const Rational& alpha);

struct Bipartition {
  std::vector<Vertex> part_a;
  std::vector<Vertex> part_b;
  std::size_t internal_edges = 0;
  /// True when found by exhaustive search, false for local search.
  bool exact = false;
};

struct BipartitionOptions {
  /// Random restarts of the local search (orders above the exact limit).
  std::size_t budget = 32;
  std::uint64_t seed = 0;
  /// Extra starting points: side[v] == true puts v in A.
  std::vector<std::vector<bool>> seeds;
  std::size_t threads = 1;
};

/// Split minimizing e(A) + e(B). Exhaustive up to kMaxExactBipartitionOrder
/// vertices; beyond that, single-vertex moves to a fixpoint from a 2-coloring
/// start (if one exists), the given seeds and random restarts. Vertex 0 is in
/// A; ties go to the lexicographically least A. The result admits no
/// improving single-vertex move.
Bipartition min_internal_bipartition(const Graph& g, const BipartitionOptions& options = {});

enum class ClauseStatus { kPass, kFail, kNotCertified, kNotAsserted };

std::string_view to_string(ClauseStatus status);

struct StabilityReport {
  std::size_t n = 0;
  Rational eps;
  Rational alpha;
  std::size_t edges = 0;

  /// e(G) >= n^2/4 - eps^2 n^2.
  bool edge_hypothesis = false;
  bool forbidden_free = false;
  bool hypothesis_ok = false;

  PeelResult peel;
  std::size_t survivor = 0;
  /// (1 - 2 eps) n.
  Rational survivor_threshold;
  std::size_t survivor_min_degree = 0;
  bool survivor_bipartite = false;
  Bipartition bipartition;
  /// (1 - eps)^2 n / 2.
  Rational part_bound;

  ClauseStatus survivor_clause = ClauseStatus::kNotAsserted;
  ClauseStatus bipartite_clause = ClauseStatus::kNotAsserted;
  ClauseStatus part_size_clause = ClauseStatus::kNotAsserted;
  ClauseStatus min_degree_clause = ClauseStatus::kNotAsserted;
};

/// Peels with alpha = 1/2 - eps, splits the survivor, and checks each
/// conclusion of the stability statement. Clauses are only asserted when the
/// hypotheses (edge count, F-freeness) hold. Throws std::invalid_argument
/// unless 0 < eps < 1/2 and spec is edge-critical.
StabilityReport stability_extract(const Graph& g, const Rational& eps, const ThetaSpec& spec,
                                  const BipartitionOptions& options = {});

}  // namespace gturan
