#pragma once

#include <cstdint>
#include <vector>

#include "gturan/cliques.hpp"
#include "gturan/graph.hpp"

namespace gturan {

/// Subset of [1, m] without three-term arithmetic progressions.
struct APFreeSet {
  std::int64_t m = 0;
  std::vector<std::int64_t> elements;
  /// Base whose digit family produced the set (0 when not from behrend_set).
  std::int64_t base = 0;
};

/// True iff the ascending sequence has no a < b < c with a + c = 2b.
bool is_3ap_free(const std::vector<std::int64_t>& sorted);

/// Largest digit-sphere set over bases 3..32: integers x + 1 <= m whose
/// base-d digits are all below d/2 and whose digit vectors share one squared
/// norm. Bases 3 and 4 also offer the whole {0,1}-digit family. Ties go to
/// the smaller base. The result is checked before it is returned.
APFreeSet behrend_set(std::int64_t m);

struct TriangleSystem {
  Graph graph;
  std::vector<Triangle> triangles;
};

/// Tripartite graph on X = [m], Y = [2m], Z = [3m] with the triangles
/// {x, x+a, x+2a} for x in X and a in the set. Vertex layout: x at x-1,
/// y at m+y-1, z at 3m+z-1. Throws std::invalid_argument if the set leaves
/// [1, m].
TriangleSystem ruzsa_szemeredi(std::int64_t m, const std::vector<std::int64_t>& set);

/// Every edge lies in exactly one triangle and the listed triangles are all
/// the triangles of the graph.
bool verify_linear_triangle_system(const TriangleSystem& ts);

/// K_{ceil(n/2), floor(n/2)} (larger part first) plus the matching
/// (0,1), (2,3), ... inside the larger part.
Graph matched_bipartite(std::size_t n);

/// K_{k-1} joined with T_2(n-k+1). Requires 1 <= k <= n.
Graph apex_turan(std::size_t k, std::size_t n);

}  // namespace gturan
