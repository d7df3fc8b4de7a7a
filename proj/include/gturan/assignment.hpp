#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"

namespace gturan {

inline constexpr std::size_t kMaxAssignmentOrder = 64;

/// single(k): every (k+1)-clique picks one of its k-cliques.
/// pair: every triangle picks two of its three edges.
struct AssignmentMode {
  enum class Kind { kSingle, kPair };
  Kind kind = Kind::kSingle;
  std::size_t k = 2;

  static AssignmentMode single(std::size_t k);
  static AssignmentMode pair() { return {Kind::kPair, 2}; }
  /// "single:k" or "pair".
  static AssignmentMode parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const AssignmentMode&, const AssignmentMode&) = default;
};

struct CliqueAssignment {
  AssignmentMode mode;
  /// Source cliques in lexicographic order.
  std::vector<std::vector<Vertex>> sources;
  /// Every possible target (k-cliques, or edges in pair mode), lexicographic.
  std::vector<std::vector<Vertex>> targets;
  /// Per source, the option index: the chosen target in single mode, the
  /// excluded edge in pair mode. Options of a source are its sub-cliques in
  /// lexicographic order.
  std::vector<std::uint32_t> option;
  /// Per source, indices into `targets` of the chosen sub-cliques.
  std::vector<std::vector<std::uint32_t>> chosen;
  /// r(.) per target.
  std::vector<std::uint32_t> loads;
  /// Sum of squared loads.
  std::uint64_t psi = 0;
};

/// Builds the assignment given by explicit option indices (one per source).
CliqueAssignment assignment_from_options(const Graph& g, AssignmentMode mode,
                                         const std::vector<std::uint32_t>& options);

/// Greedy least-load start, single-source swaps to a fixpoint, then
/// improving reassignment chains until none exists. The result has the
/// smallest possible psi. Throws std::logic_error if more than 10 m^2
/// improvements are made (m = number of sources).
CliqueAssignment minimize_psi(const Graph& g, AssignmentMode mode);

struct LocalViolation {
  std::size_t source = 0;
  /// Target whose load breaks the condition.
  std::uint32_t alternative = 0;
  std::string detail;
};

/// single: r(W') >= r(W0) - 1 for every alternative W' of every source.
/// pair: r(e*) >= max(r(e), r(e')) - 1 for the excluded edge e*.
/// Throws std::invalid_argument for a structurally invalid assignment.
std::vector<LocalViolation> verify_local_optimality(const Graph& g, const CliqueAssignment& a);

struct LoadProfile {
  /// load value -> number of targets carrying it (zeros included).
  std::map<std::uint32_t, std::size_t> histogram;
  std::uint32_t max_load = 0;
};

LoadProfile load_profile(const CliqueAssignment& a);

/// "u v w -> u v" per source, then a "# loads" histogram line.
std::string dump_assignment(const CliqueAssignment& a);

}  // namespace gturan
