#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gturan/graph.hpp"
#include "gturan/rational.hpp"
#include "gturan/theta.hpp"

namespace gturan {

/// Largest order handled by exhaustive enumeration.
inline constexpr std::size_t kMaxOracleOrder = 10;
inline constexpr std::size_t kMaxPhiOrder = 9;
inline constexpr std::size_t kMaxHeuristicOrder = 200;
inline constexpr std::size_t kWitnessCap = 100;

/// Graphs containing `copies` vertex-disjoint copies of `pattern` are
/// forbidden.
struct ForbiddenSpec {
  Graph pattern;
  std::size_t copies = 1;
  /// Display form, e.g. "theta(1,2,2)" or a graph6 string.
  std::string label;

  static ForbiddenSpec theta(const ThetaSpec& spec, std::size_t copies = 1);
  static ForbiddenSpec graph(const Graph& pattern, std::size_t copies, std::string label);
  std::string describe() const;
};

/// True iff g contains `copies` disjoint copies of the pattern.
bool contains_forbidden(const Graph& g, const ForbiddenSpec& forbidden);

enum class EnumerationStrategy { kAuto, kLevelDedup, kCanonicalAugmentation };

struct EnumerationOptions {
  EnumerationStrategy strategy = EnumerationStrategy::kAuto;
  std::size_t threads = 1;
};

struct EnumerationStats {
  /// Forbidden-free isomorphism classes visited.
  std::uint64_t examined = 0;
  /// One-edge extensions rejected for containing the forbidden structure
  /// (distinct classes per parent).
  std::uint64_t pruned = 0;
};

/// Receives every forbidden-free class exactly once. Workers own separate
/// forks; forks are merged back in a fixed order.
class ClassVisitor {
 public:
  virtual ~ClassVisitor() = default;
  /// `edge_maximal`: no single added edge keeps the graph forbidden-free.
  virtual void visit(const BitGraph& g, bool edge_maximal) = 0;
  virtual std::unique_ptr<ClassVisitor> fork() const = 0;
  virtual void merge(ClassVisitor& other) = 0;
};

/// Walks all forbidden-free isomorphism classes on n vertices (n <= 10),
/// growing graphs one edge at a time from the empty graph. kAuto uses
/// per-level canonical dedup up to 8 vertices and canonical augmentation
/// (a child is kept only when deleting its canonically last edge gives back
/// the parent) above. `forbidden` may be null.
EnumerationStats enumerate_classes(std::size_t n, const ForbiddenSpec* forbidden, ClassVisitor& visitor,
                                   const EnumerationOptions& options = {});

struct ExtremalResult {
  std::size_t n = 0;
  std::string objective;
  std::string forbidden;
  Rational value;
  /// graph6 of extremal graphs, sorted by edge count then canonical key,
  /// capped at kWitnessCap.
  std::vector<std::string> witnesses;
  std::size_t witness_count = 0;
  /// False when some extremal graphs were not listed exhaustively.
  bool witnesses_complete = true;
  std::uint64_t examined = 0;
  std::uint64_t pruned = 0;
  /// True for exhaustive results, false for certified lower bounds.
  bool exact = true;
};

/// Exact ex(n, K_r, forbidden) for n <= kMaxOracleOrder; larger n throws
/// LimitExceeded (use edge_maximal_lower_bound).
ExtremalResult extremal_oracle(std::size_t n, std::size_t r, const ForbiddenSpec& forbidden,
                               const EnumerationOptions& options = {});

struct HeuristicOptions {
  std::size_t budget = 16;
  std::uint64_t seed = 0;
  /// Also seed with apex_turan(k, n) for this k (0 = use forbidden.copies).
  std::size_t k = 0;
};

/// Certified lower bound on ex(n, K_r, forbidden): random greedy
/// edge-maximal graphs plus extensions of the standard constructions.
ExtremalResult edge_maximal_lower_bound(std::size_t n, std::size_t r, const ForbiddenSpec& forbidden,
                                        const HeuristicOptions& options = {});

struct PhiResult {
  ExtremalResult result;
  std::uint64_t mantel_bound = 0;
  bool equals_bound = false;
  bool exceeds_bound = false;
  /// The only extremal graph is T_2(n).
  bool unique_turan_witness = false;
};

/// Exact maximum of e(G) + c N_r(G) over F-free graphs, F = build_theta(spec),
/// n <= kMaxPhiOrder. Throws std::invalid_argument unless spec is
/// edge-critical and c > 0.
PhiResult phi_oracle(std::size_t n, std::size_t r, const Rational& c, const ThetaSpec& spec,
                     const EnumerationOptions& options = {});

struct FormulaRow {
  std::size_t n = 0;
  std::optional<std::uint64_t> formula;
  std::uint64_t best = 0;
  bool exact = false;
  std::optional<std::int64_t> gap;
  /// K_{k|F|-1} padded with isolated vertices.
  std::uint64_t complete_competitor = 0;
  std::size_t witness_count = 0;
  std::string witness;
};

struct FormulaReport {
  std::size_t k = 0;
  std::size_t r = 0;
  ThetaSpec spec;
  bool formula_regime = false;
  std::string note;
  std::vector<FormulaRow> rows;
  /// Smallest n in range from which the formula is at least the complete
  /// competitor for every larger n in range.
  std::optional<std::size_t> crossover;
};

struct FormulaReportOptions {
  std::size_t n_min = 0;
  std::size_t n_max = 10;
  EnumerationOptions enumeration;
  HeuristicOptions heuristic;
};

/// Throws std::invalid_argument unless spec is edge-critical, k >= 1, r >= 3.
FormulaReport formula_report(std::size_t k, std::size_t r, const ThetaSpec& spec, const FormulaReportOptions& options);

}  // namespace gturan
