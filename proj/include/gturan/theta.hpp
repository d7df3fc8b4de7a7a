#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gturan/graph.hpp"
#include "gturan/rational.hpp"

namespace gturan {

/// Path lengths of a generalized theta graph, kept sorted ascending.
/// Valid specs have at least two paths, all lengths >= 1 and at most one
/// length equal to 1.
class ThetaSpec {
 public:
  /// Throws std::invalid_argument for an invalid multiset.
  static ThetaSpec make(std::vector<std::uint32_t> lengths);
  /// "theta(1,2,2,3)"; a bare "1,2,2,3" is accepted as well.
  static ThetaSpec parse(std::string_view text);

  const std::vector<std::uint32_t>& lengths() const { return lengths_; }
  std::size_t paths() const { return lengths_.size(); }
  /// Vertices of the built graph: 2 + sum of (length - 1).
  std::size_t order() const;
  /// Edges of the built graph: sum of lengths.
  std::size_t size() const;
  std::string to_string() const;

  friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
  friend auto operator<=>(const ThetaSpec&, const ThetaSpec&) = default;

 private:
  std::vector<std::uint32_t> lengths_;
};

enum class MagnitudeLabel { kSubquadratic, kNearlyQuadratic, kQuadratic };

std::string_view to_string(MagnitudeLabel label);

struct MagnitudeClass {
  MagnitudeLabel label = MagnitudeLabel::kQuadratic;
  /// Exponent constant 1/t^4 of the subquadratic bound, t = order of the
  /// theta graph. Present only for kSubquadratic; not optimized.
  std::optional<Rational> alpha;
  std::size_t t = 0;
};

/// Roots are vertices 0 and 1; internal path vertices follow path by path in
/// spec order.
Graph build_theta(const ThetaSpec& spec);

std::size_t theta_triangle_count(const ThetaSpec& spec);
/// True iff the lengths contain {1,2,2,3} as a sub-multiset.
bool contains_theta1223(const ThetaSpec& spec);
MagnitudeClass classify(const ThetaSpec& spec);
/// Exactly one path has parity different from all the others.
bool is_edge_critical(const ThetaSpec& spec);

/// C(k-1,r) + C(k-1,r-1)(n-k+1) + C(k-1,r-2) floor((n-k+1)^2/4).
/// Requires k >= 2, n >= k and 3 <= r <= k+1 (std::invalid_argument);
/// results beyond 64 bits throw LimitExceeded.
std::uint64_t turan_formula(std::int64_t n, std::int64_t k, std::int64_t r);

/// Every valid spec whose lengths sum to at most `max_total`, in ascending
/// order of (sum, lengths).
std::vector<ThetaSpec> enumerate_theta_specs(std::size_t max_total);

}  // namespace gturan
