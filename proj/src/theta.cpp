#include "gturan/theta.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "gturan/errors.hpp"

namespace gturan {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

unsigned __int128 binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 out = 1;
  for (std::int64_t i = 1; i <= k; ++i) out = out * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
  return out;
}

void extend(std::vector<std::uint32_t>& prefix, std::uint32_t min_next, std::size_t remaining,
            std::vector<std::vector<std::uint32_t>>& out) {
  if (prefix.size() >= 2) out.push_back(prefix);
  for (std::uint32_t p = min_next; p <= remaining; ++p) {
    if (p == 1 && !prefix.empty() && prefix.back() == 1) continue;
    prefix.push_back(p);
    extend(prefix, p, remaining - p, out);
    prefix.pop_back();
  }
}

}  // namespace

ThetaSpec ThetaSpec::make(std::vector<std::uint32_t> lengths) {
  if (lengths.size() < 2) throw std::invalid_argument("a theta graph needs at least two paths");
  std::sort(lengths.begin(), lengths.end());
  if (lengths[0] == 0) throw std::invalid_argument("path lengths must be positive");
  if (lengths[1] == 1) throw std::invalid_argument("at most one path may have length 1 (no multi-edges)");
  ThetaSpec spec;
  spec.lengths_ = std::move(lengths);
  return spec;
}

ThetaSpec ThetaSpec::parse(std::string_view text) {
  std::string_view body = trim(text);
  for (const std::string_view head : {"theta", "Theta", "THETA"})
    if (body.starts_with(head)) {
      body.remove_prefix(head.size());
      body = trim(body);
      if (body.size() < 2 || body.front() != '(' || body.back() != ')')
        throw std::invalid_argument("malformed theta spec '" + std::string(text) + "'");
      body = body.substr(1, body.size() - 2);
      break;
    }
  std::vector<std::uint32_t> lengths;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view item = trim(body.substr(0, comma));
    std::uint32_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw std::invalid_argument("malformed path length '" + std::string(item) + "' in theta spec '" +
                                  std::string(text) + "'");
    lengths.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return make(std::move(lengths));
}

std::size_t ThetaSpec::order() const {
  std::size_t v = 2;
  for (const auto p : lengths_) v += p - 1;
  return v;
}

std::size_t ThetaSpec::size() const {
  std::size_t e = 0;
  for (const auto p : lengths_) e += p;
  return e;
}

std::string ThetaSpec::to_string() const {
  std::string out = "theta(";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(lengths_[i]);
  }
  return out + ")";
}

std::string_view to_string(MagnitudeLabel label) {
  switch (label) {
    case MagnitudeLabel::kSubquadratic: return "Subquadratic";
    case MagnitudeLabel::kNearlyQuadratic: return "NearlyQuadratic";
    case MagnitudeLabel::kQuadratic: return "Quadratic";
  }
  return "unknown";
}

Graph build_theta(const ThetaSpec& spec) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (const auto p : spec.lengths()) {
    Vertex prev = 0;
    for (std::uint32_t step = 1; step < p; ++step) {
      edges.push_back({prev, next});
      prev = next++;
    }
    edges.push_back(make_edge(prev, 1));
  }
  return Graph::from_edges(next, edges);
}

std::size_t theta_triangle_count(const ThetaSpec& spec) {
  const auto& l = spec.lengths();
  if (l[0] != 1) return 0;
  return static_cast<std::size_t>(std::count(l.begin(), l.end(), 2u));
}

bool contains_theta1223(const ThetaSpec& spec) {
  const auto& l = spec.lengths();
  return l[0] == 1 && std::count(l.begin(), l.end(), 2u) >= 2 && std::count(l.begin(), l.end(), 3u) >= 1;
}

MagnitudeClass classify(const ThetaSpec& spec) {
  MagnitudeClass out;
  out.t = spec.order();
  const std::size_t triangles = theta_triangle_count(spec);
  if (triangles <= 1) {
    out.label = MagnitudeLabel::kSubquadratic;
    const auto t = static_cast<std::int64_t>(out.t);
    if (t > 55108) throw LimitExceeded("alpha = 1/t^4 does not fit 64 bits for t = " + std::to_string(t));
    out.alpha = Rational::make(1, t * t * t * t);
  } else if (!contains_theta1223(spec)) {
    out.label = MagnitudeLabel::kNearlyQuadratic;
  } else {
    out.label = MagnitudeLabel::kQuadratic;
  }
  return out;
}

bool is_edge_critical(const ThetaSpec& spec) {
  const auto& l = spec.lengths();
  const auto odd = static_cast<std::size_t>(std::count_if(l.begin(), l.end(), [](auto p) { return p % 2 == 1; }));
  const std::size_t even = l.size() - odd;
  return (odd == 1 && even >= 1) || (even == 1 && odd >= 1);
}

std::uint64_t turan_formula(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (k < 2) throw std::invalid_argument("turan_formula needs k >= 2");
  if (n < k) throw std::invalid_argument("turan_formula needs n >= k");
  if (r < 3 || r > k + 1)
    throw std::invalid_argument("turan_formula needs 3 <= r <= k+1 (got r=" + std::to_string(r) +
                                ", k=" + std::to_string(k) + ")");
  if (k > 64 || n > (std::int64_t{1} << 31)) throw LimitExceeded("turan_formula arguments too large");
  const auto m = static_cast<unsigned __int128>(n - k + 1);
  const unsigned __int128 value = binom(k - 1, r) + binom(k - 1, r - 1) * m + binom(k - 1, r - 2) * (m * m / 4);
  if (value > std::numeric_limits<std::uint64_t>::max()) throw LimitExceeded("turan_formula overflows 64 bits");
  return static_cast<std::uint64_t>(value);
}

std::vector<ThetaSpec> enumerate_theta_specs(std::size_t max_total) {
  std::vector<std::vector<std::uint32_t>> raw;
  std::vector<std::uint32_t> prefix;
  extend(prefix, 1, max_total, raw);
  std::vector<ThetaSpec> out;
  out.reserve(raw.size());
  for (auto& l : raw) out.push_back(ThetaSpec::make(std::move(l)));
  std::sort(out.begin(), out.end(), [](const ThetaSpec& a, const ThetaSpec& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.lengths() < b.lengths();
  });
  return out;
}

}  // namespace gturan
