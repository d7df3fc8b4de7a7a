#include "gturan/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "gturan/errors.hpp"

namespace gturan {

namespace {

constexpr std::size_t kMaxGenerators = 64;

using Perm = std::array<std::uint8_t, kMaxCanonicalOrder>;

class Labeler {
 public:
  explicit Labeler(const BitGraph& g) : n_(g.order()) {
    for (Vertex v = 0; v < n_; ++v) {
      row_[v] = static_cast<std::uint16_t>(g.row_word(v));
      degree_[v] = static_cast<std::uint8_t>(std::popcount(row_[v]));
    }
    std::array<std::uint8_t, kMaxCanonicalOrder> sorted = degree_;
    std::sort(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n_), std::greater<>());
    target_ = sorted;
  }

  CanonicalLabeling run() {
    std::array<std::uint16_t, kMaxCanonicalOrder> col{};
    search(0, 0, col);
    CanonicalLabeling out;
    out.order.assign(best_order_.begin(), best_order_.begin() + static_cast<std::ptrdiff_t>(n_));
    out.columns.assign(best_cols_.begin(), best_cols_.begin() + static_cast<std::ptrdiff_t>(n_));
    return out;
  }

 private:
  bool twins(Vertex x, Vertex y) const {
    const auto bx = static_cast<std::uint16_t>(1u << x);
    const auto by = static_cast<std::uint16_t>(1u << y);
    return (row_[x] & ~by) == (row_[y] & ~bx);
  }

  bool fixes_prefix(const Perm& g, std::size_t pos) const {
    for (std::size_t i = 0; i < pos; ++i)
      if (g[cur_order_[i]] != cur_order_[i]) return false;
    return true;
  }

  // Orbit representative of x under the generators fixing the prefix.
  std::uint8_t orbit_root(std::uint8_t x, const std::vector<const Perm*>& gens) const {
    std::array<std::uint8_t, kMaxCanonicalOrder> parent{};
    std::iota(parent.begin(), parent.end(), std::uint8_t{0});
    auto find = [&](std::uint8_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    for (const Perm* g : gens)
      for (std::uint8_t v = 0; v < n_; ++v) {
        const auto a = find(v);
        const auto b = find((*g)[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    return find(x);
  }

  // -1, 0, 1 as the first `len` columns compare to the best string.
  int compare_prefix(std::size_t len) const {
    for (std::size_t i = 0; i < len; ++i)
      if (cur_cols_[i] != best_cols_[i]) return cur_cols_[i] < best_cols_[i] ? -1 : 1;
    return 0;
  }

  void search(std::size_t pos, std::uint16_t used, const std::array<std::uint16_t, kMaxCanonicalOrder>& col) {
    if (pos == n_) {
      const int rel = have_best_ ? compare_prefix(n_) : -1;
      if (rel < 0) {
        have_best_ = true;
        best_cols_ = cur_cols_;
        best_order_ = cur_order_;
      } else if (rel == 0 && generators_.size() < kMaxGenerators) {
        Perm g{};
        for (std::size_t i = 0; i < n_; ++i) g[best_order_[i]] = cur_order_[i];
        generators_.push_back(g);
      }
      return;
    }
    std::uint16_t min_col = 0xFFFF;
    std::uint16_t cands = 0;
    for (Vertex x = 0; x < n_; ++x) {
      if ((used >> x) & 1u || degree_[x] != target_[pos]) continue;
      if (col[x] < min_col) {
        min_col = col[x];
        cands = 0;
      }
      if (col[x] == min_col) cands |= static_cast<std::uint16_t>(1u << x);
    }
    cur_cols_[pos] = min_col;

    std::vector<std::uint8_t> tried;
    for (std::uint16_t rest = cands; rest != 0; rest &= static_cast<std::uint16_t>(rest - 1)) {
      // The best string may have changed inside an earlier sibling.
      if (have_best_ && compare_prefix(pos + 1) > 0) return;
      const auto x = static_cast<std::uint8_t>(std::countr_zero(rest));
      bool skip = false;
      for (const auto y : tried)
        if (twins(x, y)) {
          skip = true;
          break;
        }
      if (!skip && !tried.empty() && !generators_.empty()) {
        std::vector<const Perm*> gens;
        for (const auto& g : generators_)
          if (fixes_prefix(g, pos)) gens.push_back(&g);
        if (!gens.empty()) {
          const auto root = orbit_root(x, gens);
          for (const auto y : tried)
            if (orbit_root(y, gens) == root) {
              skip = true;
              break;
            }
        }
      }
      if (skip) continue;
      tried.push_back(x);

      cur_order_[pos] = x;
      std::array<std::uint16_t, kMaxCanonicalOrder> next{};
      for (Vertex v = 0; v < n_; ++v)
        next[v] = static_cast<std::uint16_t>((col[v] << 1) | ((row_[x] >> v) & 1u));
      search(pos + 1, static_cast<std::uint16_t>(used | (1u << x)), next);
    }
  }

  std::size_t n_;
  std::array<std::uint16_t, kMaxCanonicalOrder> row_{};
  std::array<std::uint8_t, kMaxCanonicalOrder> degree_{};
  std::array<std::uint8_t, kMaxCanonicalOrder> target_{};

  std::array<std::uint8_t, kMaxCanonicalOrder> cur_order_{};
  std::array<std::uint16_t, kMaxCanonicalOrder> cur_cols_{};
  std::array<std::uint8_t, kMaxCanonicalOrder> best_order_{};
  std::array<std::uint16_t, kMaxCanonicalOrder> best_cols_{};
  bool have_best_ = false;
  std::vector<Perm> generators_;
};

void check_order(std::size_t n) {
  if (n > kMaxCanonicalOrder)
    throw LimitExceeded("canonical labeling supports at most " + std::to_string(kMaxCanonicalOrder) +
                        " vertices, got " + std::to_string(n));
}

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (const auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

CanonicalLabeling canonical_labeling(const BitGraph& g) {
  check_order(g.order());
  if (g.order() == 0) return {};
  return Labeler(g).run();
}

CanonicalKey canonical_key(const BitGraph& g) {
  const auto lab = canonical_labeling(g);
  const std::size_t n = g.order();
  CanonicalKey key;
  key.bytes.reserve(1 + (n * (n - (n > 0 ? 1 : 0)) / 2 + 7) / 8);
  key.bytes.push_back(static_cast<std::uint8_t>(n));
  std::uint8_t acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = static_cast<std::uint8_t>((acc << 1) | ((lab.columns[j] >> (j - 1 - i)) & 1u));
      if (++filled == 8) {
        key.bytes.push_back(acc);
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) key.bytes.push_back(static_cast<std::uint8_t>(acc << (8 - filled)));
  return key;
}

CanonicalKey canonical_key(const Graph& g) {
  check_order(g.order());
  return canonical_key(g.to_bit_graph());
}

BitGraph canonical_form(const BitGraph& g) {
  const auto lab = canonical_labeling(g);
  BitGraph out(g.order());
  for (std::size_t j = 1; j < g.order(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((lab.columns[j] >> (j - 1 - i)) & 1u) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

std::uint64_t code64_from_columns(const std::vector<std::uint16_t>& columns) {
  std::uint64_t code = 0;
  for (std::size_t j = 1; j < columns.size(); ++j) code = (code << j) | columns[j];
  return code;
}

std::uint64_t canonical_code64(const BitGraph& g) {
  if (g.order() > kMaxCode64Order)
    throw LimitExceeded("64-bit canonical codes support at most " + std::to_string(kMaxCode64Order) + " vertices");
  return code64_from_columns(canonical_labeling(g).columns);
}

BitGraph graph_from_code64(std::size_t n, std::uint64_t code) {
  if (n > kMaxCode64Order) throw LimitExceeded("code64 order too large");
  BitGraph out(n);
  std::size_t remaining = n * (n > 0 ? n - 1 : 0) / 2;
  for (std::size_t j = 1; j < n; ++j) {
    remaining -= j;
    const std::uint64_t column = (code >> remaining) & ((std::uint64_t{1} << j) - 1);
    for (std::size_t i = 0; i < j; ++i)
      if ((column >> (j - 1 - i)) & 1u) out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
  return out;
}

}  // namespace gturan
