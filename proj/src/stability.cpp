#include "gturan/stability.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <thread>

#include "gturan/properties.hpp"
#include "gturan/random.hpp"
#include "gturan/subgraph.hpp"

namespace gturan {

namespace {

// side[v] == true means v is in A.
bool a_lex_less(const std::vector<bool>& x, const std::vector<bool>& y) {
  std::vector<Vertex> ax;
  std::vector<Vertex> ay;
  for (Vertex v = 0; v < x.size(); ++v) {
    if (x[v]) ax.push_back(v);
    if (y[v]) ay.push_back(v);
  }
  return ax < ay;
}

struct Candidate {
  std::vector<bool> in_a;
  std::size_t internal = 0;
};

bool better(const Candidate& x, const Candidate& y) {
  if (x.internal != y.internal) return x.internal < y.internal;
  return a_lex_less(x.in_a, y.in_a);
}

Bipartition to_bipartition(const Candidate& c, bool exact) {
  Bipartition out;
  for (Vertex v = 0; v < c.in_a.size(); ++v) (c.in_a[v] ? out.part_a : out.part_b).push_back(v);
  out.internal_edges = c.internal;
  out.exact = exact;
  return out;
}

Candidate exact_bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> rows(n, 0);
  for (const auto& e : g.edges()) {
    rows[e.u] |= 1u << e.v;
    rows[e.v] |= 1u << e.u;
  }
  const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::uint32_t in_b = 0;
  std::size_t internal = g.size();
  std::size_t best = internal;
  std::vector<std::uint32_t> best_masks{0};
  const std::uint64_t steps = std::uint64_t{1} << (n - 1);
  for (std::uint64_t i = 1; i < steps; ++i) {
    const auto v = static_cast<Vertex>(std::countr_zero(i) + 1);
    const bool on_b = (in_b >> v) & 1u;
    const auto side = on_b ? in_b : (~in_b & full);
    const auto same = static_cast<std::size_t>(std::popcount(rows[v] & side));
    const auto deg = static_cast<std::size_t>(std::popcount(rows[v]));
    internal = internal + (deg - same) - same;
    in_b ^= 1u << v;
    if (internal < best) {
      best = internal;
      best_masks.assign(1, in_b);
    } else if (internal == best) {
      best_masks.push_back(in_b);
    }
  }
  Candidate out;
  for (const auto mask : best_masks) {
    Candidate c;
    c.internal = best;
    c.in_a.resize(n);
    for (Vertex v = 0; v < n; ++v) c.in_a[v] = !((mask >> v) & 1u);
    if (out.in_a.empty() || better(c, out)) out = std::move(c);
  }
  return out;
}

Candidate local_search(const Graph& g, std::vector<bool> in_a) {
  const std::size_t n = g.order();
  std::vector<std::size_t> same(n, 0);
  std::size_t internal = 0;
  for (Vertex v = 0; v < n; ++v)
    for (const Vertex w : g.neighbors(v))
      if (in_a[v] == in_a[w]) ++same[v];
  for (Vertex v = 0; v < n; ++v) internal += same[v];
  internal /= 2;
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t other = g.degree(v) - same[v];
      if (same[v] <= other) continue;
      for (const Vertex w : g.neighbors(v)) {
        if (in_a[w] == in_a[v]) --same[w];
        else ++same[w];
      }
      internal -= same[v] - other;
      same[v] = other;
      in_a[v] = !in_a[v];
      changed = true;
    }
  }
  if (n > 0 && !in_a[0]) in_a.flip();
  return {std::move(in_a), internal};
}

}  // namespace

PeelResult degree_peel(const Graph& g, const Rational& alpha) {
  if (alpha.num <= 0 || alpha.num >= alpha.den) throw std::invalid_argument("alpha must lie in (0, 1)");
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.insert({deg[v], v});
  }
  PeelResult out;
  out.alpha = alpha;
  while (!queue.empty()) {
    const auto [d, v] = *queue.begin();
    const auto j = static_cast<std::int64_t>(queue.size());
    // d < alpha * j, exactly.
    if (static_cast<__int128>(d) * alpha.den >= static_cast<__int128>(alpha.num) * j) break;
    queue.erase(queue.begin());
    alive[v] = false;
    out.removal_order.push_back({v, d});
    for (const Vertex w : g.neighbors(v)) {
      if (!alive[w]) continue;
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) out.kept.push_back(v);
  return out;
}

Bipartition min_internal_bipartition(const Graph& g, const BipartitionOptions& options) {
  const std::size_t n = g.order();
  if (n == 0) return Bipartition{{}, {}, 0, true};
  if (n <= kMaxExactBipartitionOrder) return to_bipartition(exact_bipartition(g), true);

  std::vector<std::vector<bool>> starts;
  if (const auto coloring = two_coloring(g)) {
    std::vector<bool> in_a(n);
    for (Vertex v = 0; v < n; ++v) in_a[v] = (*coloring)[v] == 0;
    starts.push_back(std::move(in_a));
  }
  for (const auto& s : options.seeds) {
    if (s.size() != n) throw std::invalid_argument("bipartition seed has the wrong length");
    starts.push_back(s);
  }
  for (std::size_t i = 0; i < options.budget; ++i) {
    Rng rng(mix_seed(options.seed, i));
    std::vector<bool> in_a(n);
    for (Vertex v = 0; v < n; ++v) in_a[v] = uniform_below(rng, 2) == 0;
    starts.push_back(std::move(in_a));
  }
  if (starts.empty()) starts.push_back(std::vector<bool>(n, true));

  std::vector<Candidate> results(starts.size());
  std::atomic<std::size_t> cursor{0};
  auto work = [&] {
    for (std::size_t i = cursor.fetch_add(1); i < starts.size(); i = cursor.fetch_add(1))
      results[i] = local_search(g, starts[i]);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.threads, starts.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i)
    if (better(results[i], results[best])) best = i;
  return to_bipartition(results[best], false);
}

std::string_view to_string(ClauseStatus status) {
  switch (status) {
    case ClauseStatus::kPass: return "pass";
    case ClauseStatus::kFail: return "fail";
    case ClauseStatus::kNotCertified: return "not_certified";
    case ClauseStatus::kNotAsserted: return "not_asserted";
  }
  return "unknown";
}

StabilityReport stability_extract(const Graph& g, const Rational& eps, const ThetaSpec& spec,
                                  const BipartitionOptions& options) {
  const Rational half = Rational::make(1, 2);
  if (eps.num <= 0 || !(eps < half)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  if (!is_edge_critical(spec)) throw std::invalid_argument(spec.to_string() + " is not edge-critical");
  const auto n = static_cast<std::int64_t>(g.order());
  const Rational nn = Rational::make(n, 1);
  const Rational one = Rational::make(1, 1);

  StabilityReport rep;
  rep.n = g.order();
  rep.eps = eps;
  rep.alpha = half - eps;
  rep.edges = g.size();
  const Rational edge_floor = Rational::make(n * n, 4) - eps * eps * nn * nn;
  rep.edge_hypothesis = !(Rational::make(static_cast<std::int64_t>(rep.edges), 1) < edge_floor);
  rep.forbidden_free = !find_embedding(g, build_theta(spec)).has_value();
  rep.hypothesis_ok = rep.edge_hypothesis && rep.forbidden_free;

  rep.peel = degree_peel(g, rep.alpha);
  rep.survivor = rep.peel.kept.size();
  rep.survivor_threshold = (one - Rational::make(2, 1) * eps) * nn;
  const Graph core = g.induced(rep.peel.kept);
  rep.survivor_min_degree = core.min_degree();
  const auto coloring = two_coloring(core);
  rep.survivor_bipartite = coloring.has_value();
  BipartitionOptions opts = options;
  opts.seeds.clear();
  for (const auto& s : options.seeds) {
    if (s.size() != g.order()) throw std::invalid_argument("bipartition seed has the wrong length");
    std::vector<bool> restricted;
    for (const Vertex v : rep.peel.kept) restricted.push_back(s[v]);
    opts.seeds.push_back(std::move(restricted));
  }
  Bipartition local = min_internal_bipartition(core, opts);
  for (auto& v : local.part_a) v = rep.peel.kept[v];
  for (auto& v : local.part_b) v = rep.peel.kept[v];
  rep.bipartition = std::move(local);
  rep.part_bound = (one - eps) * (one - eps) * nn * half;

  if (!rep.hypothesis_ok) return rep;
  auto pass_fail = [](bool ok) { return ok ? ClauseStatus::kPass : ClauseStatus::kFail; };
  rep.survivor_clause = pass_fail(!(Rational::make(static_cast<std::int64_t>(rep.survivor), 1) < rep.survivor_threshold));
  rep.bipartite_clause = pass_fail(rep.survivor_bipartite);
  rep.min_degree_clause =
      pass_fail(!(Rational::make(static_cast<std::int64_t>(rep.survivor_min_degree), 1) < rep.part_bound));
  const auto smaller = static_cast<std::int64_t>(std::min(rep.bipartition.part_a.size(), rep.bipartition.part_b.size()));
  if (!(Rational::make(smaller, 1) < rep.part_bound)) {
    rep.part_size_clause = rep.bipartition.internal_edges == 0 ? ClauseStatus::kPass : ClauseStatus::kFail;
  } else {
    // A connected bipartite survivor has only one split; otherwise another
    // split might meet the bound.
    bool connected = true;
    if (rep.survivor_bipartite && core.order() > 0) {
      std::vector<bool> seen(core.order(), false);
      std::vector<Vertex> stack{0};
      seen[0] = true;
      std::size_t reached = 1;
      while (!stack.empty()) {
        const Vertex v = stack.back();
        stack.pop_back();
        for (const Vertex w : core.neighbors(v))
          if (!seen[w]) {
            seen[w] = true;
            ++reached;
            stack.push_back(w);
          }
      }
      connected = reached == core.order();
    }
    rep.part_size_clause =
        !rep.survivor_bipartite || connected ? ClauseStatus::kFail : ClauseStatus::kNotCertified;
  }
  return rep;
}

}  // namespace gturan
