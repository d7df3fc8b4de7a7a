#include "gturan/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "gturan/canonical.hpp"
#include "gturan/cliques.hpp"
#include "gturan/construct.hpp"
#include "gturan/errors.hpp"
#include "gturan/generators.hpp"
#include "gturan/graph6.hpp"
#include "gturan/matcher.hpp"
#include "gturan/random.hpp"
#include "gturan/subgraph.hpp"

namespace gturan {

namespace {

constexpr std::size_t kLevelDedupMaxOrder = 8;
constexpr std::size_t kFrontierTarget = 256;
constexpr std::size_t kClosureMaxFreeEdges = 16;

// Forbidden-structure test on mutable dense graphs.
class Checker {
 public:
  Checker(const ForbiddenSpec* forbidden, std::size_t n) : n_(n) {
    if (forbidden == nullptr) return;
    copies_ = forbidden->copies;
    pattern_.emplace(forbidden->pattern);
    // Too few vertices for the forbidden structure: nothing is excluded.
    if (copies_ * pattern_->order() > n) pattern_.reset();
  }

  bool active() const { return pattern_.has_value(); }

  bool contains(const BitGraph& g) const {
    if (!active()) return false;
    return pack_copies(g, *pattern_, copies_, VertexSet(n_, true)).has_value();
  }

  // g contains uv and g - uv is known to be free.
  bool contains_through(const BitGraph& g, Vertex u, Vertex v) const {
    if (!active()) return false;
    return pack_copies_through_edge(g, *pattern_, copies_, VertexSet(n_, true), u, v).has_value();
  }

 private:
  std::size_t n_;
  std::size_t copies_ = 1;
  std::optional<Pattern> pattern_;
};

std::uint64_t code_of(const BitGraph& g) { return canonical_code64(g); }

// Position pair of the last 1-bit of the canonical string, in g's labels.
Edge last_canonical_edge(const CanonicalLabeling& lab) {
  std::size_t j = lab.columns.size() - 1;
  while (lab.columns[j] == 0) --j;
  const std::size_t i = j - 1 - static_cast<std::size_t>(std::countr_zero(lab.columns[j]));
  return make_edge(lab.order[i], lab.order[j]);
}

class Walker {
 public:
  Walker(std::size_t n, const Checker& checker) : n_(n), checker_(checker) {}

  // Expands g: classifies its children, visits g, then either recurses into
  // the accepted children or hands them to `collect`.
  void expand(BitGraph& g, std::uint64_t code, EnumerationStats& stats, ClassVisitor& visitor,
              std::vector<std::pair<BitGraph, std::uint64_t>>* collect) const {
    std::unordered_set<std::uint64_t> seen;
    bool free_child = false;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) {
        if (g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        const auto lab = canonical_labeling(g);
        const auto child = code64_from_columns(lab.columns);
        if (seen.insert(child).second) {
          if (checker_.contains_through(g, u, v)) {
            ++stats.pruned;
          } else {
            free_child = true;
            const Edge last = last_canonical_edge(lab);
            bool accept = last == make_edge(u, v);
            if (!accept) {
              g.remove_edge(last.u, last.v);
              accept = code_of(g) == code;
              g.add_edge(last.u, last.v);
            }
            if (accept) {
              if (collect != nullptr) collect->push_back({g, child});
              else expand(g, child, stats, visitor, nullptr);
            }
          }
        }
        g.remove_edge(u, v);
      }
    ++stats.examined;
    visitor.visit(g, !free_child);
  }

 private:
  std::size_t n_;
  const Checker& checker_;
};

EnumerationStats level_dedup(std::size_t n, const Checker& checker, ClassVisitor& visitor) {
  EnumerationStats stats;
  std::set<std::uint64_t> level{0};
  while (!level.empty()) {
    std::set<std::uint64_t> next;
    for (const auto code : level) {
      BitGraph g = graph_from_code64(n, code);
      std::unordered_set<std::uint64_t> seen;
      bool free_child = false;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          g.add_edge(u, v);
          const auto child = code_of(g);
          if (seen.insert(child).second) {
            if (checker.contains_through(g, u, v)) {
              ++stats.pruned;
            } else {
              free_child = true;
              next.insert(child);
            }
          }
          g.remove_edge(u, v);
        }
      ++stats.examined;
      visitor.visit(g, !free_child);
    }
    level = std::move(next);
  }
  return stats;
}

EnumerationStats canonical_augmentation(std::size_t n, const Checker& checker, ClassVisitor& visitor,
                                        std::size_t threads) {
  EnumerationStats stats;
  const Walker walker(n, checker);
  std::vector<std::pair<BitGraph, std::uint64_t>> frontier;
  frontier.push_back({BitGraph(n), 0});
  // The frontier depends only on the graph, never on the thread count.
  while (!frontier.empty() && frontier.size() < kFrontierTarget) {
    std::vector<std::pair<BitGraph, std::uint64_t>> next;
    for (auto& [g, code] : frontier) walker.expand(g, code, stats, visitor, &next);
    frontier = std::move(next);
  }
  if (frontier.empty()) return stats;

  std::vector<std::unique_ptr<ClassVisitor>> forks(frontier.size());
  std::vector<EnumerationStats> part_stats(frontier.size());
  for (auto& f : forks) f = visitor.fork();
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    while (true) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= frontier.size()) return;
      try {
        walker.expand(frontier[i].first, frontier[i].second, part_stats[i], *forks[i], nullptr);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, frontier.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  for (std::size_t i = 0; i < forks.size(); ++i) {
    visitor.merge(*forks[i]);
    stats.examined += part_stats[i].examined;
    stats.pruned += part_stats[i].pruned;
  }
  return stats;
}

// Keeps the edge-maximal graphs of largest score, by canonical code.
class BestVisitor : public ClassVisitor {
 public:
  using Score = std::function<std::int64_t(const BitGraph&)>;
  explicit BestVisitor(Score score) : score_(std::move(score)) {}

  void visit(const BitGraph& g, bool edge_maximal) override {
    if (!edge_maximal) return;
    const auto s = score_(g);
    if (s < best_) return;
    if (s > best_) {
      best_ = s;
      codes_.clear();
    }
    codes_.push_back(code_of(g));
  }
  std::unique_ptr<ClassVisitor> fork() const override { return std::make_unique<BestVisitor>(score_); }
  void merge(ClassVisitor& other) override {
    auto& o = static_cast<BestVisitor&>(other);
    if (o.best_ < best_) return;
    if (o.best_ > best_) {
      best_ = o.best_;
      codes_.clear();
    }
    codes_.insert(codes_.end(), o.codes_.begin(), o.codes_.end());
  }

  std::int64_t best() const { return best_; }
  std::vector<std::uint64_t> codes() const {
    std::vector<std::uint64_t> out(codes_);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  Score score_;
  std::int64_t best_ = -1;
  std::vector<std::uint64_t> codes_;
};

struct WitnessSet {
  // (edge count, code) orders witnesses by size, then canonical string.
  std::set<std::pair<std::size_t, std::uint64_t>> entries;
  bool complete = true;
};

void add_witness(WitnessSet& set, const BitGraph& g) { set.entries.insert({g.edge_count(), code_of(g)}); }

// Every extremal graph lies below an edge-maximal one with the same cliques,
// so it is that graph minus edges that sit in no r-clique.
void add_clique_closure(WitnessSet& set, const BitGraph& maximal, std::size_t r) {
  const Graph g = Graph::from_bits(maximal);
  std::set<Edge> in_clique;
  if (r >= 2)
    for (const auto& c : enumerate_cliques(g, r))
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j) in_clique.insert(make_edge(c[i], c[j]));
  std::vector<Edge> free;
  for (const auto& e : g.edges())
    if (!in_clique.count(e)) free.push_back(e);
  if (free.size() > kClosureMaxFreeEdges) {
    set.complete = false;
    add_witness(set, maximal);
    BitGraph core = maximal;
    for (const auto& e : free) core.remove_edge(e.u, e.v);
    add_witness(set, core);
    return;
  }
  for (std::uint32_t mask = 0; mask < (1u << free.size()); ++mask) {
    BitGraph h = maximal;
    for (std::size_t i = 0; i < free.size(); ++i)
      if ((mask >> i) & 1u) h.remove_edge(free[i].u, free[i].v);
    add_witness(set, h);
  }
}

void fill_witnesses(ExtremalResult& out, const WitnessSet& set, std::size_t n) {
  out.witness_count = set.entries.size();
  out.witnesses_complete = set.complete;
  for (const auto& [edges, code] : set.entries) {
    if (out.witnesses.size() == kWitnessCap) break;
    out.witnesses.push_back(graph6_encode(graph_from_code64(n, code)));
  }
}

std::int64_t clique_score(const BitGraph& g, std::size_t r) {
  return static_cast<std::int64_t>(count_cliques(g, r));
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

Graph pad(const Graph& g, std::size_t n) {
  if (g.order() >= n) return g;
  return Graph::from_edges(n, g.edges());
}

}  // namespace

ForbiddenSpec ForbiddenSpec::theta(const ThetaSpec& spec, std::size_t copies) {
  if (copies == 0) throw std::invalid_argument("number of forbidden copies must be positive");
  return {build_theta(spec), copies, spec.to_string()};
}

ForbiddenSpec ForbiddenSpec::graph(const Graph& pattern, std::size_t copies, std::string label) {
  if (copies == 0) throw std::invalid_argument("number of forbidden copies must be positive");
  if (pattern.order() > kMaxPatternOrder)
    throw LimitExceeded("forbidden pattern has more than " + std::to_string(kMaxPatternOrder) + " vertices");
  return {pattern, copies, std::move(label)};
}

std::string ForbiddenSpec::describe() const {
  return copies == 1 ? label : std::to_string(copies) + "*" + label;
}

bool contains_forbidden(const Graph& g, const ForbiddenSpec& forbidden) {
  return contains_k_disjoint(g, forbidden.pattern, forbidden.copies).has_value();
}

EnumerationStats enumerate_classes(std::size_t n, const ForbiddenSpec* forbidden, ClassVisitor& visitor,
                                   const EnumerationOptions& options) {
  if (n > kMaxOracleOrder)
    throw LimitExceeded("exhaustive enumeration is limited to n <= " + std::to_string(kMaxOracleOrder) +
                        "; use the heuristic lower bound for larger n");
  const Checker checker(forbidden, n);
  auto strategy = options.strategy;
  if (strategy == EnumerationStrategy::kAuto)
    strategy = n <= kLevelDedupMaxOrder ? EnumerationStrategy::kLevelDedup
                                        : EnumerationStrategy::kCanonicalAugmentation;
  if (strategy == EnumerationStrategy::kLevelDedup) return level_dedup(n, checker, visitor);
  return canonical_augmentation(n, checker, visitor, std::max<std::size_t>(1, options.threads));
}

ExtremalResult extremal_oracle(std::size_t n, std::size_t r, const ForbiddenSpec& forbidden,
                               const EnumerationOptions& options) {
  if (r < 2) throw std::invalid_argument("extremal_oracle needs r >= 2");
  if (n > kMaxOracleOrder)
    throw LimitExceeded("extremal_oracle is exhaustive only for n <= " + std::to_string(kMaxOracleOrder) +
                        "; use edge_maximal_lower_bound for larger n");
  ExtremalResult out;
  out.n = n;
  out.objective = "K" + std::to_string(r);
  out.forbidden = forbidden.describe();
  WitnessSet witnesses;
  if (forbidden.copies * forbidden.pattern.order() > n) {
    const BitGraph full = complete(n).to_bit_graph();
    out.value = Rational::make(clique_score(full, r), 1);
    out.examined = 1;
    add_clique_closure(witnesses, full, r);
  } else {
    BestVisitor visitor([r](const BitGraph& g) { return clique_score(g, r); });
    const auto stats = enumerate_classes(n, &forbidden, visitor, options);
    out.examined = stats.examined;
    out.pruned = stats.pruned;
    out.value = Rational::make(visitor.best(), 1);
    for (const auto code : visitor.codes()) add_clique_closure(witnesses, graph_from_code64(n, code), r);
  }
  fill_witnesses(out, witnesses, n);
  return out;
}

ExtremalResult edge_maximal_lower_bound(std::size_t n, std::size_t r, const ForbiddenSpec& forbidden,
                                        const HeuristicOptions& options) {
  if (r < 2) throw std::invalid_argument("edge_maximal_lower_bound needs r >= 2");
  if (n > kMaxHeuristicOrder)
    throw LimitExceeded("edge_maximal_lower_bound is limited to n <= " + std::to_string(kMaxHeuristicOrder));
  const Checker checker(&forbidden, n);
  const std::size_t k = options.k == 0 ? forbidden.copies : options.k;

  std::vector<Graph> seeds;
  seeds.push_back(empty(n));
  if (n >= k && k >= 1) seeds.push_back(apex_turan(k, n));
  seeds.push_back(turan(2, n));
  if (n >= 2) seeds.push_back(matched_bipartite(n));
  const std::size_t clique_order = std::min(n, forbidden.copies * forbidden.pattern.order() - 1);
  seeds.push_back(pad(complete(clique_order), n));
  if (n >= 6) {
    const auto m = static_cast<std::int64_t>(n / 6);
    seeds.push_back(pad(ruzsa_szemeredi(m, behrend_set(m).elements).graph, n));
  }

  std::int64_t best = -1;
  std::map<std::string, BitGraph> best_graphs;
  std::vector<Edge> pairs;
  auto extend = [&](BitGraph g, std::uint64_t stream) {
    Rng rng(mix_seed(options.seed, stream));
    pairs.clear();
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v)) pairs.push_back({u, v});
    shuffle_range(pairs.begin(), pairs.end(), rng);
    // Adding edges never removes a copy, so each pair needs one test.
    for (const auto& e : pairs) {
      g.add_edge(e.u, e.v);
      if (checker.contains_through(g, e.u, e.v)) g.remove_edge(e.u, e.v);
    }
    const auto score = clique_score(g, r);
    if (score < best) return;
    if (score > best) {
      best = score;
      best_graphs.clear();
    }
    const std::string id =
        n <= kMaxCanonicalOrder ? canonical_key(g).hex() : graph6_encode(g);
    best_graphs.emplace(id, std::move(g));
  };

  std::uint64_t stream = 0;
  std::uint64_t examined = 0;
  for (const auto& s : seeds) {
    BitGraph g = s.to_bit_graph();
    ++stream;
    if (checker.contains(g)) continue;
    extend(std::move(g), stream);
    ++examined;
  }
  for (std::size_t i = 0; i < options.budget; ++i) {
    extend(BitGraph(n), 1000 + i);
    ++examined;
  }

  ExtremalResult out;
  out.n = n;
  out.objective = "K" + std::to_string(r);
  out.forbidden = forbidden.describe();
  out.value = Rational::make(best, 1);
  out.exact = false;
  out.examined = examined;
  out.witness_count = best_graphs.size();
  out.witnesses_complete = false;
  for (const auto& [id, g] : best_graphs) {
    if (out.witnesses.size() == kWitnessCap) break;
    if (checker.contains(g)) throw std::logic_error("heuristic witness contains the forbidden structure");
    out.witnesses.push_back(n <= kMaxCanonicalOrder ? graph6_encode(canonical_form(g)) : graph6_encode(g));
  }
  std::sort(out.witnesses.begin(), out.witnesses.end());
  return out;
}

PhiResult phi_oracle(std::size_t n, std::size_t r, const Rational& c, const ThetaSpec& spec,
                     const EnumerationOptions& options) {
  if (!is_edge_critical(spec)) throw std::invalid_argument(spec.to_string() + " is not edge-critical");
  if (r < 3) throw std::invalid_argument("phi_oracle needs r >= 3");
  if (c.num <= 0) throw std::invalid_argument("phi_oracle needs c > 0");
  if (n > kMaxPhiOrder) throw LimitExceeded("phi_oracle is limited to n <= " + std::to_string(kMaxPhiOrder));
  const ForbiddenSpec forbidden = ForbiddenSpec::theta(spec);
  // Exact arithmetic: maximize q e + p N_r for c = p/q.
  const std::int64_t p = c.num;
  const std::int64_t q = c.den;
  auto score = [=](const BitGraph& g) {
    return q * static_cast<std::int64_t>(g.edge_count()) + p * clique_score(g, r);
  };
  BestVisitor visitor(score);
  const auto stats = enumerate_classes(n, &forbidden, visitor, options);

  PhiResult out;
  ExtremalResult& res = out.result;
  res.n = n;
  res.objective = "e + " + c.to_string() + "*K" + std::to_string(r);
  res.forbidden = forbidden.describe();
  res.value = Rational::make(visitor.best(), q);
  res.examined = stats.examined;
  res.pruned = stats.pruned;
  WitnessSet witnesses;
  const auto codes = visitor.codes();
  for (const auto code : codes) add_witness(witnesses, graph_from_code64(n, code));
  fill_witnesses(res, witnesses, n);

  out.mantel_bound = static_cast<std::uint64_t>(n * n / 4);
  const Rational bound = Rational::make(static_cast<std::int64_t>(out.mantel_bound), 1);
  out.equals_bound = res.value == bound;
  out.exceeds_bound = res.value > bound;
  out.unique_turan_witness =
      codes.size() == 1 && codes.front() == canonical_code64(turan(2, n).to_bit_graph());
  return out;
}

FormulaReport formula_report(std::size_t k, std::size_t r, const ThetaSpec& spec, const FormulaReportOptions& options) {
  if (!is_edge_critical(spec))
    throw std::invalid_argument(spec.to_string() + " is not edge-critical; the formula does not apply");
  if (k < 1) throw std::invalid_argument("theorem2 needs k >= 1");
  if (r < 3) throw std::invalid_argument("theorem2 needs r >= 3");
  FormulaReport rep;
  rep.k = k;
  rep.r = r;
  rep.spec = spec;
  rep.formula_regime = k >= 2 && r <= k + 1;
  if (r >= k + 2) rep.note = "r >= k+2: o(n^2) regime, no formula";
  const ForbiddenSpec forbidden = ForbiddenSpec::theta(spec, k);
  const std::size_t clique_order = k * spec.order() - 1;
  const std::size_t n_min = std::max<std::size_t>(options.n_min, std::max<std::size_t>(k, 1));
  for (std::size_t n = n_min; n <= options.n_max; ++n) {
    FormulaRow row;
    row.n = n;
    if (rep.formula_regime) row.formula = turan_formula(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k),
                                                       static_cast<std::int64_t>(r));
    ExtremalResult res;
    if (n <= kMaxOracleOrder) {
      res = extremal_oracle(n, r, forbidden, options.enumeration);
    } else {
      HeuristicOptions h = options.heuristic;
      h.k = k;
      res = edge_maximal_lower_bound(n, r, forbidden, h);
    }
    row.best = static_cast<std::uint64_t>(res.value.num);
    row.exact = res.exact;
    if (row.formula) row.gap = static_cast<std::int64_t>(row.best) - static_cast<std::int64_t>(*row.formula);
    row.complete_competitor = binomial(std::min(n, clique_order), r);
    row.witness_count = res.witness_count;
    if (!res.witnesses.empty()) row.witness = res.witnesses.front();
    rep.rows.push_back(std::move(row));
  }
  if (rep.formula_regime)
    for (std::size_t i = rep.rows.size(); i-- > 0;) {
      if (*rep.rows[i].formula < rep.rows[i].complete_competitor) break;
      rep.crossover = rep.rows[i].n;
    }
  return rep;
}

}  // namespace gturan
