#include "gturan/assignment.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

#include "gturan/cliques.hpp"
#include "gturan/errors.hpp"

namespace gturan {

namespace {

struct Problem {
  AssignmentMode mode;
  std::vector<std::vector<Vertex>> sources;
  std::vector<std::vector<Vertex>> targets;
  /// Per source, the target index of each option (the sub-clique the option
  /// names: chosen target in single mode, excluded edge in pair mode).
  std::vector<std::vector<std::uint32_t>> options;
};

Problem make_problem(const Graph& g, AssignmentMode mode) {
  if (g.order() > kMaxAssignmentOrder)
    throw LimitExceeded("assignments are limited to graphs with at most " + std::to_string(kMaxAssignmentOrder) +
                        " vertices");
  Problem p;
  p.mode = mode;
  p.sources = enumerate_cliques(g, mode.k + 1);
  p.targets = enumerate_cliques(g, mode.k);
  std::map<std::vector<Vertex>, std::uint32_t> index;
  for (std::uint32_t i = 0; i < p.targets.size(); ++i) index.emplace(p.targets[i], i);
  p.options.reserve(p.sources.size());
  for (const auto& src : p.sources) {
    std::vector<std::uint32_t> opts;
    for (std::size_t drop = 0; drop < src.size(); ++drop) {
      std::vector<Vertex> sub;
      for (std::size_t i = 0; i < src.size(); ++i)
        if (i != drop) sub.push_back(src[i]);
      opts.push_back(index.at(sub));
    }
    std::sort(opts.begin(), opts.end());
    p.options.push_back(std::move(opts));
  }
  return p;
}

bool pair_mode(const Problem& p) { return p.mode.kind == AssignmentMode::Kind::kPair; }

std::vector<std::uint32_t> chosen_targets(const Problem& p, std::size_t s, std::uint32_t opt) {
  if (!pair_mode(p)) return {p.options[s][opt]};
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < p.options[s].size(); ++i)
    if (i != opt) out.push_back(p.options[s][i]);
  return out;
}

class Solver {
 public:
  explicit Solver(const Problem& p) : p_(p), option_(p.sources.size(), 0), loads_(p.targets.size(), 0) {}

  void greedy() {
    for (std::size_t s = 0; s < p_.sources.size(); ++s) {
      std::uint32_t best = 0;
      std::int64_t best_cost = -1;
      for (std::uint32_t o = 0; o < p_.options[s].size(); ++o) {
        std::int64_t cost = 0;
        for (const auto t : chosen_targets(p_, s, o)) cost += loads_[t];
        if (best_cost < 0 || cost < best_cost) {
          best_cost = cost;
          best = o;
        }
      }
      option_[s] = best;
      for (const auto t : chosen_targets(p_, s, best)) ++loads_[t];
    }
  }

  void improve() {
    const std::size_t m = p_.sources.size();
    const std::uint64_t cap = 10 * static_cast<std::uint64_t>(m) * m;
    while (true) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t s = 0; s < m; ++s)
          if (try_swap(s)) {
            changed = true;
            bump(cap);
          }
      }
      if (!try_chain()) break;
      bump(cap);
    }
  }

  CliqueAssignment result() const {
    CliqueAssignment a;
    a.mode = p_.mode;
    a.sources = p_.sources;
    a.targets = p_.targets;
    a.option = option_;
    for (std::size_t s = 0; s < p_.sources.size(); ++s) a.chosen.push_back(chosen_targets(p_, s, option_[s]));
    a.loads = loads_;
    for (const auto r : loads_) a.psi += static_cast<std::uint64_t>(r) * r;
    return a;
  }

 private:
  void bump(std::uint64_t cap) {
    if (++improvements_ > cap) throw std::logic_error("psi minimization exceeded its improvement cap");
  }

  // Change in psi when source s switches to option o.
  std::int64_t delta(std::size_t s, std::uint32_t o) const {
    const auto from = chosen_targets(p_, s, option_[s]);
    const auto to = chosen_targets(p_, s, o);
    std::int64_t d = 0;
    for (const auto t : to)
      if (std::find(from.begin(), from.end(), t) == from.end()) d += 2 * static_cast<std::int64_t>(loads_[t]) + 1;
    for (const auto t : from)
      if (std::find(to.begin(), to.end(), t) == to.end()) d -= 2 * static_cast<std::int64_t>(loads_[t]) - 1;
    return d;
  }

  void apply(std::size_t s, std::uint32_t o) {
    for (const auto t : chosen_targets(p_, s, option_[s])) --loads_[t];
    option_[s] = o;
    for (const auto t : chosen_targets(p_, s, o)) ++loads_[t];
  }

  bool try_swap(std::size_t s) {
    std::uint32_t best = option_[s];
    std::int64_t best_delta = 0;
    for (std::uint32_t o = 0; o < p_.options[s].size(); ++o) {
      if (o == option_[s]) continue;
      const auto d = delta(s, o);
      if (d < best_delta) {
        best_delta = d;
        best = o;
      }
    }
    if (best == option_[s]) return false;
    apply(s, best);
    return true;
  }

  // Chain of reassignments t0 -> t1 -> ... -> tj, each step moving one
  // source's option target from t_i to t_{i+1}. Only the loads of t0 and tj
  // change; in single mode t0 loses one, in pair mode it gains one.
  bool try_chain() {
    const std::size_t nt = p_.targets.size();
    std::vector<std::vector<std::size_t>> holders(nt);
    for (std::size_t s = 0; s < p_.sources.size(); ++s) holders[p_.options[s][option_[s]]].push_back(s);
    const bool pair = pair_mode(p_);
    std::vector<std::int64_t> via_source(nt);
    std::vector<std::int64_t> prev(nt);
    for (std::uint32_t t0 = 0; t0 < nt; ++t0) {
      if (holders[t0].empty()) continue;
      std::fill(via_source.begin(), via_source.end(), -1);
      std::fill(prev.begin(), prev.end(), -1);
      std::vector<bool> seen(nt, false);
      seen[t0] = true;
      std::deque<std::uint32_t> queue{t0};
      while (!queue.empty()) {
        const auto t = queue.front();
        queue.pop_front();
        for (const auto s : holders[t])
          for (const auto next : p_.options[s]) {
            if (seen[next]) continue;
            seen[next] = true;
            via_source[next] = static_cast<std::int64_t>(s);
            prev[next] = t;
            const auto r0 = static_cast<std::int64_t>(loads_[t0]);
            const auto rj = static_cast<std::int64_t>(loads_[next]);
            if ((!pair && rj <= r0 - 2) || (pair && rj >= r0 + 2)) {
              for (auto cur = static_cast<std::int64_t>(next); cur != t0; cur = prev[static_cast<std::size_t>(cur)]) {
                const auto src = static_cast<std::size_t>(via_source[static_cast<std::size_t>(cur)]);
                const auto& opts = p_.options[src];
                apply(src, static_cast<std::uint32_t>(std::find(opts.begin(), opts.end(), cur) - opts.begin()));
              }
              return true;
            }
            queue.push_back(next);
          }
      }
    }
    return false;
  }

  const Problem& p_;
  std::vector<std::uint32_t> option_;
  std::vector<std::uint32_t> loads_;
  std::uint64_t improvements_ = 0;
};

}  // namespace

AssignmentMode AssignmentMode::single(std::size_t k) {
  if (k < 2) throw std::invalid_argument("single mode needs k >= 2");
  return {Kind::kSingle, k};
}

AssignmentMode AssignmentMode::parse(std::string_view text) {
  if (text == "pair") return pair();
  if (text.starts_with("single:")) {
    const auto body = text.substr(7);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), k);
    if (!body.empty() && ec == std::errc{} && ptr == body.data() + body.size()) return single(k);
  }
  throw std::invalid_argument("assignment mode must be 'single:k' or 'pair', got '" + std::string(text) + "'");
}

std::string AssignmentMode::to_string() const {
  return kind == Kind::kPair ? "pair" : "single:" + std::to_string(k);
}

CliqueAssignment assignment_from_options(const Graph& g, AssignmentMode mode,
                                         const std::vector<std::uint32_t>& options) {
  const Problem p = make_problem(g, mode);
  if (options.size() != p.sources.size()) throw std::invalid_argument("one option per source clique is required");
  CliqueAssignment a;
  a.mode = mode;
  a.sources = p.sources;
  a.targets = p.targets;
  a.option = options;
  a.loads.assign(p.targets.size(), 0);
  for (std::size_t s = 0; s < p.sources.size(); ++s) {
    if (options[s] >= p.options[s].size()) throw std::invalid_argument("option index out of range");
    a.chosen.push_back(chosen_targets(p, s, options[s]));
    for (const auto t : a.chosen.back()) ++a.loads[t];
  }
  for (const auto r : a.loads) a.psi += static_cast<std::uint64_t>(r) * r;
  return a;
}

CliqueAssignment minimize_psi(const Graph& g, AssignmentMode mode) {
  const Problem p = make_problem(g, mode);
  Solver solver(p);
  solver.greedy();
  solver.improve();
  return solver.result();
}

std::vector<LocalViolation> verify_local_optimality(const Graph& g, const CliqueAssignment& a) {
  const Problem p = make_problem(g, a.mode);
  if (a.sources != p.sources || a.targets != p.targets || a.option.size() != p.sources.size() ||
      a.chosen.size() != p.sources.size() || a.loads.size() != p.targets.size())
    throw std::invalid_argument("assignment does not match the cliques of the graph");
  std::vector<std::uint32_t> loads(p.targets.size(), 0);
  for (std::size_t s = 0; s < p.sources.size(); ++s) {
    if (a.option[s] >= p.options[s].size() || a.chosen[s] != chosen_targets(p, s, a.option[s]))
      throw std::invalid_argument("assignment choice of source " + std::to_string(s) + " is inconsistent");
    for (const auto t : a.chosen[s]) ++loads[t];
  }
  std::uint64_t psi = 0;
  for (const auto r : loads) psi += static_cast<std::uint64_t>(r) * r;
  if (loads != a.loads || psi != a.psi) throw std::invalid_argument("assignment loads or psi are inconsistent");

  std::vector<LocalViolation> out;
  const bool pair = pair_mode(p);
  for (std::size_t s = 0; s < p.sources.size(); ++s) {
    const auto own = p.options[s][a.option[s]];
    for (const auto alt : p.options[s]) {
      if (alt == own) continue;
      // single: own is W0, alt is W'. pair: own is the excluded e*, alt a chosen edge.
      const auto r_own = static_cast<std::int64_t>(loads[own]);
      const auto r_alt = static_cast<std::int64_t>(loads[alt]);
      const bool bad = pair ? r_own < r_alt - 1 : r_alt < r_own - 1;
      if (bad)
        out.push_back({s, alt,
                       pair ? "excluded load " + std::to_string(r_own) + " < chosen load " + std::to_string(r_alt) + " - 1"
                            : "alternative load " + std::to_string(r_alt) + " < chosen load " +
                                  std::to_string(r_own) + " - 1"});
    }
  }
  return out;
}

LoadProfile load_profile(const CliqueAssignment& a) {
  LoadProfile out;
  for (const auto r : a.loads) {
    ++out.histogram[r];
    out.max_load = std::max(out.max_load, r);
  }
  return out;
}

std::string dump_assignment(const CliqueAssignment& a) {
  auto list = [](const std::vector<Vertex>& vs) {
    std::string s;
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? " " : "") + std::to_string(vs[i]);
    return s;
  };
  std::string out;
  for (std::size_t s = 0; s < a.sources.size(); ++s) {
    out += list(a.sources[s]) + " ->";
    for (std::size_t i = 0; i < a.chosen[s].size(); ++i) out += (i ? " | " : " ") + list(a.targets[a.chosen[s][i]]);
    out += '\n';
  }
  out += "# loads";
  for (const auto& [load, count] : load_profile(a).histogram)
    out += ' ' + std::to_string(load) + ':' + std::to_string(count);
  out += " psi:" + std::to_string(a.psi) + '\n';
  return out;
}

}  // namespace gturan
