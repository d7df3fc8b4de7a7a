#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gturan/assignment.hpp"
#include "gturan/cliques.hpp"
#include "gturan/construct.hpp"
#include "gturan/errors.hpp"
#include "gturan/generators.hpp"
#include "gturan/graph6.hpp"
#include "gturan/rational.hpp"
#include "gturan/search.hpp"
#include "gturan/stability.hpp"
#include "gturan/subgraph.hpp"
#include "gturan/theta.hpp"

#ifndef GTURAN_VERSION
#define GTURAN_VERSION "0.0.0"
#endif

namespace gturan::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Globals {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::optional<std::size_t> budget;
  bool csv = false;
  bool timing = false;
};

// Text emitted on success; nothing reaches stdout before a command finishes.
struct Output {
  std::string text;
};

Json header(const std::string& command) {
  Json j;
  j["schema"] = 1;
  j["version"] = GTURAN_VERSION;
  j["command"] = command;
  return j;
}

// Only commands that draw random numbers record the seed, so payloads of the
// others do not change with it.
void record_seed(Json& j, const Globals& g) { j["seed"] = g.seed; }

Json rational_json(const Rational& r) {
  if (r.den == 1) return Json(r.num);
  return Json(r.to_string());
}

bool looks_like_theta(const std::string& text) {
  if (text.rfind("theta", 0) == 0) return true;
  return !text.empty() && text.find_first_not_of("0123456789, ") == std::string::npos;
}

ForbiddenSpec parse_forbidden(const std::string& text, std::size_t copies) {
  if (looks_like_theta(text)) return ForbiddenSpec::theta(ThetaSpec::parse(text), copies);
  return ForbiddenSpec::graph(graph6_decode(text), copies, text);
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_graph6_stream(in);
}

Graph read_single_graph(const std::string& path) {
  auto graphs = read_graph_file(path);
  if (graphs.size() != 1) {
    throw std::invalid_argument(path + ": expected exactly one graph, found " + std::to_string(graphs.size()));
  }
  return std::move(graphs.front());
}

std::vector<std::int64_t> parse_int_params(const std::vector<std::string>& params, std::size_t from) {
  std::vector<std::int64_t> out;
  for (std::size_t i = from; i < params.size(); ++i) {
    const std::string& s = params[i];
    std::size_t used = 0;
    std::int64_t value = 0;
    try {
      value = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw std::invalid_argument("not an integer: " + s);
    out.push_back(value);
  }
  return out;
}

std::size_t as_size(std::int64_t v, const char* what) {
  if (v < 0) throw std::invalid_argument(std::string(what) + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

void expect_params(const std::vector<std::int64_t>& p, std::size_t count, const std::string& name) {
  if (p.size() != count) {
    throw std::invalid_argument(name + " takes " + std::to_string(count) + " parameter(s)");
  }
}

Json extremal_json(const ExtremalResult& r) {
  Json j;
  j["n"] = r.n;
  j["objective"] = r.objective;
  j["forbidden"] = r.forbidden;
  j["value"] = rational_json(r.value);
  j["exact"] = r.exact;
  j["witness_count"] = r.witness_count;
  j["witnesses_complete"] = r.witnesses_complete;
  j["witnesses"] = r.witnesses;
  j["examined"] = r.examined;
  j["pruned"] = r.pruned;
  return j;
}

Json magnitude_json(const ThetaSpec& spec) {
  const MagnitudeClass mc = classify(spec);
  Json j;
  j["spec"] = spec.to_string();
  j["label"] = std::string(to_string(mc.label));
  j["alpha"] = mc.alpha ? Json(mc.alpha->to_string()) : Json(nullptr);
  j["alpha_num"] = mc.alpha ? Json(mc.alpha->num) : Json(nullptr);
  j["alpha_den"] = mc.alpha ? Json(mc.alpha->den) : Json(nullptr);
  j["t"] = mc.t;
  j["lengths"] = spec.lengths();
  j["edges"] = spec.size();
  j["triangles"] = theta_triangle_count(spec);
  j["contains_theta1223"] = contains_theta1223(spec);
  j["edge_critical"] = is_edge_critical(spec);
  return j;
}

Json cmd_classify(const std::string& text) {
  Json j = header("classify");
  j.update(magnitude_json(ThetaSpec::parse(text)));
  return j;
}

struct BuildOutput {
  Graph graph;
  Json extra = Json::object();
};

BuildOutput build_graph(const Globals& g, const std::vector<std::string>& params) {
  const std::string& name = params.front();
  if (auto kind = parse_generator_kind(name)) {
    const auto p = parse_int_params(params, 1);
    return {build_standard(*kind, p)};
  }
  if (name == "theta") {
    if (params.size() != 2) throw std::invalid_argument("theta takes one spec parameter");
    return {build_theta(ThetaSpec::parse(params[1]))};
  }
  const auto p = parse_int_params(params, 1);
  if (name == "apex_turan") {
    expect_params(p, 2, name);
    const std::size_t k = as_size(p[0], "k");
    const std::size_t n = as_size(p[1], "n");
    if (k < 1 || k > n) throw std::invalid_argument("apex_turan requires 1 <= k <= n");
    return {apex_turan(k, n)};
  }
  if (name == "matched_bipartite") {
    expect_params(p, 1, name);
    const std::size_t n = as_size(p[0], "n");
    if (n < 2) throw std::invalid_argument("matched_bipartite requires n >= 2");
    return {matched_bipartite(n)};
  }
  if (name == "k_tree") {
    expect_params(p, 2, name);
    return {random_k_tree(as_size(p[0], "k"), as_size(p[1], "n"), g.seed)};
  }
  if (name == "rs") {
    expect_params(p, 1, name);
    if (p[0] < 1) throw std::invalid_argument("rs requires m >= 1");
    const APFreeSet set = behrend_set(p[0]);
    TriangleSystem ts = ruzsa_szemeredi(p[0], set.elements);
    BuildOutput out{std::move(ts.graph)};
    out.extra["set"] = set.elements;
    out.extra["base"] = set.base;
    return out;
  }
  throw std::invalid_argument("unknown construction: " + name);
}

Json cmd_build(const Globals& g, const std::vector<std::string>& params, const std::string& out_path) {
  BuildOutput built = build_graph(g, params);
  const Graph& graph = built.graph;
  Json j = header("build");
  if (params.front() == "k_tree") record_seed(j, g);
  j["construction"] = params.front();
  j["params"] = std::vector<std::string>(params.begin() + 1, params.end());
  j["n"] = graph.order();
  j["edges"] = graph.size();
  j["triangles"] = count_cliques(graph, 3);
  for (auto& [key, value] : built.extra.items()) j[key] = value;
  const std::string g6 = graph6_encode(graph);
  j["graph6"] = g6;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write " + out_path);
    out << g6 << '\n';
    if (!out) throw std::runtime_error("write failed: " + out_path);
  }
  return j;
}

EnumerationOptions enumeration_options(const Globals& g) {
  EnumerationOptions opt;
  opt.threads = g.threads;
  return opt;
}

HeuristicOptions heuristic_options(const Globals& g) {
  HeuristicOptions opt;
  if (g.budget) opt.budget = *g.budget;
  opt.seed = g.seed;
  return opt;
}

Json cmd_oracle(const Globals& g, std::size_t n, std::size_t r, const std::string& forbid, std::size_t copies,
                bool heuristic) {
  const ForbiddenSpec spec = parse_forbidden(forbid, copies);
  const ExtremalResult res = heuristic ? edge_maximal_lower_bound(n, r, spec, heuristic_options(g))
                                       : extremal_oracle(n, r, spec, enumeration_options(g));
  Json j = header("oracle");
  if (heuristic) record_seed(j, g);
  j["r"] = r;
  j["copies"] = copies;
  j.update(extremal_json(res));
  return j;
}

Json cmd_phi(const Globals& g, std::size_t n, std::size_t r, const std::string& c, const std::string& forbid) {
  const PhiResult res = phi_oracle(n, r, Rational::parse(c), ThetaSpec::parse(forbid), enumeration_options(g));
  Json j = header("phi");
  j["r"] = r;
  j["c"] = Rational::parse(c).to_string();
  j.update(extremal_json(res.result));
  j["mantel_bound"] = res.mantel_bound;
  j["equals_bound"] = res.equals_bound;
  j["exceeds_bound"] = res.exceeds_bound;
  j["unique_turan_witness"] = res.unique_turan_witness;
  return j;
}

FormulaReport run_formula_report(const Globals& g, std::size_t k, std::size_t r, const std::string& forbid,
                            std::size_t n_min, std::size_t n_max) {
  FormulaReportOptions opt;
  opt.n_min = n_min;
  opt.n_max = n_max;
  opt.enumeration = enumeration_options(g);
  opt.heuristic = heuristic_options(g);
  return formula_report(k, r, ThetaSpec::parse(forbid), opt);
}

Json cmd_formula_report(const Globals& g, const FormulaReport& rep) {
  Json j = header("theorem2");
  record_seed(j, g);
  j["k"] = rep.k;
  j["r"] = rep.r;
  j["forbid"] = rep.spec.to_string();
  j["formula_regime"] = rep.formula_regime;
  j["note"] = rep.note;
  j["crossover"] = rep.crossover ? Json(*rep.crossover) : Json(nullptr);
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    Json rj;
    rj["n"] = row.n;
    rj["formula"] = row.formula ? Json(*row.formula) : Json(nullptr);
    rj["best"] = row.best;
    rj["exact"] = row.exact;
    rj["gap"] = row.gap ? Json(*row.gap) : Json(nullptr);
    rj["complete_competitor"] = row.complete_competitor;
    rj["witness_count"] = row.witness_count;
    rj["witness"] = row.witness;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string formula_csv(const FormulaReport& rep) {
  std::ostringstream os;
  os << "n,formula,best,exact,gap,complete_competitor,witness_count,witness\n";
  for (const auto& row : rep.rows) {
    os << row.n << ',';
    if (row.formula) os << *row.formula;
    os << ',' << row.best << ',' << (row.exact ? "true" : "false") << ',';
    if (row.gap) os << *row.gap;
    os << ',' << row.complete_competitor << ',' << row.witness_count << ',';
    // graph6 may contain commas and quotes.
    os << '"';
    for (char ch : row.witness) {
      if (ch == '"') os << '"';
      os << ch;
    }
    os << "\"\n";
  }
  return os.str();
}

Json cmd_assign(const std::string& path, const std::string& mode_text, const std::string& forbid) {
  const Graph graph = read_single_graph(path);
  const AssignmentMode mode = AssignmentMode::parse(mode_text);
  const CliqueAssignment a = minimize_psi(graph, mode);
  const auto violations = verify_local_optimality(graph, a);
  const LoadProfile profile = load_profile(a);

  Json j = header("assign");
  j["graph6"] = graph6_encode(graph);
  j["n"] = graph.order();
  j["mode"] = mode.to_string();
  j["sources"] = a.sources.size();
  j["targets"] = a.targets.size();
  j["psi"] = a.psi;
  j["max_load"] = profile.max_load;
  Json hist = Json::array();
  for (const auto& [load, count] : profile.histogram) hist.push_back({load, count});
  j["histogram"] = std::move(hist);
  j["locally_optimal"] = violations.empty();
  Json vj = Json::array();
  for (const auto& v : violations) {
    vj.push_back({{"source", v.source}, {"alternative", v.alternative}, {"detail", v.detail}});
  }
  j["violations"] = std::move(vj);
  Json choices = Json::array();
  for (std::size_t i = 0; i < a.sources.size(); ++i) {
    Json chosen = Json::array();
    for (auto t : a.chosen[i]) chosen.push_back(a.targets[t]);
    choices.push_back({{"source", a.sources[i]}, {"targets", std::move(chosen)}});
  }
  j["assignment"] = std::move(choices);
  if (!forbid.empty()) {
    const ThetaSpec spec = ThetaSpec::parse(forbid);
    j["forbid"] = spec.to_string();
    j["forbidden_free"] = !find_embedding(graph, build_theta(spec)).has_value();
    j["reference_load"] = 2 * spec.order();
  }
  return j;
}

Json cmd_stability(const Globals& g, const std::string& path, const std::string& eps_text, const std::string& forbid) {
  const Graph graph = read_single_graph(path);
  BipartitionOptions opt;
  if (g.budget) opt.budget = *g.budget;
  opt.seed = g.seed;
  opt.threads = g.threads;
  const StabilityReport rep = stability_extract(graph, Rational::parse(eps_text), ThetaSpec::parse(forbid), opt);

  Json j = header("stability");
  record_seed(j, g);
  j["forbid"] = ThetaSpec::parse(forbid).to_string();
  j["n"] = rep.n;
  j["edges"] = rep.edges;
  j["eps"] = rep.eps.to_string();
  j["alpha"] = rep.alpha.to_string();
  j["edge_hypothesis"] = rep.edge_hypothesis;
  j["forbidden_free"] = rep.forbidden_free;
  j["hypothesis_ok"] = rep.hypothesis_ok;
  j["survivor"] = rep.survivor;
  j["threshold"] = rep.survivor_threshold.to_string();
  j["removed"] = rep.peel.removal_order.size();
  j["survivor_min_degree"] = rep.survivor_min_degree;
  j["survivor_bipartite"] = rep.survivor_bipartite;
  j["internal_edges"] = rep.bipartition.internal_edges;
  j["bipartition_exact"] = rep.bipartition.exact;
  j["part_a"] = rep.bipartition.part_a;
  j["part_b"] = rep.bipartition.part_b;
  j["part_bound"] = rep.part_bound.to_string();
  j["clauses"] = {{"survivor", std::string(to_string(rep.survivor_clause))},
                  {"bipartite", std::string(to_string(rep.bipartite_clause))},
                  {"part_size", std::string(to_string(rep.part_size_clause))},
                  {"min_degree", std::string(to_string(rep.min_degree_clause))}};
  return j;
}

Json cmd_verify_rs(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  const APFreeSet set = behrend_set(m);
  const TriangleSystem ts = ruzsa_szemeredi(m, set.elements);
  const std::uint64_t expected = static_cast<std::uint64_t>(m) * set.elements.size();
  const bool ap_free = is_3ap_free(set.elements);
  const bool linear = verify_linear_triangle_system(ts);
  const std::size_t book = max_book(ts.graph);
  const std::uint64_t triangles = count_cliques(ts.graph, 3);

  Json j = header("verify rs");
  j["m"] = m;
  j["base"] = set.base;
  j["set_size"] = set.elements.size();
  j["set"] = set.elements;
  j["ap_free"] = ap_free;
  j["vertices"] = ts.graph.order();
  j["edges"] = ts.graph.size();
  j["triangles"] = triangles;
  j["expected_triangles"] = expected;
  j["max_book"] = book;
  j["linear"] = linear;
  j["ok"] = ap_free && linear && triangles == expected && (expected == 0 ? book == 0 : book == 1);
  return j;
}

int run_manifest(const Globals& g, const std::vector<std::string>& global_args, const std::string& manifest,
                 const std::string& out_dir, Output& output, std::ostream& err);

enum ExitCode { kOk = 0, kUsage = 1, kLimit = 2, kInternal = 3 };

int dispatch(const std::vector<std::string>& args, Output& output, std::ostream& err) {
  CLI::App app{"Generalized Turan experiments for theta graphs", "gturan"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", GTURAN_VERSION);

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--threads", g.threads, "Worker threads (never changes results)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{256}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--budget", g.budget, "Restart budget for heuristic searches")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_flag("--csv", g.csv, "CSV output for tabular commands");
  app.add_flag("--timing", g.timing, "Add wall_ms to the report");

  std::string theta_text;
  auto* classify = app.add_subcommand("classify", "Magnitude class of ex(n, K3, theta)");
  classify->add_option("spec", theta_text, "theta(p1,...,pk)")->required();

  std::vector<std::string> build_params;
  std::string build_out;
  auto* build = app.add_subcommand("build", "Build a graph and print its graph6");
  build->add_option("construction", build_params,
                    "complete|path|cycle|complete_bipartite|turan|book|empty|theta|apex_turan|"
                    "matched_bipartite|k_tree|rs followed by parameters")
      ->required();
  build->add_option("--out", build_out, "Also write the graph6 line to this file");

  std::size_t n = 0;
  std::size_t r = 3;
  std::string forbid;
  std::size_t copies = 1;
  bool heuristic = false;
  auto* oracle = app.add_subcommand("oracle", "Exact ex(n, K_r, forbidden) by exhaustive search");
  oracle->add_option("--n", n)->required();
  oracle->add_option("--r", r)->required();
  oracle->add_option("--forbid", forbid, "theta spec or graph6")->required();
  oracle->add_option("--copies", copies)->check(CLI::PositiveNumber);
  oracle->add_flag("--heuristic", heuristic, "Certified lower bound instead of exhaustive search");

  std::string c_text;
  auto* phi = app.add_subcommand("phi", "Exact max of e(G) + c N_r(G) over F-free graphs");
  phi->add_option("--n", n)->required();
  phi->add_option("--r", r)->required();
  phi->add_option("--c", c_text, "p/q")->required();
  phi->add_option("--forbid", forbid)->required();

  std::size_t k = 1;
  std::size_t n_min = 0;
  std::size_t n_max = 10;
  auto* theorem2 = app.add_subcommand("theorem2", "Formula versus search table for ex(n, K_r, kF)");
  theorem2->add_option("--k", k)->required();
  theorem2->add_option("--r", r)->required();
  theorem2->add_option("--forbid", forbid)->required();
  theorem2->add_option("--n-max", n_max);
  theorem2->add_option("--n-min", n_min);

  std::string graph_file;
  std::string mode_text;
  auto* assign = app.add_subcommand("assign", "Potential-minimizing clique assignment");
  assign->add_option("graph", graph_file, "graph6 file")->required();
  assign->add_option("--mode", mode_text, "single:k or pair")->required();
  assign->add_option("--forbid", forbid, "theta spec to report against");

  std::string eps_text;
  std::string stab_forbid = "theta(1,2)";
  auto* stability = app.add_subcommand("stability", "Degree peeling and bipartition extraction");
  stability->add_option("graph", graph_file, "graph6 file")->required();
  stability->add_option("--eps", eps_text)->required();
  stability->add_option("--forbid", stab_forbid, "edge-critical theta spec");

  std::int64_t m = 0;
  auto* verify = app.add_subcommand("verify", "Self-checking constructions");
  verify->require_subcommand(1);
  auto* verify_rs = verify->add_subcommand("rs", "Behrend set, RS graph and linear-system check");
  verify_rs->add_option("--m", m)->required();

  std::string manifest;
  std::string out_dir = "reports";
  auto* run = app.add_subcommand("run", "Run every command of a manifest file");
  run->add_option("manifest", manifest)->required();
  run->add_option("--out-dir", out_dir);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.push_back("gturan");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    std::ostringstream os;
    app.exit(e, os, err);
    output.text = os.str();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, err);
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Json j;
  if (*classify) {
    j = cmd_classify(theta_text);
  } else if (*build) {
    j = cmd_build(g, build_params, build_out);
  } else if (*oracle) {
    j = cmd_oracle(g, n, r, forbid, copies, heuristic);
  } else if (*phi) {
    j = cmd_phi(g, n, r, c_text, forbid);
  } else if (*theorem2) {
    const FormulaReport rep = run_formula_report(g, k, r, forbid, n_min, n_max);
    if (g.csv) {
      output.text = formula_csv(rep);
      return kOk;
    }
    j = cmd_formula_report(g, rep);
  } else if (*assign) {
    j = cmd_assign(graph_file, mode_text, forbid);
  } else if (*stability) {
    j = cmd_stability(g, graph_file, eps_text, stab_forbid);
  } else if (*verify_rs) {
    j = cmd_verify_rs(m);
  } else if (*run) {
    std::vector<std::string> global_args{"--seed", std::to_string(g.seed), "--threads", std::to_string(g.threads)};
    if (g.budget) {
      global_args.push_back("--budget");
      global_args.push_back(std::to_string(*g.budget));
    }
    if (g.timing) global_args.push_back("--timing");
    return run_manifest(g, global_args, manifest, out_dir, output, err);
  }
  if (g.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    j["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  output.text = j.dump(2) + "\n";
  return kOk;
}

int guarded(const std::vector<std::string>& args, Output& output, std::ostream& err) {
  try {
    return dispatch(args, output, err);
  } catch (const LimitExceeded& e) {
    err << "error: limit exceeded: " << e.what() << '\n';
    return kLimit;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

std::string entry_name(std::size_t index) {
  std::ostringstream os;
  os << std::setw(3) << std::setfill('0') << index;
  return os.str();
}

int run_manifest(const Globals& g, const std::vector<std::string>& global_args, const std::string& manifest,
                 const std::string& out_dir, Output& output, std::ostream& err) {
  std::ifstream in(manifest);
  if (!in) {
    err << "error: cannot read manifest " << manifest << '\n';
    return kUsage;
  }
  std::vector<std::pair<std::size_t, std::string>> lines;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.emplace_back(number, line.substr(first, last - first + 1));
  }
  if (in.bad()) {
    err << "error: cannot read manifest " << manifest << '\n';
    return kUsage;
  }

  std::filesystem::create_directories(out_dir);
  Json index = header("run");
  record_seed(index, g);
  index["manifest"] = manifest;
  Json entries = Json::array();
  std::size_t failed = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [number, text] = lines[i];
    std::vector<std::string> tokens;
    std::ostringstream entry_err;
    int code = kUsage;
    Output entry_out;
    try {
      tokens = split_command_line(text);
      if (!tokens.empty() && tokens.front() == "gturan") tokens.erase(tokens.begin());
      bool nested = false;
      for (const auto& t : tokens) nested = nested || t == "run";
      if (nested) {
        entry_err << "error: nested run is not allowed\n";
      } else {
        std::vector<std::string> full = global_args;
        full.insert(full.end(), tokens.begin(), tokens.end());
        code = guarded(full, entry_out, entry_err);
      }
    } catch (const std::invalid_argument& e) {
      entry_err << "error: " << e.what() << '\n';
    }

    Json e;
    e["line"] = number;
    e["command"] = text;
    e["exit_code"] = code;
    e["status"] = code == kOk ? "ok" : "failed";
    if (code == kOk) {
      const bool is_json = !entry_out.text.empty() && entry_out.text.front() == '{';
      const std::string file = entry_name(i + 1) + (is_json ? ".json" : ".csv");
      std::ofstream out(std::filesystem::path(out_dir) / file);
      out << entry_out.text;
      if (!out) throw std::runtime_error("cannot write report " + file);
      e["output"] = file;
    } else {
      ++failed;
      e["output"] = nullptr;
      e["error"] = entry_err.str();
    }
    entries.push_back(std::move(e));
  }
  index["entries"] = std::move(entries);
  index["succeeded"] = lines.size() - failed;
  index["failed"] = failed;
  const std::string text = index.dump(2) + "\n";
  std::ofstream out(std::filesystem::path(out_dir) / "index.json");
  out << text;
  if (!out) throw std::runtime_error("cannot write index.json");
  output.text = text;
  return kOk;
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  bool quoted = false;
  for (char ch : line) {
    if (quoted) {
      if (ch == '"') {
        quoted = false;
      } else {
        current += ch;
      }
    } else if (ch == '"') {
      quoted = true;
      in_token = true;
    } else if (ch == ' ' || ch == '\t') {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += ch;
      in_token = true;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote");
  if (in_token) out.push_back(std::move(current));
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Output output;
  const int code = guarded(args, output, err);
  if (code == kOk) out << output.text;
  return code;
}

}  // namespace gturan::cli
