#include <doctest.h>

#include <numeric>
#include <random>

#include "gturan/assignment.hpp"
#include "gturan/cliques.hpp"
#include "gturan/construct.hpp"
#include "gturan/generators.hpp"
#include "oracles.hpp"

using namespace gturan;

namespace {

std::vector<std::uint32_t> sorted_loads(const CliqueAssignment& a) {
  auto loads = a.loads;
  std::sort(loads.rbegin(), loads.rend());
  return loads;
}

}  // namespace

TEST_CASE("mode parsing") {
  CHECK(AssignmentMode::parse("pair") == AssignmentMode::pair());
  CHECK(AssignmentMode::parse("single:3") == AssignmentMode::single(3));
  CHECK(AssignmentMode::single(2).to_string() == "single:2");
  CHECK_THROWS_AS(AssignmentMode::parse("single:1"), std::invalid_argument);
  CHECK_THROWS_AS(AssignmentMode::parse("single"), std::invalid_argument);
  CHECK_THROWS_AS(AssignmentMode::parse("triple"), std::invalid_argument);
}

TEST_CASE("minimize_psi examples") {
  const auto s = minimize_psi(complete(4), AssignmentMode::single(2));
  CHECK(s.psi == 4);
  CHECK(s.loads.size() == 6);
  CHECK(sorted_loads(s) == std::vector<std::uint32_t>{1, 1, 1, 1, 0, 0});

  const auto p = minimize_psi(complete(4), AssignmentMode::pair());
  CHECK(p.psi == 12);
  CHECK(sorted_loads(p) == std::vector<std::uint32_t>{2, 2, 1, 1, 1, 1});

  CHECK(minimize_psi(complete(3), AssignmentMode::pair()).psi == 2);

  const auto none = minimize_psi(cycle(6), AssignmentMode::single(2));
  CHECK(none.sources.empty());
  CHECK(none.psi == 0);
}

TEST_CASE("load profiles") {
  const auto k4 = load_profile(minimize_psi(complete(4), AssignmentMode::single(2)));
  CHECK(k4.max_load == 1);
  CHECK(k4.histogram.at(0) == 2);
  CHECK(k4.histogram.at(1) == 4);
  CHECK(load_profile(minimize_psi(book(5), AssignmentMode::single(2))).max_load == 1);
  const auto rs = ruzsa_szemeredi(5, {1, 3, 4});
  CHECK(load_profile(minimize_psi(rs.graph, AssignmentMode::pair())).max_load == 1);
}

TEST_CASE("local optimality checks") {
  CHECK(verify_local_optimality(complete(4), minimize_psi(complete(4), AssignmentMode::single(2))).empty());
  // Option 0 everywhere: both triangles through 01 pick it, edge 03 stays empty.
  const Graph k4 = complete(4);
  const auto base = minimize_psi(k4, AssignmentMode::single(2));
  std::vector<std::uint32_t> options(base.sources.size(), 0);
  const auto piled = assignment_from_options(k4, AssignmentMode::single(2), options);
  CHECK(piled.loads[0] == 2);
  CHECK_FALSE(verify_local_optimality(k4, piled).empty());
  CHECK(verify_local_optimality(empty(5), minimize_psi(empty(5), AssignmentMode::pair())).empty());

  auto broken = base;
  broken.loads[0] += 1;
  CHECK_THROWS_AS(verify_local_optimality(k4, broken), std::invalid_argument);
}

TEST_CASE("piling four triangles onto one edge is not locally optimal") {
  // Book with four pages: all triangles contain the spine 01.
  const Graph b4 = book(4);
  const auto a = assignment_from_options(b4, AssignmentMode::single(2), {0, 0, 0, 0});
  CHECK(a.loads[0] == 4);
  const auto v = verify_local_optimality(b4, a);
  // Each source has two empty alternatives.
  CHECK(v.size() == 8);
}

TEST_CASE("minimize_psi reaches the exhaustive minimum") {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 250) {
    const auto m = oracle::random_graph(3 + rng() % 5, 1 + rng() % 3, 4, rng);
    const Graph g = m.to_graph();
    if (count_cliques(g, 3) > 6) continue;
    ++checked;
    const auto pair = minimize_psi(g, AssignmentMode::pair());
    CHECK(pair.psi == oracle::min_psi(m, true, 2));
    const auto single = minimize_psi(g, AssignmentMode::single(2));
    CHECK(single.psi == oracle::min_psi(m, false, 2));
    if (count_cliques(g, 4) <= 5) {
      CHECK(minimize_psi(g, AssignmentMode::single(3)).psi == oracle::min_psi(m, false, 3));
    }
  }
}

TEST_CASE("assignment invariants on random graphs") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = oracle::random_graph(4 + rng() % 14, 1 + rng() % 3, 5, rng);
    const Graph g = m.to_graph();
    for (const AssignmentMode mode : {AssignmentMode::single(2), AssignmentMode::single(3), AssignmentMode::pair()}) {
      const auto a = minimize_psi(g, mode);
      CHECK(verify_local_optimality(g, a).empty());
      const std::uint64_t total = std::accumulate(a.loads.begin(), a.loads.end(), std::uint64_t{0});
      CHECK(total == a.sources.size() * (mode.kind == AssignmentMode::Kind::kPair ? 2 : 1));
      std::uint64_t psi = 0;
      for (auto l : a.loads) psi += std::uint64_t{l} * l;
      CHECK(psi == a.psi);
      for (std::size_t i = 0; i < a.sources.size(); ++i) {
        for (auto t : a.chosen[i]) {
          for (auto v : a.targets[t]) {
            CHECK(std::find(a.sources[i].begin(), a.sources[i].end(), v) != a.sources[i].end());
          }
        }
      }
    }
  }
}

TEST_CASE("psi does not depend on labels") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 4;
    const Graph g = oracle::random_graph(n, 2, 3, rng).to_graph();
    const auto perm = oracle::random_permutation(n, rng);
    const Graph h = g.relabeled(perm);
    CHECK(minimize_psi(g, AssignmentMode::pair()).psi == minimize_psi(h, AssignmentMode::pair()).psi);
    CHECK(minimize_psi(g, AssignmentMode::single(2)).psi == minimize_psi(h, AssignmentMode::single(2)).psi);
  }
}

TEST_CASE("assignment dump") {
  const auto a = minimize_psi(complete(3), AssignmentMode::pair());
  const std::string text = dump_assignment(a);
  CHECK(text.find("0 1 2 ->") == 0);
  CHECK(text.find("# loads") != std::string::npos);
}
