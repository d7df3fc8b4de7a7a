#include <doctest.h>

#include <random>

#include "gturan/coloring.hpp"
#include "gturan/construct.hpp"
#include "gturan/errors.hpp"
#include "gturan/generators.hpp"
#include "gturan/matcher.hpp"
#include "gturan/subgraph.hpp"
#include "gturan/theta.hpp"
#include "oracles.hpp"

using namespace gturan;

namespace {

Graph petersen() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.push_back(make_edge(i, (i + 1) % 5));
    e.push_back(make_edge(i, i + 5));
    e.push_back(make_edge(i + 5, (i + 2) % 5 + 5));
  }
  return Graph::from_edges(10, e);
}

Graph triangle() { return complete(3); }

}  // namespace

TEST_CASE("find_embedding examples") {
  CHECK(find_embedding(complete(4), book(2)).has_value());
  CHECK_FALSE(find_embedding(turan(2, 10), build_theta(ThetaSpec::make({1, 2}))).has_value());
  const auto c5 = find_embedding(petersen(), build_theta(ThetaSpec::make({2, 3})));
  REQUIRE(c5.has_value());
  CHECK(is_valid_embedding(petersen(), build_theta(ThetaSpec::make({2, 3})), *c5));
  CHECK(oracle::contains(oracle::Mat(petersen()), oracle::Mat(cycle(5))));
  CHECK_FALSE(find_embedding(petersen(), cycle(4)).has_value());
  CHECK_THROWS_AS(find_embedding(complete(20), empty(17)), LimitExceeded);
  CHECK(find_embedding(complete(3), empty(0)).has_value());
  CHECK_FALSE(find_embedding(complete(3), empty(4)).has_value());
}

TEST_CASE("find_embedding returns the lexicographically least embedding") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto host = oracle::random_graph(1 + rng() % 7, 1 + rng() % 3, 4, rng);
    const auto pattern = oracle::random_graph(1 + rng() % 5, 1, 2, rng);
    std::optional<std::vector<std::size_t>> least;
    if (pattern.n <= host.n) {
      oracle::for_each_injective(host, pattern, [&](const std::vector<std::size_t>& img) {
        least = img;
        return true;
      });
    }
    const auto got = find_embedding(host.to_graph(), pattern.to_graph());
    REQUIRE(got.has_value() == least.has_value());
    if (got) {
      CHECK(std::vector<std::size_t>(got->begin(), got->end()) == *least);
      CHECK(is_valid_embedding(host.to_graph(), pattern.to_graph(), *got));
    }
  }
}

TEST_CASE("disjoint copies") {
  CHECK(contains_k_disjoint(complete(6), triangle(), 2).has_value());
  CHECK_FALSE(contains_k_disjoint(complete(5), triangle(), 2).has_value());
  CHECK_FALSE(contains_k_disjoint(join(complete(2), turan(2, 8)), triangle(), 3).has_value());
  CHECK_THROWS_AS(contains_k_disjoint(complete(5), triangle(), 0), std::invalid_argument);

  const auto two = contains_k_disjoint(complete(7), triangle(), 2);
  REQUIRE(two.has_value());
  REQUIRE(two->size() == 2);
  std::set<Vertex> used;
  for (const auto& emb : *two) {
    CHECK(is_valid_embedding(complete(7), triangle(), emb));
    used.insert(emb.begin(), emb.end());
  }
  CHECK(used.size() == 6);
}

TEST_CASE("disjoint copies agree with brute force and are monotone in k") {
  std::mt19937_64 rng(22);
  const std::vector<Graph> patterns{triangle(), path(3), cycle(4), book(2), complete(2),
                                    build_theta(ThetaSpec::make({2, 3}))};
  for (int trial = 0; trial < 250; ++trial) {
    const auto host = oracle::random_graph(3 + rng() % 8, 1 + rng() % 3, 4, rng);
    const Graph& pattern = patterns[rng() % patterns.size()];
    const std::size_t k = 1 + rng() % 3;
    const auto got = contains_k_disjoint(host.to_graph(), pattern, k);
    CHECK(got.has_value() == oracle::contains_k_disjoint(host, oracle::Mat(pattern), k));
    if (got && k > 1) CHECK(contains_k_disjoint(host.to_graph(), pattern, k - 1).has_value());
    if (got) {
      std::set<Vertex> used;
      for (const auto& emb : *got) {
        CHECK(is_valid_embedding(host.to_graph(), pattern, emb));
        used.insert(emb.begin(), emb.end());
      }
      CHECK(used.size() == k * pattern.order());
    }
  }
}

TEST_CASE("edge-anchored packing finds copies through the edge") {
  std::mt19937_64 rng(23);
  const Pattern tri(triangle());
  for (int trial = 0; trial < 150; ++trial) {
    const auto m = oracle::random_graph(4 + rng() % 6, 1, 2, rng);
    const Graph g = m.to_graph();
    const auto edges = g.edges();
    if (edges.empty()) continue;
    const Edge e = edges[rng() % edges.size()];
    const std::size_t k = 1 + rng() % 2;
    const BitGraph bits = g.to_bit_graph();
    const auto got = pack_copies_through_edge(bits, tri, k, VertexSet(g.order(), true), e.u, e.v);
    // Oracle: some family of k disjoint triangles has a member containing uv.
    bool expected = false;
    const auto tris = oracle::cliques(m, 3);
    std::function<bool(std::size_t, std::size_t, std::uint64_t, bool)> rec = [&](std::size_t need, std::size_t from,
                                                                                  std::uint64_t used, bool hit) {
      if (need == 0) return hit;
      for (std::size_t i = from; i < tris.size(); ++i) {
        std::uint64_t s = 0;
        for (auto v : tris[i]) s |= std::uint64_t{1} << v;
        if (s & used) continue;
        const bool through = ((s >> e.u) & 1u) && ((s >> e.v) & 1u);
        if (rec(need - 1, i + 1, used | s, hit || through)) return true;
      }
      return false;
    };
    expected = rec(k, 0, 0, false);
    CHECK(got.has_value() == expected);
  }
}

TEST_CASE("book degrees") {
  CHECK(edge_book_degree(complete(4), {0, 1}) == 2);
  CHECK(edge_book_degree(turan(2, 8), {0, 4}) == 0);
  CHECK_THROWS_AS(edge_book_degree(turan(2, 8), {0, 1}), std::invalid_argument);
  CHECK(max_book(book(5)) == 5);
  CHECK(max_book(cycle(9)) == 0);
  CHECK(max_book(join(complete(1), turan(2, 6))) == 3);
  const auto rs = ruzsa_szemeredi(3, {1, 2});
  for (const Edge& e : rs.graph.edges()) CHECK(edge_book_degree(rs.graph, e) == 1);

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_graph(2 + rng() % 9, 1, 3, rng);
    bool each_in_one = true;
    for (auto [u, v] : m.edges()) {
      std::size_t common = 0;
      for (std::size_t w = 0; w < m.n; ++w) common += m.has(u, w) && m.has(v, w);
      each_in_one = each_in_one && common <= 1;
    }
    CHECK((max_book(m.to_graph()) < 2) == each_in_one);
  }
}

TEST_CASE("edge colorings") {
  auto c = EdgeColoring::complete_bipartite(2, 3, 4);
  CHECK(c.part_a() == std::vector<Vertex>{0, 1});
  CHECK(c.color(0, 2) == 4);
  c.set_color(3, 1, 7);
  CHECK(c.color(1, 3) == 7);
  CHECK_THROWS_AS(c.color(0, 1), std::invalid_argument);
  const auto parsed = EdgeColoring::parse(c.to_text());
  CHECK(parsed.color(1, 3) == 7);
  CHECK(parsed.host() == c.host());

  CHECK_THROWS_AS(EdgeColoring::parse("0 1 0\n1 2 0\n2 0 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(EdgeColoring::parse("0 1\n"), ParseError);
  CHECK_THROWS_AS(EdgeColoring::parse("0 x 1\n"), ParseError);
  std::vector<bool> in_a{true, true, false};
  CHECK_THROWS_AS(EdgeColoring(complete(3), in_a), std::invalid_argument);
}

TEST_CASE("rainbow star or monochromatic matching") {
  auto mono = EdgeColoring::complete_bipartite(8, 8, 0);
  const auto w1 = rainbow_or_matching(mono, 2);
  CHECK(w1.kind == WitnessKind::kMonochromaticMatching);
  CHECK(w1.matching.size() == 3);
  CHECK(verify_witness(mono, 2, w1));

  auto distinct = EdgeColoring::complete_bipartite(8, 8, 0);
  Color next = 0;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = 8; b < 16; ++b) distinct.set_color(a, b, next++);
  const auto w2 = rainbow_or_matching(distinct, 2);
  CHECK(w2.kind == WitnessKind::kRainbowStar);
  CHECK(w2.leaves.size() == 2);
  CHECK(verify_witness(distinct, 2, w2));

  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = EdgeColoring::complete_bipartite(8, 8, 0);
    for (Vertex a = 0; a < 8; ++a)
      for (Vertex b = 8; b < 16; ++b) c.set_color(a, b, static_cast<Color>(rng() % 2));
    const auto w = rainbow_or_matching(c, 2);
    CHECK(w.kind != WitnessKind::kNotFound);
    CHECK(verify_witness(c, 2, w));
  }
}

TEST_CASE("NotFound only when neither structure exists") {
  // K_{1,1}: no star with 2 leaves, no matching of size 3.
  const auto tiny = EdgeColoring::complete_bipartite(1, 1, 0);
  CHECK(rainbow_or_matching(tiny, 2).kind == WitnessKind::kNotFound);

  // Small hosts: compare with an exhaustive search for either structure.
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t a = 1 + rng() % 4;
    const std::size_t b = 1 + rng() % 4;
    const std::size_t k = 1 + rng() % 2;
    auto c = EdgeColoring::complete_bipartite(a, b, 0);
    for (Vertex u = 0; u < a; ++u)
      for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v) c.set_color(u, v, static_cast<Color>(rng() % 3));
    bool exists = false;
    for (Vertex v = 0; v < a + b && !exists; ++v) {
      std::set<Color> colors;
      for (auto [w, col] : c.incident(v)) colors.insert(col);
      exists = colors.size() >= k;
    }
    for (Color col = 0; col < 3 && !exists; ++col) {
      // Maximum matching in one color class by brute force over A orderings.
      std::vector<Vertex> order(a);
      std::iota(order.begin(), order.end(), Vertex{0});
      std::function<std::size_t(std::size_t, std::uint64_t)> best = [&](std::size_t i, std::uint64_t used) {
        if (i == a) return std::size_t{0};
        std::size_t r = best(i + 1, used);
        for (Vertex v = static_cast<Vertex>(a); v < a + b; ++v)
          if (!((used >> v) & 1u) && c.color(static_cast<Vertex>(i), v) == col)
            r = std::max(r, 1 + best(i + 1, used | (std::uint64_t{1} << v)));
        return r;
      };
      exists = best(0, 0) >= k + 1;
    }
    const auto w = rainbow_or_matching(c, k);
    CHECK((w.kind != WitnessKind::kNotFound) == exists);
    if (w.kind != WitnessKind::kNotFound) CHECK(verify_witness(c, k, w));
  }
}
