#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lapspec/graph.hpp"
#include "lapspec/graph6.hpp"

using namespace lapspec;
using namespace lapspec::families;

TEST_CASE("from_edges basics") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(k2.size() == 1);
  CHECK(k2.has_edge(0, 1));

  Graph e4 = Graph::from_edges(4, {});
  CHECK(e4.size() == 0);

  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  auto ds = degree_stats(p4);
  CHECK(ds.degrees == std::vector<int>{2, 2, 1, 1});

  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), std::invalid_argument);
  // duplicates collapse
  CHECK(Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}}).size() == 1);
}

TEST_CASE("family constructors") {
  Graph g = star_plus_isolated(6, 1);  // K_{1,4} u K_1
  auto ds = degree_stats(g);
  CHECK(ds.degrees == std::vector<int>{4, 1, 1, 1, 1, 0});
  CHECK(g.size() == 4);

  Graph kb = complete_bipartite(2, 3);
  CHECK(degree_stats(kb).degrees == std::vector<int>{3, 3, 2, 2, 2});
  CHECK(kb.size() == 6);

  // complement duality of the two exception families, as equal adjacency
  for (int n = 3; n <= 8; ++n)
    for (int r = 0; r <= n - 2; ++r)
      CHECK(star_plus_isolated(n, r).complement() == t2_family(n, r));

  CHECK_THROWS(double_star(2, 3));
  CHECK_THROWS(star_plus_isolated(5, 4));
}

TEST_CASE("complement involution and edge counts") {
  CHECK(complete(4).complement() == empty_graph(4));
  CHECK(star(4).complement() == disjoint_union(empty_graph(1), complete(3)));
  CHECK(disjoint_union(complete(2), complete(2)).complement() == Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::uint64_t bits = (n * (n - 1)) / 2;
    std::uint64_t mask = rng() & ((bits >= 64 ? ~0ull : (1ull << bits) - 1));
    Graph g = Graph::from_bitmask(n, mask);
    CHECK(g.complement().complement() == g);
    CHECK(g.size() + g.complement().size() == n * (n - 1) / 2);
  }
}

TEST_CASE("join and union") {
  CHECK(join(complete(1), empty_graph(3)) == star(4));
  Graph u = disjoint_union(complete(2), complete(2));
  CHECK(u.size() == 2);
  // m(G1 v G2) = m1 + m2 + n1*n2
  Graph j = join(complete(3), cycle(4));
  CHECK(j.size() == 3 + 4 + 12);
  // K_2 v (3K_1) has degree sequence (5,5,2,2,2)
  Graph fig3 = join(complete(2), empty_graph(3));
  CHECK(degree_stats(fig3).degrees == std::vector<int>{4, 4, 2, 2, 2});
}

TEST_CASE("delete_edge") {
  Graph p3 = complete(3).delete_edge(0, 1);
  CHECK(degree_stats(p3).degrees == std::vector<int>{2, 1, 1});
  CHECK(complete(2).delete_edge(0, 1) == empty_graph(2));
  CHECK(degree_stats(cycle(4).delete_edge(0, 1)).degrees == std::vector<int>{2, 2, 1, 1});
  CHECK_THROWS_AS(path(3).delete_edge(0, 2), std::invalid_argument);
}

TEST_CASE("degree_stats") {
  auto ds = degree_stats(double_star(3, 2));
  CHECK(ds.degrees == std::vector<int>{3, 2, 1, 1, 1});
  CHECK(ds.k == 2);

  auto st = degree_stats(star(6));
  CHECK(st.delta1 == 5);
  CHECK(st.delta2 == 1);
  CHECK(st.k == 6);

  auto c5 = degree_stats(cycle(5));
  CHECK(c5.avg_deg == 2);

  auto k1 = degree_stats(complete(1));
  CHECK(k1.delta1 == 0);
  CHECK(k1.k == 0);
}

TEST_CASE("common_neighbors") {
  CHECK(complete(4).common_neighbors(0, 1) == 2);
  CHECK(cycle(4).common_neighbors(0, 1) == 0);
  CHECK(complete_bipartite(2, 3).common_neighbors(0, 1) == 3);
}

TEST_CASE("connectivity") {
  CHECK_FALSE(is_connected(star_plus_isolated(6, 1)));
  CHECK(components(star_plus_isolated(6, 1)).size() == 2);
  CHECK(is_connected(path(4)));
  CHECK(components(empty_graph(3)).size() == 3);
  auto comps = components(disjoint_union(complete(3), path(2)));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].graph == complete(3));
  CHECK(comps[1].vertex_map == std::vector<int>{3, 4});
}

TEST_CASE("handshake property") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    std::uint64_t bits = (n * (n - 1)) / 2;
    Graph g = Graph::from_bitmask(n, rng() & ((bits >= 64 ? ~0ull : (1ull << bits) - 1)));
    long sum = 0;
    for (int v = 0; v < n; ++v) sum += g.degree(v);
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("graph6 frozen encodings") {
  CHECK(to_graph6(complete(2)) == "A_");
  CHECK(to_graph6(complete(3)) == "Bw");
  CHECK(to_graph6(path(3)) == "Bg");
  CHECK(to_graph6(path(4)) == "Ch");
  CHECK(to_graph6(cycle(4)) == "Cl");
  CHECK(to_graph6(complete_bipartite(3, 3)) == "EFz_");
  CHECK(to_graph6(star_plus_isolated(6, 1)) == "Es_?");
  CHECK(parse_graph6("A_") == complete(2));
  CHECK(parse_graph6("Bw") == complete(3));
  CHECK(to_graph6(parse_graph6("Bg")) == "Bg");
  CHECK(parse_graph6(">>graph6<<Bw\n") == complete(3));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);        // truncated body
  CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);      // extra body
  CHECK_THROWS_AS(parse_graph6("B\x01"), Graph6Error);    // byte out of range
  CHECK_THROWS_AS(parse_graph6(""), Graph6Error);
  // P3 is "Bg" = bits 010000; byte with a padding bit set must be rejected
  std::string bad = "B";
  bad.push_back(63 + 0b010001);
  CHECK_THROWS_AS(parse_graph6(bad), Graph6Error);
  try {
    parse_graph6("B\x01");
  } catch (const Graph6Error& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("graph6 round-trip exhaustive n<=7") {
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t total = 1ull << (n * (n - 1) / 2);
    std::uint64_t bad = 0;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Graph g = Graph::from_bitmask(n, mask);
      if (!(parse_graph6(to_graph6(g)) == g)) ++bad;
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("graph6 long size form") {
  Graph g = star(70);
  std::string s = to_graph6(g);
  CHECK(s[0] == 126);
  CHECK(parse_graph6(s) == g);
}
