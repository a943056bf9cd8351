#include <gtest/gtest.h>

#include <random>

#include "bergepath/arith.hpp"
#include "bergepath/graph.hpp"
#include "bergepath/hypergraph.hpp"
#include "bergepath/io.hpp"
#include "support/brute.hpp"
#include "support/enumerate.hpp"

using namespace bergepath;

namespace {

std::vector<Hyperedge> edges_of(const std::vector<Hyperedge>& es) { return es; }

Graph disjoint_k4_k3() {
  std::vector<VertexId> a{0, 1, 2, 3}, b{4, 5, 6};
  auto g = complete_graph_on(7, a);
  return complete_graph_on(7, b, g.edges());
}

}  // namespace

TEST(Binom, SmallValues) {
  EXPECT_EQ(binom(4, 3), 4u);
  EXPECT_EQ(binom(2, 3), 0u);
  EXPECT_EQ(binom(6 - 1, 3 - 1), 10u);
  EXPECT_EQ(binom(0, 0), 1u);
  EXPECT_EQ(binom(64, 32), 1832624140942590534ull);
}

TEST(Binom, PascalRule) {
  for (Count n = 1; n <= 64; ++n)
    for (Count k = 1; k <= n; ++k) EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k)) << n << " " << k;
}

TEST(Binom, OverflowIsAnError) {
  try {
    binom(200, 100);
    FAIL() << "expected overflow";
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::arithmetic_overflow);
  }
  EXPECT_THROW(checked_mul(Count{1} << 40, Count{1} << 40), error);
  EXPECT_THROW(checked_add(~Count{0}, 1), error);
  EXPECT_EQ(binom_s(-1, 2), 0u);
  EXPECT_EQ(binom_s(3, -1), 0u);
}

TEST(Hypergraph, RejectsMalformedInput) {
  auto code_of = [](auto&& f) {
    try {
      f();
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_input;  // sentinel never compared for success
  };
  EXPECT_EQ(code_of([] { Hypergraph(5, 1); }), errc::invalid_parameter);
  EXPECT_EQ(code_of([] { Hypergraph(5, 3, {{0, 1}}); }), errc::invalid_input);
  EXPECT_EQ(code_of([] { Hypergraph(3, 3, {{0, 1, 3}}); }), errc::invalid_vertex);
  EXPECT_EQ(code_of([] { Hypergraph(4, 3, {{0, 1, 2}, {2, 1, 0}}); }), errc::invalid_input);
  EXPECT_THROW(Hyperedge({1, 1, 2}), error);
}

TEST(Hypergraph, EdgesAreSortedAndQueryable) {
  Hypergraph h(6, 3, {{3, 4, 5}, {2, 1, 0}});
  ASSERT_EQ(h.edge_count(), 2u);
  EXPECT_EQ(h.edge(0), Hyperedge({0, 1, 2}));
  EXPECT_EQ(h.degree(2), 1u);
  EXPECT_TRUE(h.contains(Hyperedge({5, 3, 4})));
  EXPECT_FALSE(h.contains(Hyperedge({0, 1, 3})));
  EXPECT_EQ(h.masks()[1], bit(3) | bit(4) | bit(5));
  EXPECT_THROW(h.check_vertex(6), error);
}

TEST(IncidentEdges, Examples) {
  Hypergraph h(6, 3, {{0, 1, 2}, {3, 4, 5}});
  EXPECT_EQ(incident_edges(h, {0}), edges_of({{0, 1, 2}}));
  EXPECT_EQ(incident_edges(h, {2, 3}).size(), 2u);
  Hypergraph star(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
  EXPECT_EQ(incident_edges(star, {0}).size(), 3u);
  try {
    incident_edges(h, {6});
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::invalid_vertex);
  }
}

TEST(DeleteVertices, Examples) {
  Hypergraph h(6, 3, {{0, 1, 2}, {3, 4, 5}});
  auto d = delete_vertices(h, {0});
  EXPECT_EQ(d.n(), 5);
  EXPECT_EQ(d.edges(), edges_of({{2, 3, 4}}));
  EXPECT_EQ(delete_vertices(h, {}), h);
  auto k4 = delete_vertices(complete_hypergraph(4, 3), {3});
  EXPECT_EQ(k4.n(), 3);
  EXPECT_EQ(k4.edges(), edges_of({{0, 1, 2}}));
  EXPECT_THROW(delete_vertices(h, {9}), error);
}

TEST(DeleteVertices, RemovesExactlyTheIncidentEdges) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto h = gen::random_hypergraph(rng, 7, 3, 0.4);
    std::vector<VertexId> u;
    for (VertexId v = 0; v < 7; ++v)
      if (rng() % 3 == 0) u.push_back(v);
    auto d = delete_vertices(h, u);
    EXPECT_EQ(d.n(), 7 - static_cast<int>(u.size()));
    EXPECT_EQ(d.edge_count(), h.edge_count() - incident_edges(h, u).size());
  }
}

TEST(Components, Examples) {
  EXPECT_EQ(components(Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}})).size(), 1u);
  EXPECT_EQ(components(Hypergraph(6, 3, {{0, 1, 2}, {3, 4, 5}})).size(), 2u);
  auto singles = components(Hypergraph(3, 3));
  ASSERT_EQ(singles.size(), 3u);
  EXPECT_EQ(singles[2], std::vector<VertexId>{2});
}

TEST(CountCliques, Examples) {
  std::vector<VertexId> four{0, 1, 2, 3};
  EXPECT_EQ(count_cliques(complete_graph_on(4, four), 3), 4u);
  Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  EXPECT_EQ(count_cliques(c5, 3), 0u);
  EXPECT_EQ(count_cliques(disjoint_k4_k3(), 3), 5u);
  EXPECT_THROW(count_cliques(c5, 1), error);
}

TEST(CountCliques, AgreesWithBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    std::vector<GraphEdge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 2) es.emplace_back(u, v);
    Graph g(n, es);
    EXPECT_EQ(count_cliques(g, 2), g.edge_count());
    for (int r = 3; r <= 5; ++r) EXPECT_EQ(count_cliques(g, r), brute::count_cliques(g, r));
  }
}

TEST(LongestPath, Examples) {
  std::vector<VertexId> four{0, 1, 2, 3};
  EXPECT_EQ(longest_path(complete_graph_on(4, four)), 3);
  EXPECT_EQ(longest_path(Graph(5)), 0);
  EXPECT_EQ(longest_path(disjoint_k4_k3()), 3);
  EXPECT_TRUE(is_pk_free(disjoint_k4_k3(), 4));
  EXPECT_FALSE(is_pk_free(disjoint_k4_k3(), 3));
}

TEST(LongestPath, AgreesWithBruteForce) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    std::vector<GraphEdge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) es.emplace_back(u, v);
    Graph g(n, es);
    EXPECT_EQ(longest_path(g), brute::longest_graph_path(g));
  }
}

TEST(RedBlueGraph, RejectsDoubleColoredPair) {
  EXPECT_THROW(RedBlueGraph(3, {{0, 1}}, {{1, 0}}), error);
  RedBlueGraph g(4, {{0, 1}}, {{2, 3}, {1, 2}});
  EXPECT_EQ(g.underlying().edge_count(), 3u);
}

TEST(TextFormat, HypergraphRoundTrip) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int r = 2 + static_cast<int>(rng() % 3);
    auto h = gen::random_hypergraph(rng, 7, r, 0.3);
    EXPECT_EQ(parse_hypergraph(to_text(h)), h);
  }
}

TEST(TextFormat, HypergraphParsing) {
  auto h = parse_hypergraph("berge-hgraph v1\n# comment\nr=3 n=5\n\n0 1 2\n  2 3 4\n");
  EXPECT_EQ(h.edge_count(), 2u);
  auto code = [](std::string_view text) {
    try {
      parse_hypergraph(text);
    } catch (const error& e) {
      return e.code();
    }
    return errc::invalid_parameter;
  };
  EXPECT_EQ(code("berge-hgraph v2\nr=3 n=5\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\nr=3 n=5\n0 1 2\n0 1 2\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\nr=3 n=5\n0 2 1\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\nr=3 n=5\n0 1 5\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\nr=3 n=5\n0 1\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\r\nr=3 n=5\n"), errc::parse_error);
  EXPECT_EQ(code("berge-hgraph v1\nr=3 n=5\n0 1 x\n"), errc::parse_error);
}

TEST(TextFormat, GraphRoundTrip) {
  Graph g(5, {{0, 1}, {3, 4}, {1, 2}});
  EXPECT_EQ(std::get<Graph>(parse_graph(to_text(g))), g);
  RedBlueGraph rb(5, {{0, 1}}, {{1, 2}, {3, 4}});
  auto back = std::get<RedBlueGraph>(parse_graph(to_text(rb)));
  EXPECT_EQ(back.red(), rb.red());
  EXPECT_EQ(back.blue(), rb.blue());
  EXPECT_THROW(parse_graph("berge-graph v1\nn=3\n0 1 red\n1 2\n"), error);
  EXPECT_THROW(parse_graph("berge-graph v1\nn=3\n0 1 green\n"), error);
  EXPECT_THROW(parse_graph("berge-graph v1\nn=3\n1 1\n"), error);
}
