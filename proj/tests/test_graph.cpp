#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "iecp/generators.hpp"
#include "iecp/graph.hpp"
#include "support/catalog.hpp"

using namespace iecp;

namespace {

Graph pendant_triangle() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

// N(S) straight from the edge list.
VertexSet neighborhood_oracle(const Graph& g, VertexSet s) {
  VertexSet out;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) && !s.contains(e.v)) out = out.with(e.v);
    if (s.contains(e.v) && !s.contains(e.u)) out = out.with(e.u);
  }
  return out;
}

// Odd cycle inside s iff some closed walk of odd length <= |s| exists there
// (a shortest odd closed walk is an odd cycle). Boolean matrix powers.
bool has_odd_cycle_oracle(const Graph& g, VertexSet s) {
  const int n = g.order();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) adj[e.u][e.v] = adj[e.v][e.u] = true;
  auto walk = adj;
  for (int len = 1; len <= s.size(); ++len) {
    if (len % 2 == 1)
      for (int v : s.members())
        if (walk[v][v]) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (walk[i][k])
          for (int j = 0; j < n; ++j)
            if (adj[k][j]) next[i][j] = true;
    walk = std::move(next);
  }
  return false;
}

// Union-find components of the subgraph induced by s.
std::vector<VertexSet> components_oracle(const Graph& g, VertexSet s) {
  std::vector<int> parent(g.order());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) parent[find(e.u)] = find(e.v);
  std::vector<VertexSet> out;
  for (int v : s.members()) {
    VertexSet comp;
    for (int w : s.members())
      if (find(w) == find(v)) comp = comp.with(w);
    if (comp.first() == v) out.push_back(comp);
  }
  return out;
}

}  // namespace

TEST_CASE("VertexSet basics") {
  VertexSet s = VertexSet::from_labels({1, 4});
  CHECK(s.bits() == 0b1001);
  CHECK(s.to_string() == "{1,4}");
  CHECK(VertexSet{}.to_string() == "{}");
  CHECK(s.labels() == std::vector<int>{1, 4});
  CHECK(s.members() == std::vector<int>{0, 3});
  CHECK(s.size() == 2);
  CHECK(s.first() == 0);
  CHECK((s - VertexSet::single(0)) == VertexSet::single(3));
  CHECK(VertexSet::range(64).size() == 64);
  CHECK(VertexSet::lex_less(VertexSet::from_labels({1, 4}), VertexSet::from_labels({2})));
  CHECK(VertexSet::lex_less(VertexSet::from_labels({1}), VertexSet::from_labels({1, 2})));
  CHECK_FALSE(VertexSet::lex_less(VertexSet::from_labels({3}), VertexSet::from_labels({2, 4})));
  CHECK_THROWS_AS(VertexSet::from_labels({0}), ValidationError);
}

TEST_CASE("graph construction validates its input") {
  CHECK_NOTHROW(Graph(2, {{0, 1}}));
  CHECK_THROWS_AS(Graph(1, {}), ValidationError);
  CHECK_THROWS_AS(Graph(65, {}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 3}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 1}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}, {1, 2}}), ValidationError);
  CHECK_THROWS_AS(Graph(4, {{0, 1}, {2, 3}}), ValidationError);
}

TEST_CASE("adjacency queries on the triangle with a pendant vertex") {
  Graph g = pendant_triangle();
  CHECK(g.order() == 4);
  CHECK(g.size() == 4);
  CHECK(std::vector<int>(g.neighbors(2).begin(), g.neighbors(2).end()) == std::vector<int>{0, 1, 3});
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(0, 3));
  CHECK(g.edge_index(2, 3) == 3);
  CHECK(g.edge_index(0, 3) == -1);
  CHECK(external_neighborhood(g, VertexSet::from_labels({1, 4})) == VertexSet::from_labels({2, 3}));
  CHECK(is_stable(g, VertexSet::from_labels({1, 4})));
  CHECK_FALSE(is_stable(g, VertexSet::from_labels({1, 2})));
}

TEST_CASE("neighbourhood, stability and components agree with direct oracles") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::connected_labeled_graphs(n))
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        REQUIRE(external_neighborhood(g, s) == neighborhood_oracle(g, s));
        bool stable = std::none_of(g.edges().begin(), g.edges().end(),
                                   [&](const Edge& e) { return s.contains(e.u) && s.contains(e.v); });
        REQUIRE(is_stable(g, s) == stable);
        auto comps = components_oracle(g, s);
        REQUIRE(induced_components(g, s) == comps);
        REQUIRE(is_connected_subset(g, s) == (comps.size() <= 1));
      }
}

TEST_CASE("two-colouring agrees with the odd closed walk oracle") {
  for (int n = 2; n <= 6; ++n)
    for (const Graph& g : testing::nonisomorphic_connected_graphs(n))
      for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s(bits);
        std::pair<VertexSet, VertexSet> sides;
        const bool odd = has_odd_cycle_oracle(g, s);
        REQUIRE(two_colour(g, s, &sides) == !odd);
        if (!odd) {
          REQUIRE((sides.first | sides.second) == s);
          REQUIRE(is_stable(g, sides.first));
          REQUIRE(is_stable(g, sides.second));
        }
        if (is_connected_subset(g, s))
          REQUIRE(is_connected_subgraph_nonbipartite(g, s) == odd);
        else
          REQUIRE_THROWS_AS(is_connected_subgraph_nonbipartite(g, s), PreconditionError);
      }
}

TEST_CASE("odd cycles are detected") {
  CHECK(is_connected_subgraph_nonbipartite(cycle_graph(5), VertexSet::range(5)));
  CHECK_FALSE(is_connected_subgraph_nonbipartite(cycle_graph(6), VertexSet::range(6)));
  CHECK(is_connected_subgraph_nonbipartite(complete_graph(3), VertexSet::range(3)));
}

TEST_CASE("centrality target") {
  CentralityTarget c({Rational(2), Rational(1, 2), Rational(3)});
  CHECK(c.square(1) == Rational(1, 4));
  CHECK(c.sum_squares(VertexSet::from_labels({1, 3})) == 13);
  CHECK(c.sum_squares(VertexSet{}) == 0);
  CentralityTarget s = c.scaled(Rational(2, 3));
  CHECK(s[0] == Rational(4, 3));
  CHECK(s.square(2) == 4);
  CHECK_THROWS_AS(CentralityTarget({}), ValidationError);
  CHECK_THROWS_AS(CentralityTarget({Rational(1), Rational(0)}), ValidationError);
  CHECK_THROWS_AS(CentralityTarget({Rational(-1, 2)}), ValidationError);
  CHECK_THROWS_AS(require_matching(pendant_triangle(), c), ValidationError);
}

TEST_CASE("graph documents") {
  Graph g = parse_graph("# comment\n4 4\n\n1 2\n3 1\n2 3\n3 4\n");
  CHECK(g.has_edge(0, 2));
  CHECK(format_graph(g) == "4 4\n1 2\n1 3\n2 3\n3 4\n");
  CHECK(format_graph(parse_graph(format_graph(g))) == format_graph(g));
  CHECK_THROWS_AS(parse_graph(""), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n2 3\n1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n2 x\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 1 7\n1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n2 4\n"), ValidationError);
  CHECK_THROWS_AS(parse_graph("3 2\n1 2\n2 2\n"), ValidationError);
  CHECK_THROWS_AS(parse_graph("4 2\n1 2\n3 4\n"), ValidationError);
}

TEST_CASE("centrality documents") {
  CentralityTarget c = parse_centrality("# c\n2\n0.5\n\n3/4\n");
  REQUIRE(c.size() == 3);
  CHECK(c[1] == Rational(1, 2));
  CHECK(format_centrality(c) == "2\n1/2\n3/4\n");
  CHECK_THROWS_AS(parse_centrality("1\n2 3\n"), ParseError);
  CHECK_THROWS_AS(parse_centrality("1\nfoo\n"), ParseError);
  CHECK_THROWS_AS(parse_centrality("1\n0\n"), ValidationError);
  CHECK_THROWS_AS(parse_centrality("# nothing\n"), ValidationError);
  CHECK_THROWS_AS(read_text_file("/nonexistent/file"), std::runtime_error);
}

TEST_CASE("catalogs have the known sizes") {
  // Connected labelled graphs: 1, 4, 38, 728, 26704; unlabelled: 1, 2, 6, 21, 112, 853.
  CHECK(testing::connected_labeled_graphs(3).size() == 4);
  CHECK(testing::connected_labeled_graphs(4).size() == 38);
  CHECK(testing::connected_labeled_graphs(5).size() == 728);
  CHECK(testing::nonisomorphic_connected_graphs(3).size() == 2);
  CHECK(testing::nonisomorphic_connected_graphs(4).size() == 6);
  CHECK(testing::nonisomorphic_connected_graphs(5).size() == 21);
  CHECK(testing::nonisomorphic_connected_graphs(6).size() == 112);
}
