#include <doctest.h>

#include <algorithm>

#include "iecp/generators.hpp"
#include "iecp/stable_sets.hpp"
#include "support/catalog.hpp"

using namespace iecp;

namespace {

Graph pendant_triangle() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

bool stable_oracle(const Graph& g, VertexSet s) {
  for (const Edge& e : g.edges())
    if (s.contains(e.u) && s.contains(e.v)) return false;
  return true;
}

VertexSet hood_oracle(const Graph& g, VertexSet s) {
  VertexSet out;
  for (const Edge& e : g.edges()) {
    if (s.contains(e.u) != s.contains(e.v)) out = out | VertexSet::single(e.u) | VertexSet::single(e.v);
  }
  return out - s;
}

// Every nonempty stable set by subset scan, sorted lexicographically, with
// S1 meaning that every edge has an endpoint in S.
std::vector<StableSetRecord> enumeration_oracle(const Graph& g) {
  std::vector<StableSetRecord> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
    VertexSet s(bits);
    if (!stable_oracle(g, s)) continue;
    bool covers = std::all_of(g.edges().begin(), g.edges().end(),
                              [&](const Edge& e) { return s.contains(e.u) || s.contains(e.v); });
    out.push_back({s, hood_oracle(g, s), covers ? Family::S1 : Family::S2});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return VertexSet::lex_less(a.set, b.set); });
  return out;
}

// Redundancy a) by trying every split of S into two nonempty parts.
bool split_oracle(const Graph& g, VertexSet s) {
  const std::uint64_t bits = s.bits();
  for (std::uint64_t sub = (bits - 1) & bits; sub; sub = (sub - 1) & bits) {
    VertexSet a(sub), b = s - VertexSet(sub);
    if (!hood_oracle(g, a).intersects(hood_oracle(g, b))) return true;
  }
  return false;
}

// Redundancy b) by trying every stable strict superset.
bool superset_oracle(const Graph& g, VertexSet s) {
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << g.order()); ++bits) {
    VertexSet t(bits);
    if (t == s || !s.subset_of(t) || !stable_oracle(g, t)) continue;
    if (hood_oracle(g, t) == hood_oracle(g, s)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("stable sets of the triangle with a pendant vertex") {
  auto records = enumerate_stable_sets(pendant_triangle());
  std::vector<std::string> text;
  for (const auto& r : records) text.push_back(r.to_string());
  CHECK(text == std::vector<std::string>{"{1} N={2,3} S2", "{1,4} N={2,3} S2", "{2} N={1,3} S2",
                                         "{2,4} N={1,3} S2", "{3} N={1,2,4} S2", "{4} N={3} S2"});
}

TEST_CASE("classification of bipartite sides") {
  Graph p3 = path_graph(3);
  CHECK(classify(p3, VertexSet::from_labels({2})) == Family::S1);
  CHECK(classify(p3, VertexSet::from_labels({1, 3})) == Family::S1);
  CHECK(classify(p3, VertexSet::from_labels({1})) == Family::S2);
  CHECK_THROWS_AS(classify(p3, VertexSet{}), PreconditionError);
  CHECK_THROWS_AS(classify(p3, VertexSet::from_labels({1, 2})), PreconditionError);
  CHECK(std::string(to_string(Family::S1)) == "S1");
}

TEST_CASE("enumeration agrees with the subset-scan oracle") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::connected_labeled_graphs(n)) {
      auto records = enumerate_stable_sets(g);
      REQUIRE(records == enumeration_oracle(g));
      for (const auto& r : records) REQUIRE(make_record(g, r.set) == r);
    }
  for (const Graph& g : testing::nonisomorphic_connected_graphs(7))
    REQUIRE(enumerate_stable_sets(g) == enumeration_oracle(g));
}

TEST_CASE("enumeration bound") {
  CHECK_THROWS_AS(enumerate_stable_sets(path_graph(6), 5), ResourceLimit);
  CHECK_NOTHROW(enumerate_stable_sets(path_graph(6), 6));
}

TEST_CASE("reduced family of the triangle with a pendant vertex") {
  Graph g = pendant_triangle();
  auto records = enumerate_stable_sets(g);
  ReducedFamily f = reduce_family(g, records);
  std::vector<VertexSet> sets;
  for (const auto& r : f.sets) sets.push_back(r.set);
  CHECK(sets == std::vector<VertexSet>{VertexSet::from_labels({1, 4}), VertexSet::from_labels({2, 4}),
                                       VertexSet::from_labels({3}), VertexSet::from_labels({4})});
  // {1} and {2} are dropped because adding 4 keeps the neighbourhood.
  CHECK(has_equal_neighborhood_extension(g, VertexSet::from_labels({1})));
  CHECK_FALSE(splits_into_disjoint_neighborhoods(g, VertexSet::from_labels({1, 4})));
}

TEST_CASE("redundancy tests agree with brute-force definitions") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : testing::nonisomorphic_connected_graphs(n)) {
      auto records = enumerate_stable_sets(g);
      std::vector<StableSetRecord> expected;
      for (const auto& r : records) {
        const bool a = split_oracle(g, r.set);
        const bool b = superset_oracle(g, r.set);
        REQUIRE(splits_into_disjoint_neighborhoods(g, r.set) == a);
        REQUIRE(has_equal_neighborhood_extension(g, r.set) == b);
        if (r.family == Family::S2 && !a && !b) expected.push_back(r);
      }
      REQUIRE(reduce_family(g, records).sets == expected);
    }
}
