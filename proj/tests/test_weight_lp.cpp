#include <doctest.h>

#include "iecp/feasibility.hpp"
#include "iecp/generators.hpp"
#include "iecp/weight_lp.hpp"
#include "support/catalog.hpp"

using namespace iecp;

namespace {

Graph pendant_triangle() { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }

CentralityTarget target(std::vector<Rational> v) { return CentralityTarget(std::move(v)); }

// sum_{i in N(j)} w_ij c_i = c_j for every j, by direct substitution.
bool reproduces(const Graph& g, const WeightAssignment& w, const CentralityTarget& c) {
  for (int j = 0; j < g.order(); ++j) {
    Rational s = 0;
    for (int i : g.neighbors(j)) s += w.at(i, j) * c[i];
    if (s != c[j]) return false;
  }
  return w.weights.size() == static_cast<std::size_t>(g.size());
}

}  // namespace

TEST_CASE("target (2,2,2,1) has the unique weights 5/8, 3/8, 3/8, 1/2") {
  LpResult r = solve_max_min_weight(pendant_triangle(), target({2, 2, 2, 1}));
  REQUIRE(r.status == WeightLpStatus::StrictlyFeasible);
  REQUIRE(r.assignment);
  const auto& w = *r.assignment;
  CHECK(w.at(0, 1) == Rational(5, 8));
  CHECK(w.at(0, 2) == Rational(3, 8));
  CHECK(w.at(1, 2) == Rational(3, 8));
  CHECK(w.at(2, 3) == Rational(1, 2));
  CHECK(r.epsilon_star == Rational(3, 8));
  CHECK(w.min_weight() == Rational(3, 8));
  CHECK(w.all_positive());
  CHECK_FALSE(r.boundary);
}

TEST_CASE("uniform target admits only a boundary solution") {
  LpResult r = solve_max_min_weight(pendant_triangle(), target({1, 1, 1, 1}));
  REQUIRE(r.status == WeightLpStatus::BoundaryOnly);
  CHECK(r.epsilon_star == 0);
  CHECK_FALSE(r.assignment);
  REQUIRE(r.boundary);
  CHECK(r.boundary->at(0, 1) == 1);
  CHECK(r.boundary->at(2, 3) == 1);
  CHECK(r.boundary->at(0, 2) == 0);
  CHECK(r.boundary->at(1, 2) == 0);
  CHECK_FALSE(r.boundary->all_positive());
  CHECK(std::string(to_string(r.status)) == "BoundaryOnly");
}

TEST_CASE("star weights are leaf over centre") {
  // c = (3/2, 1, 1, 1/2): 9/4 = 1 + 1 + 1/4.
  LpResult r = solve_max_min_weight(star_graph(4), canonical_star_target(4));
  REQUIRE(r.status == WeightLpStatus::StrictlyFeasible);
  CHECK(r.assignment->at(0, 1) == Rational(2, 3));
  CHECK(r.assignment->at(0, 2) == Rational(2, 3));
  CHECK(r.assignment->at(0, 3) == Rational(1, 3));
  CHECK(r.epsilon_star == Rational(1, 3));
}

TEST_CASE("unequal single edge has no nonnegative solution") {
  Graph k2(2, {{0, 1}});
  LpResult r = solve_max_min_weight(k2, target({1, 2}));
  CHECK(r.status == WeightLpStatus::Infeasible);
  CHECK_FALSE(r.assignment);
  CHECK_FALSE(r.boundary);
  auto x = farkas_certificate(k2, target({1, 2}), 0);
  REQUIRE(x);
  CHECK(is_farkas_certificate(weight_system(k2, target({1, 2}), 0), *x));
}

TEST_CASE("weight system layout") {
  WeightSystem s = weight_system(pendant_triangle(), target({2, 2, 2, 1}), Rational(1, 4));
  CHECK(s.rows == 4);
  CHECK(s.cols == 4);
  // Column 3 is edge 3-4: c3 c4 = 2 in rows 3 and 4.
  CHECK(s.at(2, 3) == 2);
  CHECK(s.at(3, 3) == 2);
  CHECK(s.at(0, 3) == 0);
  // q_3 = 4 - 1/4 (2*2 + 2*2 + 2*1) = 3/2.
  CHECK(s.rhs[2] == Rational(3, 2));
  CHECK(s.rhs[3] == Rational(1, 2));
  CHECK_THROWS_AS(farkas_certificate(pendant_triangle(), target({2, 2, 2, 1}), -1), PreconditionError);
}

TEST_CASE("solutions, optimality and certificates over small graphs") {
  int strict = 0, boundary = 0, infeasible = 0;
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::connected_labeled_graphs(n))
      for (const auto& c : testing::targets_for(g, 3, 7 * n + g.size())) {
        LpResult r = solve_max_min_weight(g, c);
        switch (r.status) {
          case WeightLpStatus::StrictlyFeasible:
            ++strict;
            REQUIRE(reproduces(g, *r.assignment, c));
            REQUIRE(r.assignment->min_weight() == r.epsilon_star);
            REQUIRE(r.epsilon_star > 0);
            break;
          case WeightLpStatus::BoundaryOnly:
            ++boundary;
            REQUIRE(reproduces(g, *r.boundary, c));
            REQUIRE(r.boundary->min_weight() == 0);
            break;
          case WeightLpStatus::Infeasible: {
            ++infeasible;
            auto x = farkas_certificate(g, c, 0);
            REQUIRE(x);
            REQUIRE(is_farkas_certificate(weight_system(g, c, 0), *x));
            continue;
          }
        }
        // eps* is attainable and nothing above it is.
        REQUIRE_FALSE(farkas_certificate(g, c, r.epsilon_star));
        REQUIRE_FALSE(farkas_certificate(g, c, r.epsilon_star / 2));
        Rational above = r.epsilon_star + Rational(1, 64);
        auto x = farkas_certificate(g, c, above);
        REQUIRE(x);
        REQUIRE(is_farkas_certificate(weight_system(g, c, above), *x));
      }
  CHECK(strict > 100);
  CHECK(boundary > 10);
  CHECK(infeasible > 100);
}

TEST_CASE("strict feasibility matches the stable-set verdict on small graphs") {
  for (int n = 2; n <= 5; ++n)
    for (const Graph& g : testing::nonisomorphic_connected_graphs(n))
      for (const auto& c : testing::targets_for(g, 20, 99)) {
        const bool strict = solve_max_min_weight(g, c).status == WeightLpStatus::StrictlyFeasible;
        REQUIRE(strict == check_feasibility(g, c).feasible);
      }
}

TEST_CASE("weights documents") {
  Graph g = pendant_triangle();
  WeightAssignment w = parse_weights("# w\n1 2 5/8\n1 3 0.375\n3 2 3/8\n3 4 1/2\n", g);
  CHECK(w.at(1, 2) == Rational(3, 8));
  CHECK(format_weights(w) == "1 2 5/8\n1 3 3/8\n2 3 3/8\n3 4 1/2\n");
  CHECK_THROWS_AS(parse_weights("1 4 1\n", g), ValidationError);
  CHECK_THROWS_AS(parse_weights("1 2 1\n2 1 1\n", g), ValidationError);
  CHECK_THROWS_AS(parse_weights("1 2\n", g), ParseError);
  CHECK_THROWS_AS(parse_weights("1 2 x\n", g), ParseError);
  CHECK_THROWS_AS(parse_weights("a 2 1\n", g), ParseError);
}
