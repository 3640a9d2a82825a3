#include <doctest.h>

#include "iecp/feasibility.hpp"
#include "iecp/generators.hpp"
#include "iecp/special_graphs.hpp"

using namespace iecp;

namespace {

std::vector<Rational> values(const CentralityTarget& c) { return {c.values().begin(), c.values().end()}; }

}  // namespace

TEST_CASE("canonical fixtures") {
  Fixture star = generate_fixture("star", 5, 0);
  CHECK(star.graph.size() == 4);
  CHECK(values(star.target) == std::vector<Rational>{2, 1, 1, 1, 1});
  Fixture chain = generate_fixture("chain", 3, 0);
  CHECK(values(chain.target) == std::vector<Rational>{3, 5, 4});
  Fixture k3 = generate_fixture("complete", 3, 0);
  CHECK(values(k3.target) == std::vector<Rational>{1, 1, 1});
  CHECK(values(generate_fixture("chain", 6, 0).target) == std::vector<Rational>{1, 2, 2, 2, 2, 1});
  CHECK(generate_fixture("random-connected", 6, 1).label == "unclassified");
}

TEST_CASE("invalid requests") {
  CHECK_THROWS_AS(generate_fixture("wheel", 5, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture("star", 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_fixture("complete", 2, 0), std::invalid_argument);
}

TEST_CASE("every structured fixture is feasible") {
  for (const char* kind : {"complete", "star", "bipartite", "chain"})
    for (int n = 2; n <= 10; ++n) {
      if (std::string(kind) == "complete" && n < 3) continue;
      for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Fixture fx = generate_fixture(kind, n, seed);
        CAPTURE(kind);
        CAPTURE(n);
        CAPTURE(seed);
        REQUIRE(check_feasibility(fx.graph, fx.target).feasible);
        REQUIRE(closed_form_check(fx.graph, fx.target)->feasible);
      }
    }
}

TEST_CASE("fixtures are reproducible") {
  for (const char* kind : {"complete", "star", "bipartite", "chain", "random-connected"}) {
    Fixture a = generate_fixture(kind, 7, 42);
    Fixture b = generate_fixture(kind, 7, 42);
    CHECK(format_graph(a.graph) == format_graph(b.graph));
    CHECK(format_centrality(a.target) == format_centrality(b.target));
  }
}

TEST_CASE("rational points on the unit sphere") {
  Rng rng(9);
  for (int dim = 1; dim <= 6; ++dim)
    for (int trial = 0; trial < 20; ++trial) {
      auto p = rational_unit_vector(dim, rng);
      Rational norm = 0;
      for (const auto& x : p) {
        REQUIRE(x > 0);
        norm += x * x;
      }
      REQUIRE(norm == 1);
    }
}

TEST_CASE("builders") {
  CHECK(complete_graph(5).size() == 10);
  CHECK(complete_bipartite_graph(2, 3).size() == 6);
  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(4).size() == 3);
  Rng rng(1);
  for (int n = 2; n <= 20; ++n) CHECK(random_connected_graph(n, rng).order() == n);
}
