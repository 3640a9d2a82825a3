#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "iecp/graph.hpp"

namespace iecp {

using Rng = std::mt19937_64;

Graph complete_graph(int n);
/// Parts {1..p} and {p+1..p+r}.
Graph complete_bipartite_graph(int p, int r);
/// Centre 1, leaves 2..n.
Graph star_graph(int n);
/// Path 1-2-...-n.
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Random spanning tree plus each remaining pair with probability `density`.
Graph random_connected_graph(int n, Rng& rng, double density = 0.3);

/// Positive rational p/q with p in [1, max_num], q in [1, max_den].
Rational random_positive_rational(Rng& rng, int max_num, int max_den);

/// Rational point with strictly positive coordinates on the unit sphere in
/// `dim` dimensions (inverse stereographic projection of a random rational point).
std::vector<Rational> rational_unit_vector(int dim, Rng& rng);

/// Hand-built targets meeting each closed-form condition:
/// complete: all ones; star: leaves 1 with one adjusted leaf and a centre whose
/// square is the leaf sum; bipartite: equal part sums; chain: (1,2,...,2,1) for
/// even n and (3,5,...,5,4) for odd n.
CentralityTarget canonical_complete_target(int n);
CentralityTarget canonical_star_target(int n);
CentralityTarget canonical_bipartite_target(int p, int r);
CentralityTarget canonical_chain_target(int n);

struct Fixture {
  Graph graph;
  CentralityTarget target;
  /// Structure kind, or "unclassified" for random-connected.
  std::string label;
};

/// kind in {complete, bipartite, star, chain, random-connected}. Seed 0 gives
/// the canonical target for structured kinds; other seeds draw a random target
/// that satisfies the kind's closed-form condition. Throws std::invalid_argument
/// for an unknown kind or n < 2 (n < 3 for complete).
Fixture generate_fixture(std::string_view kind, int n, std::uint64_t seed);

}  // namespace iecp
