#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "iecp/graph.hpp"

namespace iecp {

enum class Structure { Complete, CompleteBipartite, Star, Chain, General };

const char* to_string(Structure s);

/// Detected structure. `parts` is filled for CompleteBipartite and Star
/// (first part contains vertex 1 for CompleteBipartite, the centre for Star),
/// `center` for Star, `order` for Chain (walk from the smaller endpoint).
struct StructureTag {
  Structure kind = Structure::General;
  std::pair<VertexSet, VertexSet> parts;
  int center = -1;
  std::vector<int> order;
};

/// Most specific tag, precedence Complete > Star > CompleteBipartite > Chain.
/// Complete requires n >= 3; K2 is a Star.
StructureTag detect_structure(const Graph& g);

/// Complete graph on n >= 3 vertices: 2 max c_j^2 < sum c_j^2.
bool check_complete(const CentralityTarget& c);
/// Complete bipartite: equal sums of squares on both parts.
bool check_complete_bipartite(const CentralityTarget& c, VertexSet v1, VertexSet v2);
/// Star: c_center^2 equals the sum of the leaves' squares.
bool check_star(const CentralityTarget& c, int center);
/// Path visited in `order`: the alternating prefix sums
/// c1^2 < c2^2 < c1^2+c3^2 < c2^2+c4^2 < ... increase strictly and the last
/// two (odd-position and even-position totals) are equal.
bool check_chain(const CentralityTarget& c, std::span<const int> order);

/// Closed-form verdict for a special structure, with the relation that decided it.
struct ClosedFormVerdict {
  StructureTag tag;
  bool feasible = false;
  /// "complete", "complete bipartite", "star" or "chain".
  std::string clause;
  /// The first failing relation, or the deciding one when feasible.
  std::string relation;
  Rational lhs;
  Rational rhs;
};

/// Nothing for General graphs.
std::optional<ClosedFormVerdict> closed_form_check(const Graph& g, const CentralityTarget& c);

}  // namespace iecp
