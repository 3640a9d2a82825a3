#include "iecp/special_graphs.hpp"

#include <algorithm>

namespace iecp {

const char* to_string(Structure s) {
  switch (s) {
    case Structure::Complete: return "complete";
    case Structure::CompleteBipartite: return "complete-bipartite";
    case Structure::Star: return "star";
    case Structure::Chain: return "chain";
    case Structure::General: return "general";
  }
  return "?";
}

namespace {

std::vector<int> path_order(const Graph& g) {
  const int n = g.order();
  if (g.size() != n - 1) return {};
  int ones = 0, start = -1;
  for (int v = 0; v < n; ++v) {
    auto deg = g.neighbors(v).size();
    if (deg > 2) return {};
    if (deg == 1) {
      ++ones;
      if (start < 0) start = v;
    }
  }
  if (ones != 2) return {};
  std::vector<int> order{start};
  int prev = -1, cur = start;
  while (static_cast<int>(order.size()) < n) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    if (next < 0) return {};
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

struct ChainOutcome {
  bool holds = true;
  std::string relation;
  Rational lhs, rhs;
};

// a_1 = s_1, a_2 = s_2, a_k = a_{k-2} + s_k; need a_1 < ... < a_{n-1} = a_n.
ChainOutcome evaluate_chain(const CentralityTarget& c, std::span<const int> order) {
  const std::size_t n = order.size();
  std::vector<Rational> a(n);
  for (std::size_t k = 0; k < n; ++k) {
    a[k] = c.square(order[k]);
    if (k >= 2) a[k] += a[k - 2];
  }
  auto name = [&](std::size_t k) {
    std::string out;
    for (std::size_t i = k % 2; i <= k; i += 2) {
      if (!out.empty()) out += "+";
      out += "c" + std::to_string(order[i] + 1) + "^2";
    }
    return out;
  };
  ChainOutcome outcome;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    if (a[k] < a[k + 1]) continue;
    return ChainOutcome{false, name(k) + " < " + name(k + 1), a[k], a[k + 1]};
  }
  outcome.holds = a[n - 2] == a[n - 1];
  outcome.relation = name(n - 2) + " = " + name(n - 1);
  outcome.lhs = a[n - 2];
  outcome.rhs = a[n - 1];
  return outcome;
}

}  // namespace

StructureTag detect_structure(const Graph& g) {
  const int n = g.order();
  StructureTag tag;
  if (n >= 3 && g.size() == n * (n - 1) / 2) {
    tag.kind = Structure::Complete;
    return tag;
  }
  std::pair<VertexSet, VertexSet> sides;
  if (two_colour(g, g.vertices(), &sides) && g.size() == sides.first.size() * sides.second.size()) {
    if (sides.first.size() == 1 || sides.second.size() == 1) {
      VertexSet hub = sides.first.size() == 1 ? sides.first : sides.second;
      if (sides.first.size() == 1 && sides.second.size() == 1) hub = VertexSet::single(0);
      tag.kind = Structure::Star;
      tag.center = hub.first();
      tag.parts = {hub, g.vertices() - hub};
      return tag;
    }
    if (!sides.first.contains(0)) std::swap(sides.first, sides.second);
    tag.kind = Structure::CompleteBipartite;
    tag.parts = sides;
    return tag;
  }
  if (auto order = path_order(g); !order.empty()) {
    tag.kind = Structure::Chain;
    tag.order = std::move(order);
    return tag;
  }
  return tag;
}

bool check_complete(const CentralityTarget& c) {
  Rational total = 0, largest = 0;
  for (const auto& s : c.squares()) {
    total += s;
    if (s > largest) largest = s;
  }
  return 2 * largest < total;
}

bool check_complete_bipartite(const CentralityTarget& c, VertexSet v1, VertexSet v2) {
  return c.sum_squares(v1) == c.sum_squares(v2);
}

bool check_star(const CentralityTarget& c, int center) {
  VertexSet hub = VertexSet::single(center);
  return c.square(center) == c.sum_squares(VertexSet::range(c.size()) - hub);
}

bool check_chain(const CentralityTarget& c, std::span<const int> order) {
  if (order.size() < 2) throw PreconditionError("check_chain: path needs at least 2 vertices");
  return evaluate_chain(c, order).holds;
}

std::optional<ClosedFormVerdict> closed_form_check(const Graph& g, const CentralityTarget& c) {
  require_matching(g, c);
  ClosedFormVerdict v;
  v.tag = detect_structure(g);
  switch (v.tag.kind) {
    case Structure::General:
      return std::nullopt;
    case Structure::Complete: {
      v.clause = "complete";
      Rational largest = 0;
      for (const auto& s : c.squares()) largest = std::max(largest, s);
      v.lhs = 2 * largest;
      v.rhs = c.sum_squares(g.vertices());
      v.relation = "2 max c_j^2 < sum c_j^2";
      v.feasible = check_complete(c);
      break;
    }
    case Structure::Star:
    case Structure::CompleteBipartite: {
      const bool star = v.tag.kind == Structure::Star;
      v.clause = star ? "star" : "complete bipartite";
      v.lhs = c.sum_squares(v.tag.parts.first);
      v.rhs = c.sum_squares(v.tag.parts.second);
      v.relation = "sum over " + v.tag.parts.first.to_string() + " = sum over " +
                   v.tag.parts.second.to_string();
      v.feasible = star ? check_star(c, v.tag.center)
                        : check_complete_bipartite(c, v.tag.parts.first, v.tag.parts.second);
      break;
    }
    case Structure::Chain: {
      v.clause = "chain";
      ChainOutcome outcome = evaluate_chain(c, v.tag.order);
      v.feasible = outcome.holds;
      v.relation = outcome.relation;
      v.lhs = outcome.lhs;
      v.rhs = outcome.rhs;
      break;
    }
  }
  return v;
}

}  // namespace iecp
