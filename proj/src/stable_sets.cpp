#include "iecp/stable_sets.hpp"

namespace iecp {

const char* to_string(Family f) { return f == Family::S1 ? "S1" : "S2"; }

std::string StableSetRecord::to_string() const {
  return set.to_string() + " N=" + neighborhood.to_string() + " " + iecp::to_string(family);
}

Family classify(const Graph& g, VertexSet s) {
  if (s.empty()) throw PreconditionError("classify: empty set");
  if (!is_stable(g, s)) throw PreconditionError("classify: " + s.to_string() + " is not stable");
  VertexSet outside = g.vertices() - s;
  for (int v : outside.members())
    if (g.neighbor_set(v).intersects(outside)) return Family::S2;
  return Family::S1;
}

StableSetRecord make_record(const Graph& g, VertexSet s) {
  return StableSetRecord{s, external_neighborhood(g, s), classify(g, s)};
}

namespace detail {

void check_enumeration_bound(const Graph& g, int bound) {
  if (g.order() > bound)
    throw ResourceLimit("stable-set enumeration limited to " + std::to_string(bound) +
                        " vertices; graph has " + std::to_string(g.order()));
}

}  // namespace detail

std::vector<StableSetRecord> enumerate_stable_sets(const Graph& g, int bound) {
  std::vector<StableSetRecord> out;
  for_each_stable_set(g, [&](const StableSetRecord& r) { out.push_back(r); }, bound);
  return out;
}

bool splits_into_disjoint_neighborhoods(const Graph& g, VertexSet s) {
  if (s.size() < 2) return false;
  // Members of a stable set have all their neighbours outside it, so
  // N(S') is the union of the members' neighbour sets.
  VertexSet reached = VertexSet::single(s.first());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int a : frontier.members())
      for (int b : (s - reached).members())
        if (g.neighbor_set(a).intersects(g.neighbor_set(b))) next = next.with(b);
    reached = reached | next;
    frontier = next;
  }
  return reached != s;
}

bool has_equal_neighborhood_extension(const Graph& g, VertexSet s) {
  VertexSet hood = external_neighborhood(g, s);
  VertexSet candidates = g.vertices() - s - hood;
  for (int v : candidates.members())
    if (g.neighbor_set(v).subset_of(hood)) return true;
  return false;
}

ReducedFamily reduce_family(const Graph& g, std::span<const StableSetRecord> records) {
  ReducedFamily out;
  for (const auto& r : records) {
    if (r.family != Family::S2) continue;
    if (splits_into_disjoint_neighborhoods(g, r.set)) continue;
    if (has_equal_neighborhood_extension(g, r.set)) continue;
    out.sets.push_back(r);
  }
  return out;
}

}  // namespace iecp
