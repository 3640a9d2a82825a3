#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "iecp/graph.hpp"

namespace iecp {

/// S1: every edge has an endpoint in S (equality condition).
/// S2: some edge avoids S (strict inequality condition).
enum class Family { S1, S2 };

const char* to_string(Family f);

struct StableSetRecord {
  VertexSet set;
  VertexSet neighborhood;
  Family family = Family::S2;

  bool operator==(const StableSetRecord&) const = default;
  /// "{1,4} N={2,3} S2"
  std::string to_string() const;
};

inline constexpr int kDefaultEnumerationBound = 25;

/// Classifies a nonempty stable set. Throws PreconditionError otherwise.
Family classify(const Graph& g, VertexSet s);

StableSetRecord make_record(const Graph& g, VertexSet s);

/// Calls visit(record) for every nonempty stable set, depth-first, so sets
/// arrive in lexicographic order of their sorted member lists. Throws
/// ResourceLimit when the graph has more than `bound` vertices.
template <class Visitor>
void for_each_stable_set(const Graph& g, Visitor&& visit, int bound = kDefaultEnumerationBound);

std::vector<StableSetRecord> enumerate_stable_sets(const Graph& g,
                                                   int bound = kDefaultEnumerationBound);

/// Redundancy test a): S splits into two parts whose
/// neighbourhoods are disjoint. Equivalent to the overlap graph on S
/// (i ~ k iff N({i}) meets N({k})) being disconnected.
bool splits_into_disjoint_neighborhoods(const Graph& g, VertexSet s);

/// Redundancy test b): some stable strict superset of S has the same
/// neighbourhood. Any such superset contains a vertex v outside S and N(S)
/// with N({v}) inside N(S), so single-vertex extensions suffice.
bool has_equal_neighborhood_extension(const Graph& g, VertexSet s);

struct ReducedFamily {
  std::vector<StableSetRecord> sets;
};

/// Keeps the S2 records that pass neither redundancy test. Input order is
/// preserved. Records tagged S1 are ignored.
ReducedFamily reduce_family(const Graph& g, std::span<const StableSetRecord> records);

// ---------------------------------------------------------------------------

namespace detail {

void check_enumeration_bound(const Graph& g, int bound);

template <class Visitor>
void stable_set_dfs(const Graph& g, VertexSet current, std::uint64_t candidates,
                    VertexSet covered, Visitor& visit) {
  // covered = current | N(current)
  while (candidates != 0) {
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    VertexSet next = current.with(v);
    VertexSet next_covered = covered | g.neighbor_set(v) | VertexSet::single(v);
    StableSetRecord record{next, next_covered - next, Family::S2};
    // In a connected graph, no edge avoids S iff S u N(S) = V and N(S) is stable.
    if (next_covered == g.vertices() && is_stable(g, record.neighborhood))
      record.family = Family::S1;
    visit(record);
    std::uint64_t rest = candidates & ~g.neighbor_set(v).bits();
    stable_set_dfs(g, next, rest, next_covered, visit);
  }
}

}  // namespace detail

template <class Visitor>
void for_each_stable_set(const Graph& g, Visitor&& visit, int bound) {
  detail::check_enumeration_bound(g, bound);
  detail::stable_set_dfs(g, VertexSet{}, g.vertices().bits(), VertexSet{}, visit);
}

}  // namespace iecp
