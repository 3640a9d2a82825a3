#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iecp/rational.hpp"

namespace iecp {

/// Largest vertex count representable by the bitmask sets used throughout.
inline constexpr int kMaxVertices = 64;

/// A set of vertices stored as a bitmask over 0-based indices. Vertex labels
/// shown to users are 1-based; conversion happens only in from_labels/to_string.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// Builds a set from 1-based labels.
  static VertexSet from_labels(std::initializer_list<int> labels);
  static VertexSet from_labels(std::span<const int> labels);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }
  constexpr int first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const VertexSet&) const = default;

  /// 0-based members in increasing order.
  std::vector<int> members() const;
  /// 1-based labels in increasing order.
  std::vector<int> labels() const;
  /// "{1,4}" with 1-based labels; "{}" when empty.
  std::string to_string() const;

  /// Lexicographic order of the sorted member lists (the order in which the
  /// depth-first stable-set enumeration emits sets).
  static bool lex_less(VertexSet a, VertexSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// Undirected edge with 0-based endpoints, u < v.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
  /// "i-j" with 1-based labels.
  std::string label() const;
};

Edge make_edge(int a, int b);

/// Connected simple undirected graph on vertices 0..n-1. Immutable; every
/// invariant is checked by the constructor.
class Graph {
 public:
  /// Throws ValidationError on self-loops, duplicate edges, out-of-range
  /// endpoints, fewer than two vertices, more than kMaxVertices vertices, or a
  /// disconnected graph.
  Graph(int n, std::vector<Edge> edges);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  VertexSet neighbor_set(int v) const { return masks_[v]; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  bool has_edge(int a, int b) const { return masks_[a].contains(b); }
  /// Position of edge {a,b} in edges(), or -1.
  int edge_index(int a, int b) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexSet> masks_;
};

/// N(S): vertices outside s adjacent to some vertex of s.
VertexSet external_neighborhood(const Graph& g, VertexSet s);

bool is_stable(const Graph& g, VertexSet s);

/// Whether the subgraph induced by s is connected (empty s counts as connected).
bool is_connected_subset(const Graph& g, VertexSet s);

/// Connected components of the subgraph induced by s, ordered by smallest member.
std::vector<VertexSet> induced_components(const Graph& g, VertexSet s);

/// Two-colours the subgraph induced by s. Returns false when an odd cycle is
/// found; on success colour classes are written to sides.
bool two_colour(const Graph& g, VertexSet s, std::pair<VertexSet, VertexSet>* sides = nullptr);

/// True iff the induced subgraph on s contains an odd cycle. Throws
/// PreconditionError when that subgraph is disconnected.
bool is_connected_subgraph_nonbipartite(const Graph& g, VertexSet s);

/// Positive target vector c together with its exact componentwise square.
class CentralityTarget {
 public:
  /// Throws ValidationError if empty or any entry is not strictly positive.
  explicit CentralityTarget(std::vector<Rational> values);

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](int i) const { return values_[i]; }
  std::span<const Rational> values() const { return values_; }
  std::span<const Rational> squares() const { return squares_; }
  const Rational& square(int i) const { return squares_[i]; }

  CentralityTarget scaled(const Rational& alpha) const;
  /// Sum of c_j^2 over j in s.
  Rational sum_squares(VertexSet s) const;

 private:
  std::vector<Rational> values_;
  std::vector<Rational> squares_;
};

/// Throws ValidationError if the target length differs from the vertex count.
void require_matching(const Graph& g, const CentralityTarget& c);

/// Edge-list document: "n m", then m lines "i j" (1-based). Blank lines and
/// lines starting with '#' are ignored.
Graph parse_graph(std::string_view text);

/// One rational per line ("p/q" or decimal); '#' lines are comments.
CentralityTarget parse_centrality(std::string_view text);

std::string format_graph(const Graph& g);
std::string format_centrality(const CentralityTarget& c);

/// Reads a whole file; throws std::runtime_error when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace iecp
