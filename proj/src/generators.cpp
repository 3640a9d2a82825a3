#include "iecp/generators.hpp"

#include <stdexcept>

#include "iecp/special_graphs.hpp"

namespace iecp {

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph complete_bipartite_graph(int p, int r) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < r; ++j) edges.push_back({i, p + j});
  return Graph(p + r, std::move(edges));
}

Graph star_graph(int n) { return complete_bipartite_graph(1, n - 1); }

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph random_connected_graph(int n, Rng& rng, double density) {
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back(make_edge(parent, v));
    present[parent][v] = present[v][parent] = true;
  }
  std::bernoulli_distribution extra(density);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!present[i][j] && extra(rng)) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Rational random_positive_rational(Rng& rng, int max_num, int max_den) {
  Rational r(std::uniform_int_distribution<int>(1, max_num)(rng),
             std::uniform_int_distribution<int>(1, max_den)(rng));
  r.canonicalize();
  return r;
}

std::vector<Rational> rational_unit_vector(int dim, Rng& rng) {
  if (dim == 1) return {Rational(1)};
  for (;;) {
    // t in Q^{dim-1}; point = (2t, |t|^2 - 1) / (|t|^2 + 1)
    std::vector<Rational> t(dim - 1);
    Rational norm2 = 0;
    for (auto& v : t) {
      v = random_positive_rational(rng, 12, 7);
      norm2 += v * v;
    }
    if (norm2 == 1) continue;
    std::vector<Rational> point(dim);
    Rational scale = 1 / (norm2 + 1);
    for (int i = 0; i + 1 < dim; ++i) point[i] = 2 * t[i] * scale;
    point[dim - 1] = abs(Rational((norm2 - 1) * scale));
    return point;
  }
}

CentralityTarget canonical_complete_target(int n) {
  return CentralityTarget(std::vector<Rational>(n, Rational(1)));
}

namespace {

// Rationals x, y > 0 with y^2 - x^2 = d > 0.
std::pair<Rational, Rational> difference_of_squares(const Rational& d) {
  const Rational t(1, 2);  // y - x
  Rational y = (t + d / t) / 2;
  Rational x = (d / t - t) / 2;
  return {x, y};
}

}  // namespace

CentralityTarget canonical_star_target(int n) {
  if (n == 2) return CentralityTarget({1, 1});
  if (n == 3) return CentralityTarget({5, 3, 4});
  std::vector<Rational> c(n, Rational(1));
  // (n-2) unit leaves plus one leaf x with centre y: y^2 = (n-2) + x^2.
  Rational d = n - 2;
  Rational x = (d - 1) / 2, y = (d + 1) / 2;
  c[0] = y;
  c[n - 1] = x;
  return CentralityTarget(std::move(c));
}

CentralityTarget canonical_bipartite_target(int p, int r) {
  std::vector<Rational> c(p + r, Rational(1));
  if (p == r) return CentralityTarget(std::move(c));
  // p - 1 + a^2 = r - 1 + b^2 with the adjusted entries first in each part.
  const bool left_larger = p > r;
  auto [small, large] = difference_of_squares(Rational(left_larger ? p - r : r - p));
  c[0] = left_larger ? small : large;
  c[p] = left_larger ? large : small;
  return CentralityTarget(std::move(c));
}

CentralityTarget canonical_chain_target(int n) {
  std::vector<Rational> c(n);
  const bool even = n % 2 == 0;
  for (int i = 0; i < n; ++i) c[i] = even ? 2 : 5;
  c[0] = even ? 1 : 3;
  c[n - 1] = even ? 1 : 4;
  return CentralityTarget(std::move(c));
}

namespace {

std::vector<Rational> scaled(const std::vector<Rational>& v, const Rational& s) {
  std::vector<Rational> out(v);
  for (auto& x : out) x *= s;
  return out;
}

// Random target with equal sums of squares over the two given parts.
CentralityTarget balanced_target(int n, VertexSet first, VertexSet second, Rng& rng) {
  std::vector<Rational> c(n);
  Rational s = random_positive_rational(rng, 9, 4);
  auto place = [&](VertexSet part) {
    auto dir = scaled(rational_unit_vector(part.size(), rng), s);
    int k = 0;
    for (int v : part.members()) c[v] = dir[k++];
  };
  place(first);
  place(second);
  return CentralityTarget(std::move(c));
}

}  // namespace

Fixture generate_fixture(std::string_view kind, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("gen: n must be at least 2");
  Rng rng(seed);
  const bool canonical = seed == 0;
  if (kind == "complete") {
    if (n < 3) throw std::invalid_argument("gen complete: n must be at least 3");
    Graph g = complete_graph(n);
    if (canonical) return {g, canonical_complete_target(n), "complete"};
    for (;;) {
      std::vector<Rational> c(n);
      for (auto& v : c) v = random_positive_rational(rng, 9, 4);
      CentralityTarget t(std::move(c));
      if (check_complete(t)) return {g, t, "complete"};
    }
  }
  if (kind == "star") {
    Graph g = star_graph(n);
    if (canonical) return {g, canonical_star_target(n), "star"};
    return {g, balanced_target(n, VertexSet::single(0), g.vertices().without(0), rng), "star"};
  }
  if (kind == "bipartite") {
    int p = n / 2, r = n - p;
    Graph g = complete_bipartite_graph(p, r);
    if (canonical) return {g, canonical_bipartite_target(p, r), "bipartite"};
    return {g, balanced_target(n, VertexSet::range(p), g.vertices() - VertexSet::range(p), rng),
            "bipartite"};
  }
  if (kind == "chain") {
    Graph g = path_graph(n);
    if (canonical) return {g, canonical_chain_target(n), "chain"};
    VertexSet odd, even;
    for (int v = 0; v < n; ++v) {
      if (v % 2 == 0) odd = odd.with(v);
      else even = even.with(v);
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    for (int attempt = 0; attempt < 10000; ++attempt) {
      CentralityTarget t = balanced_target(n, odd, even, rng);
      if (check_chain(t, order)) return {g, t, "chain"};
    }
    return {g, canonical_chain_target(n), "chain"};
  }
  if (kind == "random-connected") {
    Graph g = random_connected_graph(n, rng);
    std::vector<Rational> c(n);
    for (auto& v : c) v = random_positive_rational(rng, 9, 4);
    return {g, CentralityTarget(std::move(c)), "unclassified"};
  }
  throw std::invalid_argument("gen: unknown kind '" + std::string(kind) + "'");
}

}  // namespace iecp
