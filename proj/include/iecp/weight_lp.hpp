#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iecp/graph.hpp"
#include "iecp/simplex.hpp"

namespace iecp {

/// Edge weights keyed by edge. Used both for strictly positive solutions and
/// for nonnegative boundary solutions; positivity is checked where it matters
/// (verify_exact), not by the container.
struct WeightAssignment {
  std::map<Edge, Rational> weights;

  const Rational& at(int a, int b) const { return weights.at(make_edge(a, b)); }
  bool all_positive() const;
  Rational min_weight() const;
};

enum class WeightLpStatus { StrictlyFeasible, BoundaryOnly, Infeasible };

const char* to_string(WeightLpStatus s);

struct LpResult {
  WeightLpStatus status = WeightLpStatus::Infeasible;
  /// Largest achievable minimum edge weight (undefined when Infeasible).
  Rational epsilon_star;
  /// Maximising weights; present iff StrictlyFeasible.
  std::optional<WeightAssignment> assignment;
  /// Nonnegative solution with some zero weight; present iff BoundaryOnly.
  std::optional<WeightAssignment> boundary;
};

/// The linear system B z = q of the shifted weights z = w - eps, where column
/// {i,j} of B holds c_i c_j in rows i and j and q_j = c_j^2 - eps * sum over
/// neighbours i of c_i c_j. Rows are vertices, columns follow g.edges().
struct WeightSystem {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> matrix;  // row-major
  std::vector<Rational> rhs;

  const Rational& at(int r, int c) const { return matrix[static_cast<std::size_t>(r) * cols + c]; }
};

WeightSystem weight_system(const Graph& g, const CentralityTarget& c, const Rational& eps);

/// maximize eps  s.t.  sum_{i in N(j)} w_ij c_i c_j = c_j^2 (all j),  w_ij >= eps >= 0,
/// solved exactly. eps* > 0 means c is realizable by strictly positive weights.
LpResult solve_max_min_weight(const Graph& g, const CentralityTarget& c);

/// When B z = q(eps), z >= 0 has no solution, returns x with q^T x > 0 and
/// B^T x <= 0; otherwise nothing.
std::optional<std::vector<Rational>> farkas_certificate(const Graph& g, const CentralityTarget& c,
                                                        const Rational& eps);

/// Checks B^T x <= 0 and q^T x > 0 by direct substitution.
bool is_farkas_certificate(const WeightSystem& system, const std::vector<Rational>& x);

/// WEIGHTS document: one line per edge "i j p/q" (1-based); '#' lines ignored.
WeightAssignment parse_weights(std::string_view text, const Graph& g);
std::string format_weights(const WeightAssignment& w);

}  // namespace iecp
