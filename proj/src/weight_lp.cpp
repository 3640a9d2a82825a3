#include "iecp/weight_lp.hpp"

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace iecp {

bool WeightAssignment::all_positive() const {
  for (const auto& [edge, w] : weights)
    if (sgn(w) <= 0) return false;
  return true;
}

Rational WeightAssignment::min_weight() const {
  if (weights.empty()) return 0;
  Rational best = weights.begin()->second;
  for (const auto& [edge, w] : weights)
    if (w < best) best = w;
  return best;
}

const char* to_string(WeightLpStatus s) {
  switch (s) {
    case WeightLpStatus::StrictlyFeasible: return "StrictlyFeasible";
    case WeightLpStatus::BoundaryOnly: return "BoundaryOnly";
    case WeightLpStatus::Infeasible: return "Infeasible";
  }
  return "?";
}

WeightSystem weight_system(const Graph& g, const CentralityTarget& c, const Rational& eps) {
  require_matching(g, c);
  WeightSystem sys;
  sys.rows = g.order();
  sys.cols = g.size();
  sys.matrix.resize(static_cast<std::size_t>(sys.rows) * sys.cols);
  sys.rhs.resize(sys.rows);
  for (int j = 0; j < sys.rows; ++j) sys.rhs[j] = c.square(j);
  int k = 0;
  for (const Edge& e : g.edges()) {
    Rational prod = c[e.u] * c[e.v];
    sys.matrix[static_cast<std::size_t>(e.u) * sys.cols + k] = prod;
    sys.matrix[static_cast<std::size_t>(e.v) * sys.cols + k] = prod;
    if (sgn(eps) != 0) {
      Rational shift = eps * prod;
      sys.rhs[e.u] -= shift;
      sys.rhs[e.v] -= shift;
    }
    ++k;
  }
  return sys;
}

LpResult solve_max_min_weight(const Graph& g, const CentralityTarget& c) {
  // Variables: z_e = w_e - eps for every edge, then eps itself; all >= 0.
  const WeightSystem sys = weight_system(g, c, 0);
  const std::size_t m = static_cast<std::size_t>(g.size());
  StandardFormLp lp(static_cast<std::size_t>(g.order()), m + 1);
  for (int j = 0; j < sys.rows; ++j) {
    Rational eps_coefficient = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& v = sys.at(j, static_cast<int>(k));
      if (sgn(v) == 0) continue;
      lp.at(j, k) = v;
      eps_coefficient += v;
    }
    lp.at(j, m) = eps_coefficient;
    lp.b[j] = sys.rhs[j];
  }
  lp.objective[m] = 1;

  const SimplexResult solved = simplex_solve(lp);
  LpResult result;
  if (solved.status == SimplexStatus::Infeasible) return result;
  if (solved.status == SimplexStatus::Unbounded)
    throw std::logic_error("max-min weight LP reported unbounded; eps is bounded by c_j^2");

  result.epsilon_star = solved.objective;
  WeightAssignment w;
  std::size_t k = 0;
  for (const Edge& e : g.edges()) w.weights.emplace(e, solved.x[k++] + result.epsilon_star);
  if (sgn(result.epsilon_star) > 0) {
    result.status = WeightLpStatus::StrictlyFeasible;
    result.assignment = std::move(w);
  } else {
    result.status = WeightLpStatus::BoundaryOnly;
    result.boundary = std::move(w);
  }
  return result;
}

std::optional<std::vector<Rational>> farkas_certificate(const Graph& g, const CentralityTarget& c,
                                                        const Rational& eps) {
  if (sgn(eps) < 0) throw PreconditionError("farkas_certificate: eps must be nonnegative");
  const WeightSystem sys = weight_system(g, c, eps);
  StandardFormLp lp(static_cast<std::size_t>(sys.rows), static_cast<std::size_t>(sys.cols));
  lp.a = sys.matrix;
  lp.b = sys.rhs;
  SimplexResult solved = simplex_solve(lp);
  if (solved.status != SimplexStatus::Infeasible) return std::nullopt;
  return std::move(solved.farkas);
}

bool is_farkas_certificate(const WeightSystem& system, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != system.rows) return false;
  Rational dot = 0;
  for (int r = 0; r < system.rows; ++r) dot += system.rhs[r] * x[r];
  if (sgn(dot) <= 0) return false;
  for (int col = 0; col < system.cols; ++col) {
    Rational s = 0;
    for (int r = 0; r < system.rows; ++r) s += system.at(r, col) * x[r];
    if (sgn(s) > 0) return false;
  }
  return true;
}

WeightAssignment parse_weights(std::string_view text, const Graph& g) {
  WeightAssignment w;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::istringstream fields(line);
    std::string a, b, value, extra;
    if (!(fields >> a) || a.front() == '#') continue;
    if (!(fields >> b >> value) || (fields >> extra))
      throw ParseError("line " + std::to_string(number) + ": expected 'i j p/q'");
    auto as_int = [&](const std::string& token) {
      int v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError("line " + std::to_string(number) + ": bad vertex '" + token + "'");
      return v;
    };
    int i = as_int(a), j = as_int(b);
    if (i < 1 || j < 1 || i > g.order() || j > g.order() || g.edge_index(i - 1, j - 1) < 0)
      throw ValidationError("line " + std::to_string(number) + ": " + a + "-" + b +
                            " is not an edge of the graph");
    Edge e = make_edge(i - 1, j - 1);
    if (w.weights.count(e)) throw ValidationError("duplicate weight for edge " + e.label());
    try {
      w.weights.emplace(e, parse_rational(value));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(number) + ": " + err.what());
    }
  }
  return w;
}

std::string format_weights(const WeightAssignment& w) {
  std::string out;
  for (const auto& [e, value] : w.weights)
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + " " + to_string(value) + "\n";
  return out;
}

}  // namespace iecp
