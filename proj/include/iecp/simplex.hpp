#pragma once

#include <cstddef>
#include <vector>

#include "iecp/rational.hpp"

namespace iecp {

/// maximize objective^T x  subject to  A x = b,  x >= 0.
/// A is row-major with `rows` rows and `cols` columns.
struct StandardFormLp {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;
  std::vector<Rational> b;
  std::vector<Rational> objective;

  StandardFormLp() = default;
  StandardFormLp(std::size_t rows, std::size_t cols);

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
};

enum class SimplexStatus { Optimal, Infeasible, Unbounded };

const char* to_string(SimplexStatus s);

struct SimplexResult {
  SimplexStatus status = SimplexStatus::Infeasible;
  /// Optimal objective value (Optimal only).
  Rational objective;
  /// Optimal basic solution (Optimal only).
  std::vector<Rational> x;
  /// Basic column per surviving row (Optimal only).
  std::vector<std::size_t> basis;
  /// Infeasible only: y with A^T y <= 0 and b^T y > 0, read off the phase-1
  /// simplex multipliers.
  std::vector<Rational> farkas;
  std::size_t pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule
/// (smallest-index entering and leaving variables), so it always terminates.
SimplexResult simplex_solve(const StandardFormLp& lp);

}  // namespace iecp
