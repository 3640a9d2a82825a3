#include "iecp/simplex.hpp"

#include <limits>
#include <stdexcept>

namespace iecp {

StandardFormLp::StandardFormLp(std::size_t r, std::size_t c)
    : rows(r), cols(c), a(r * c), b(r), objective(c) {}

const char* to_string(SimplexStatus s) {
  switch (s) {
    case SimplexStatus::Optimal: return "optimal";
    case SimplexStatus::Infeasible: return "infeasible";
    case SimplexStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau [ D A | I | D b ] with a reduced-cost row. Columns
// [0, n) are structural, [n, n + m) artificial, the last column is the rhs.
class Tableau {
 public:
  explicit Tableau(const StandardFormLp& lp)
      : m_(lp.rows), n_(lp.cols), width_(n_ + m_ + 1), t_(m_ * width_), cost_row_(width_),
        basis_(m_), active_(m_, true), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      sign_[i] = sgn(lp.b[i]) < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j)
        if (sgn(lp.at(i, j)) != 0) cell(i, j) = sign_[i] < 0 ? Rational(-lp.at(i, j)) : lp.at(i, j);
      cell(i, n_ + i) = 1;
      cell(i, rhs()) = sign_[i] < 0 ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
  }

  std::size_t rhs() const { return width_ - 1; }
  Rational& cell(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

  // Phase 1: minimise the sum of artificials. Returns the optimum.
  Rational phase_one() {
    for (std::size_t j = 0; j < width_; ++j) cost_row_[j] = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) cost_row_[j] -= cell(i, j);
      cost_row_[rhs()] -= cell(i, rhs());
    }
    column_limit_ = n_ + m_;
    run();
    return -cost_row_[rhs()];
  }

  // Simplex multipliers of phase 1 mapped back to the unscaled rows.
  std::vector<Rational> farkas_ray() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = 1 - cost_row_[n_ + i];
      if (sign_[i] < 0) y[i] = -y[i];
    }
    return y;
  }

  // Pivots remaining zero-level artificials out of the basis; rows where that
  // is impossible are linearly dependent and are dropped.
  void drop_artificials() {
    column_limit_ = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < n_ && entering == kNone; ++j)
        if (sgn(cell(i, j)) != 0) entering = j;
      if (entering == kNone)
        active_[i] = false;
      else
        pivot(i, entering);
    }
  }

  // Phase 2: minimise -objective^T x. Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& objective) {
    for (std::size_t j = 0; j < width_; ++j) cost_row_[j] = 0;
    for (std::size_t j = 0; j < n_; ++j) cost_row_[j] = -objective[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (!active_[i]) continue;
      const Rational& cb = objective[basis_[i]];
      if (sgn(cb) == 0) continue;
      // cost_B = -cb
      for (std::size_t j = 0; j < n_; ++j) cost_row_[j] += cb * cell(i, j);
      cost_row_[rhs()] += cb * cell(i, rhs());
    }
    return run();
  }

  Rational objective_value() const { return cost_row_[rhs()]; }

  std::vector<Rational> solution() {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i] && basis_[i] < n_) x[basis_[i]] = cell(i, rhs());
    return x;
  }

  std::vector<std::size_t> basis() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m_; ++i)
      if (active_[i]) out.push_back(basis_[i]);
    return out;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  // Bland's rule iterations on the current cost row. Returns false if unbounded.
  bool run() {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t j = 0; j < column_limit_ && entering == kNone; ++j)
        if (j < n_ && sgn(cost_row_[j]) < 0) entering = j;
      if (entering == kNone) return true;

      std::size_t leaving = kNone;
      Rational best, ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!active_[i] || sgn(cell(i, entering)) <= 0) continue;
        ratio = cell(i, rhs()) / cell(i, entering);
        if (leaving == kNone || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == kNone) return false;
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    ++pivots_;
    pivot_col_ = col;
    nonzero_.clear();
    Rational inv = 1 / cell(r, col);
    for (std::size_t j = 0; j < width_; ++j) {
      if (!in_use(j) || sgn(cell(r, j)) == 0) continue;
      cell(r, j) *= inv;
      nonzero_.push_back(j);
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || !active_[i] || sgn(cell(i, col)) == 0) continue;
      eliminate(&t_[i * width_], &t_[r * width_]);
    }
    if (sgn(cost_row_[col]) != 0) eliminate(cost_row_.data(), &t_[r * width_]);
    basis_[r] = col;
  }

  // row -= row[pivot column] * pivot_row, touching only the pivot row's nonzeros.
  void eliminate(Rational* row, const Rational* pivot_row) {
    factor_ = row[pivot_col_];
    for (std::size_t j : nonzero_) {
      mpq_mul(scratch_.get_mpq_t(), factor_.get_mpq_t(), pivot_row[j].get_mpq_t());
      mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), scratch_.get_mpq_t());
    }
  }

  bool in_use(std::size_t j) const { return j == rhs() || j < column_limit_; }

  std::size_t m_, n_, width_;
  std::vector<Rational> t_;
  std::vector<Rational> cost_row_;
  std::vector<std::size_t> basis_;
  std::vector<bool> active_;
  std::vector<int> sign_;
  std::vector<std::size_t> nonzero_;
  std::size_t column_limit_ = 0;
  std::size_t pivot_col_ = 0;
  std::size_t pivots_ = 0;
  Rational factor_, scratch_;
};

}  // namespace

SimplexResult simplex_solve(const StandardFormLp& lp) {
  if (lp.a.size() != lp.rows * lp.cols || lp.b.size() != lp.rows || lp.objective.size() != lp.cols)
    throw std::invalid_argument("simplex_solve: inconsistent problem dimensions");

  Tableau tableau(lp);
  SimplexResult result;
  Rational infeasibility = tableau.phase_one();
  if (sgn(infeasibility) > 0) {
    result.status = SimplexStatus::Infeasible;
    result.farkas = tableau.farkas_ray();
    result.pivots = tableau.pivots();
    return result;
  }
  tableau.drop_artificials();
  if (!tableau.phase_two(lp.objective)) {
    result.status = SimplexStatus::Unbounded;
    result.pivots = tableau.pivots();
    return result;
  }
  result.status = SimplexStatus::Optimal;
  result.objective = tableau.objective_value();
  result.x = tableau.solution();
  result.basis = tableau.basis();
  result.pivots = tableau.pivots();
  return result;
}

}  // namespace iecp
