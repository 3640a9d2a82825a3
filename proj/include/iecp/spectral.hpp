#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "iecp/graph.hpp"
#include "iecp/weight_lp.hpp"

namespace iecp {

/// Dense symmetric weighted adjacency matrix with exact entries.
class WeightedAdjacency {
 public:
  explicit WeightedAdjacency(int n) : n_(n), entries_(static_cast<std::size_t>(n) * n) {}

  int order() const { return n_; }
  const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }
  void set(int i, int j, const Rational& value);
  bool symmetric() const;
  /// Row-major copy in double precision.
  std::vector<double> to_double() const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }
  int n_;
  std::vector<Rational> entries_;
};

class MissingWeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a_ij = w_ij on edges, 0 elsewhere. Throws MissingWeightError if an edge
/// has no weight.
WeightedAdjacency build_matrix(const Graph& g, const WeightAssignment& w);

/// Exact check of A c = c with every edge weight strictly positive.
bool verify_exact(const Graph& g, const WeightAssignment& w, const CentralityTarget& c);

/// Support graph of the positive entries is connected (n = 1 counts as irreducible).
bool check_irreducible(const WeightedAdjacency& a);

struct PowerIterationResult {
  double rho = 0.0;
  std::vector<double> vector;
  std::size_t iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultTolerance = 1e-12;
inline constexpr std::size_t kDefaultMaxIterations = 1'000'000;

/// Power iteration on A + shift*I. The shift keeps rho + shift strictly
/// dominant when the support is bipartite (-rho is then an eigenvalue too).
/// Converged when successive unit iterates differ by less than tol in max-norm;
/// non-convergence is reported, not thrown.
PowerIterationResult power_iteration(const WeightedAdjacency& a, double tol = kDefaultTolerance,
                                     std::size_t max_iter = kDefaultMaxIterations,
                                     double shift = 1.0);

namespace kernels {

/// y = (A + shift I) x for a dense row-major n x n matrix. Rows are split
/// across threads; each row is summed in index order, so results do not
/// depend on the thread count.
void shifted_matvec(std::span<const double> a, int n, double shift, std::span<const double> x,
                    std::span<double> y);
void shifted_matvec_serial(std::span<const double> a, int n, double shift,
                           std::span<const double> x, std::span<double> y);

}  // namespace kernels

struct SpectralReport {
  bool exact_residual_zero = false;
  bool support_full = false;
  bool irreducible = false;
  double rho_estimate = 0.0;
  /// Cosine between the power-iteration vector and c.
  double perron_cosine = 0.0;
  /// |lambda_2| / rho from a deflated iteration; diagnostic only.
  double gap_estimate = 0.0;
  bool power_converged = false;
  std::size_t power_iterations = 0;

  bool pass() const { return exact_residual_zero && support_full && irreducible; }
};

/// Exact checks decide pass/fail; the floating-point fields are confirmation.
SpectralReport spectral_report(const Graph& g, const WeightAssignment& w, const CentralityTarget& c,
                               double tol = kDefaultTolerance,
                               std::size_t max_iter = kDefaultMaxIterations);

}  // namespace iecp
