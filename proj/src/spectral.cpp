#include "iecp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace iecp {

void WeightedAdjacency::set(int i, int j, const Rational& value) {
  entries_[index(i, j)] = value;
  entries_[index(j, i)] = value;
}

bool WeightedAdjacency::symmetric() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<double> WeightedAdjacency::to_double() const {
  std::vector<double> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [](const Rational& r) { return r.get_d(); });
  return out;
}

WeightedAdjacency build_matrix(const Graph& g, const WeightAssignment& w) {
  WeightedAdjacency a(g.order());
  for (const Edge& e : g.edges()) {
    auto it = w.weights.find(e);
    if (it == w.weights.end()) throw MissingWeightError("no weight for edge " + e.label());
    a.set(e.u, e.v, it->second);
  }
  return a;
}

bool verify_exact(const Graph& g, const WeightAssignment& w, const CentralityTarget& c) {
  if (c.size() != g.order() || w.weights.size() != static_cast<std::size_t>(g.size())) return false;
  std::vector<Rational> sum(g.order());
  for (const Edge& e : g.edges()) {
    auto it = w.weights.find(e);
    if (it == w.weights.end() || sgn(it->second) <= 0) return false;
    sum[e.u] += it->second * c[e.v];
    sum[e.v] += it->second * c[e.u];
  }
  for (int j = 0; j < g.order(); ++j)
    if (sum[j] != c[j]) return false;
  return true;
}

bool check_irreducible(const WeightedAdjacency& a) {
  const int n = a.order();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (seen[j] || sgn(a(i, j)) <= 0) continue;
      seen[j] = 1;
      ++reached;
      stack.push_back(j);
    }
  }
  return reached == n;
}

namespace kernels {

void shifted_matvec(std::span<const double> a, int n, double shift, std::span<const double> x,
                    std::span<double> y) {
#pragma omp parallel for schedule(static) if (n >= 256)
  for (int i = 0; i < n; ++i) {
    const double* row = a.data() + static_cast<std::size_t>(i) * n;
    double s = shift * x[i];
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

void shifted_matvec_serial(std::span<const double> a, int n, double shift,
                           std::span<const double> x, std::span<double> y) {
  for (int i = 0; i < n; ++i) {
    const double* row = a.data() + static_cast<std::size_t>(i) * n;
    double s = shift * x[i];
    for (int j = 0; j < n; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

}  // namespace kernels

namespace {

double norm2(std::span<const double> v) {
  return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
}

double dot(std::span<const double> a, std::span<const double> b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

// |lambda_2| of a symmetric matrix after removing the Perron pair.
double deflated_magnitude(const std::vector<double>& a, int n, double rho,
                          const std::vector<double>& perron, double tol, std::size_t max_iter) {
  if (n < 2) return 0.0;
  std::vector<double> x(n), y(n);
  for (int i = 0; i < n; ++i) x[i] = 1.0 + static_cast<double>(i) / n;
  auto project = [&](std::vector<double>& v) {
    double p = dot(v, perron);
    for (int i = 0; i < n; ++i) v[i] -= p * perron[i];
  };
  project(x);
  double nx = norm2(x);
  if (nx == 0.0) return 0.0;
  for (double& v : x) v /= nx;
  double estimate = 0.0;
  for (std::size_t it = 0; it < max_iter; ++it) {
    kernels::shifted_matvec(a, n, 0.0, x, y);
    double p = dot(x, perron);
    for (int i = 0; i < n; ++i) y[i] -= rho * p * perron[i];
    project(y);
    double ny = norm2(y);
    if (ny == 0.0) return 0.0;
    bool settled = std::abs(ny - estimate) < tol * std::max(1.0, ny);
    estimate = ny;
    for (int i = 0; i < n; ++i) x[i] = y[i] / ny;
    if (settled && it > 2) break;
  }
  return estimate;
}

}  // namespace

PowerIterationResult power_iteration(const WeightedAdjacency& a, double tol, std::size_t max_iter,
                                     double shift) {
  const int n = a.order();
  const auto dense = a.to_double();
  PowerIterationResult result;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  for (std::size_t it = 0; it < max_iter; ++it) {
    kernels::shifted_matvec(dense, n, shift, x, y);
    double ny = norm2(y);
    if (ny == 0.0) break;
    double diff = 0.0;
    for (int i = 0; i < n; ++i) {
      y[i] /= ny;
      diff = std::max(diff, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    result.iterations = it + 1;
    if (diff < tol) {
      result.converged = true;
      break;
    }
  }
  kernels::shifted_matvec(dense, n, 0.0, x, y);
  result.rho = dot(x, y);
  result.vector = std::move(x);
  return result;
}

SpectralReport spectral_report(const Graph& g, const WeightAssignment& w, const CentralityTarget& c,
                               double tol, std::size_t max_iter) {
  SpectralReport report;
  const WeightedAdjacency a = build_matrix(g, w);
  report.exact_residual_zero = [&] {
    for (int j = 0; j < g.order(); ++j) {
      Rational s = 0;
      for (int i : g.neighbors(j)) s += a(i, j) * c[i];
      if (s != c[j]) return false;
    }
    return true;
  }();
  report.support_full = w.all_positive();
  report.irreducible = check_irreducible(a);
  if (!report.irreducible) return report;

  const auto power = power_iteration(a, tol, max_iter);
  report.rho_estimate = power.rho;
  report.power_converged = power.converged;
  report.power_iterations = power.iterations;
  std::vector<double> target(c.size());
  for (int i = 0; i < c.size(); ++i) target[i] = c[i].get_d();
  report.perron_cosine = dot(power.vector, target) / (norm2(power.vector) * norm2(target));
  if (power.rho > 0.0) {
    double lambda2 = deflated_magnitude(a.to_double(), g.order(), power.rho, power.vector, tol,
                                        std::min<std::size_t>(max_iter, 100'000));
    report.gap_estimate = lambda2 / power.rho;
  }
  return report;
}

}  // namespace iecp
