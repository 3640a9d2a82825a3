#include "iecp/fstab.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

namespace iecp {

std::vector<Rational> FstabVertex::values(int n) const {
  std::vector<Rational> y(n);
  for (int v = 0; v < n; ++v) {
    if (ones.contains(v)) y[v] = 1;
    else if (halves.contains(v)) y[v] = Rational(1, 2);
  }
  return y;
}

std::string FstabVertex::to_string(int n) const {
  std::string out;
  for (int v = 0; v < n; ++v) {
    if (v) out += ' ';
    out += ones.contains(v) ? "1" : halves.contains(v) ? "1/2" : "0";
  }
  return out;
}

std::vector<int> ExtremeRay::values(int n) const {
  std::vector<int> x(n, 0);
  for (int v = 0; v < n; ++v) x[v] = plus.contains(v) ? 1 : minus.contains(v) ? -1 : 0;
  return x;
}

std::string ExtremeRay::to_string(int n) const {
  std::string out;
  for (int x : values(n)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

const char* to_string(RayClass k) {
  switch (k) {
    case RayClass::A: return "nonpositive";
    case RayClass::B: return "zero-free";
    case RayClass::C: return "mixed";
  }
  return "?";
}

RayClass classify_ray(const ExtremeRay& ray) {
  if (ray.plus.empty()) return RayClass::A;
  if (ray.zero.empty()) return RayClass::B;
  return RayClass::C;
}

namespace {

bool halves_admissible(const Graph& g, VertexSet halves) {
  for (VertexSet comp : induced_components(g, halves))
    if (two_colour(g, comp)) return false;
  return true;
}

void vertices_for_ones(const Graph& g, VertexSet ones, VertexSet hood, std::vector<FstabVertex>& out) {
  const VertexSet free = g.vertices() - ones - hood;
  const std::uint64_t r = free.bits();
  std::uint64_t h = 0;
  do {
    VertexSet halves(h);
    if (halves_admissible(g, halves))
      out.push_back(FstabVertex{ones, g.vertices() - ones - halves, halves});
    h = (h - r) & r;
  } while (h != 0);
}

}  // namespace

std::vector<FstabVertex> enumerate_fstab_vertices(const Graph& g, int bound) {
  std::vector<FstabVertex> out;
  vertices_for_ones(g, VertexSet{}, VertexSet{}, out);
  for_each_stable_set(
      g, [&](const StableSetRecord& r) { vertices_for_ones(g, r.set, r.neighborhood, out); }, bound);
  // Each (ones, halves) pair is produced once; collapse defensively anyway.
  std::vector<FstabVertex> unique;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const auto& v : out)
    if (seen.emplace(v.ones.bits(), v.halves.bits()).second) unique.push_back(v);
  return unique;
}

std::vector<ExtremeRay> extreme_rays(const Graph& g, int bound) {
  std::vector<ExtremeRay> rays;
  for (const auto& y : enumerate_fstab_vertices(g, bound)) {
    if (y.halves == g.vertices()) continue;  // maps to the null vector
    rays.push_back(ExtremeRay{y.ones, y.zeros, y.halves});
  }
  return rays;
}

std::vector<Rational> farkas_rhs(const Graph& g, const CentralityTarget& c, const Rational& eps) {
  require_matching(g, c);
  std::vector<Rational> q(c.squares().begin(), c.squares().end());
  if (sgn(eps) == 0) return q;
  for (const Edge& e : g.edges()) {
    Rational shift = eps * c[e.u] * c[e.v];
    q[e.u] -= shift;
    q[e.v] -= shift;
  }
  return q;
}

Rational ray_product(const std::vector<Rational>& q, const ExtremeRay& ray) {
  Rational total = 0;
  for (int v : ray.plus.members()) total += q[v];
  for (int v : ray.minus.members()) total -= q[v];
  return total;
}

FarkasScan farkas_scan(const Graph& g, const CentralityTarget& c, const Rational& eps, bool full,
                       int bound) {
  if (sgn(eps) < 0) throw PreconditionError("farkas_scan: eps must be nonnegative");
  const auto q = farkas_rhs(g, c, eps);
  const auto rays = extreme_rays(g, bound);
  const long count = static_cast<long>(rays.size());
  std::vector<char> failed(full ? rays.size() : 0, 0);
  long first = std::numeric_limits<long>::max();

#pragma omp parallel for schedule(static) reduction(min : first) if (count > 4096)
  for (long k = 0; k < count; ++k) {
    if (!full && k > first) continue;
    if (sgn(ray_product(q, rays[k])) > 0) {
      if (k < first) first = k;
      if (full) failed[k] = 1;
    }
  }

  FarkasScan scan;
  scan.rays_checked = rays.size();
  if (first == std::numeric_limits<long>::max()) return scan;
  scan.pass = false;
  auto violation = [&](long k) {
    return RayViolation{rays[k], classify_ray(rays[k]), ray_product(q, rays[k])};
  };
  scan.first_failure = violation(first);
  if (full)
    for (long k = 0; k < count; ++k)
      if (failed[k]) scan.failures.push_back(violation(k));
  return scan;
}

FarkasScan farkas_scan_serial(const Graph& g, const CentralityTarget& c, const Rational& eps,
                              bool full, int bound) {
  if (sgn(eps) < 0) throw PreconditionError("farkas_scan: eps must be nonnegative");
  const auto q = farkas_rhs(g, c, eps);
  const auto rays = extreme_rays(g, bound);
  FarkasScan scan;
  scan.rays_checked = rays.size();
  for (const auto& ray : rays) {
    Rational p = ray_product(q, ray);
    if (sgn(p) <= 0) continue;
    RayViolation v{ray, classify_ray(ray), p};
    if (scan.pass) {
      scan.pass = false;
      scan.first_failure = v;
    }
    if (!full) break;
    scan.failures.push_back(std::move(v));
  }
  return scan;
}

// ---------------------------------------------------------------------------
// Brute-force vertex oracle.

namespace {

// Small exact fraction; entries of these systems stay tiny.
struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    if (d < 0) n = -n, d = -d;
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) n /= g, d /= g;
    return Frac{n, d};
  }
  bool zero() const { return num == 0; }
  Frac operator-(const Frac& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Frac operator+(const Frac& o) const { return make(num * o.den + o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return make(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return make(num * o.den, den * o.num); }
  bool negative() const { return num < 0; }
  bool operator>(const Frac& o) const { return num * o.den > o.num * den; }
  auto key() const { return std::pair{num, den}; }
};

class BasisSearch {
 public:
  explicit BasisSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (int v = 0; v < n_; ++v) {
      std::vector<Frac> row(n_ + 1);
      row[v] = Frac{1, 1};
      rows_.push_back(row);  // y_v = 0
    }
    for (const Edge& e : g.edges()) {
      std::vector<Frac> row(n_ + 1);
      row[e.u] = Frac{1, 1};
      row[e.v] = Frac{1, 1};
      row[n_] = Frac{1, 1};
      rows_.push_back(row);  // y_u + y_v = 1
    }
    echelon_.resize(n_);
    pivots_.resize(n_);
  }

  std::vector<std::vector<Rational>> run() {
    descend(0, 0);
    std::vector<std::vector<Rational>> out;
    for (const auto& key : found_) {
      std::vector<Rational> y;
      for (const auto& [num, den] : key)
        y.emplace_back(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
      for (auto& v : y) v.canonicalize();
      out.push_back(std::move(y));
    }
    return out;
  }

 private:
  void descend(std::size_t next, int depth) {
    if (depth == n_) {
      leaf();
      return;
    }
    const std::size_t total = rows_.size();
    for (std::size_t r = next; r + (n_ - depth) <= total; ++r) {
      std::vector<Frac>& row = echelon_[depth];
      row = rows_[r];
      for (int k = 0; k < depth; ++k) {
        const Frac f = row[pivots_[k]];
        if (f.zero()) continue;
        for (int j = 0; j <= n_; ++j)
          if (!echelon_[k][j].zero()) row[j] = row[j] - f * echelon_[k][j];
      }
      int pivot = -1;
      for (int j = 0; j < n_ && pivot < 0; ++j)
        if (!row[j].zero()) pivot = j;
      if (pivot < 0) continue;  // dependent on the rows already chosen
      Frac p = row[pivot];
      for (int j = 0; j <= n_; ++j)
        if (!row[j].zero()) row[j] = row[j] / p;
      pivots_[depth] = pivot;
      descend(r + 1, depth + 1);
    }
  }

  void leaf() {
    std::vector<Frac> y(n_);
    for (int k = n_ - 1; k >= 0; --k) {
      Frac value = echelon_[k][n_];
      for (int l = k + 1; l < n_; ++l) {
        const Frac& a = echelon_[k][pivots_[l]];
        if (!a.zero()) value = value - a * y[pivots_[l]];
      }
      y[pivots_[k]] = value;
    }
    for (const Frac& v : y)
      if (v.negative()) return;
    const Frac one{1, 1};
    for (const Edge& e : g_.edges())
      if (y[e.u] + y[e.v] > one) return;
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    key.reserve(n_);
    for (const Frac& v : y) key.push_back(v.key());
    found_.insert(std::move(key));
  }

  const Graph& g_;
  int n_;
  std::vector<std::vector<Frac>> rows_;
  std::vector<std::vector<Frac>> echelon_;
  std::vector<int> pivots_;
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> found_;
};

}  // namespace

std::vector<std::vector<Rational>> brute_force_vertices(const Graph& g) {
  if (g.order() > 8) throw ResourceLimit("brute-force vertex enumeration limited to n <= 8");
  return BasisSearch(g).run();
}

}  // namespace iecp
