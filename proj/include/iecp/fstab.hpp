#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iecp/graph.hpp"
#include "iecp/stable_sets.hpp"

namespace iecp {

/// Vertex of the fractional stable set polytope {y >= 0, y_i + y_j <= 1 on edges},
/// stored by the positions of its 1, 0 and 1/2 entries.
struct FstabVertex {
  VertexSet ones;
  VertexSet zeros;
  VertexSet halves;

  bool operator==(const FstabVertex&) const = default;
  /// y as exact rationals.
  std::vector<Rational> values(int n) const;
  /// "0 1/2 1 ..."
  std::string to_string(int n) const;
};

/// Generator of the cone {x : x_i + x_j <= 0 on edges}: x = 2y - 1 for a
/// polytope vertex y, so entries are +1 (ones), -1 (zeros) and 0 (halves).
struct ExtremeRay {
  VertexSet plus;
  VertexSet minus;
  VertexSet zero;

  std::vector<int> values(int n) const;
  std::string to_string(int n) const;
};

/// Which part of the Farkas system a ray belongs to: no +1 entries (A), no
/// 0 entries (B), or both signs plus zeros (C). The all-(-1) ray is class A.
enum class RayClass { A, B, C };

const char* to_string(RayClass k);
RayClass classify_ray(const ExtremeRay& ray);

/// All polytope vertices from the half-integral characterisation: ones form a
/// stable set S, zeros contain N(S), and every component induced by the
/// halves contains an odd cycle. Order: by ones-set (empty first, then
/// enumeration order), then by halves bitmask.
std::vector<FstabVertex> enumerate_fstab_vertices(const Graph& g,
                                                  int bound = kDefaultEnumerationBound);

/// Images x = 2y - 1 of the vertices, omitting the null vector.
std::vector<ExtremeRay> extreme_rays(const Graph& g, int bound = kDefaultEnumerationBound);

/// q_j = c_j^2 - eps * sum_{i in N(j)} c_i c_j.
std::vector<Rational> farkas_rhs(const Graph& g, const CentralityTarget& c, const Rational& eps);

/// q^T x for a ray.
Rational ray_product(const std::vector<Rational>& q, const ExtremeRay& ray);

struct RayViolation {
  ExtremeRay ray;
  RayClass cls = RayClass::A;
  Rational product;
};

struct FarkasScan {
  bool pass = true;
  std::size_t rays_checked = 0;
  /// First failing ray in canonical ray order.
  std::optional<RayViolation> first_failure;
  /// Every failing ray (full mode only).
  std::vector<RayViolation> failures;
};

/// Checks q^T v <= 0 for every extreme ray v. The weight system at shift eps
/// is solvable iff this passes. Rays are checked in parallel; the reported
/// failure is the first in canonical order.
FarkasScan farkas_scan(const Graph& g, const CentralityTarget& c, const Rational& eps,
                       bool full = false, int bound = kDefaultEnumerationBound);

/// Sequential reference for farkas_scan.
FarkasScan farkas_scan_serial(const Graph& g, const CentralityTarget& c, const Rational& eps,
                              bool full = false, int bound = kDefaultEnumerationBound);

/// Test oracle: every basic feasible solution of {y >= 0, y_i + y_j <= 1}
/// found by solving each n x n subsystem of constraints at equality. Makes no
/// use of half-integrality. Throws ResourceLimit for n > 8.
std::vector<std::vector<Rational>> brute_force_vertices(const Graph& g);

}  // namespace iecp
