// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_PLANE_HPP
#define RPCC_PLANE_HPP

#include <optional>
#include <span>

#include "rpcc/types.hpp"

namespace rpcc {

/// a*x + b*y + c*z + d = 0 with unit normal (a, b, c).
struct PlaneModel {
  Scalar a = 0, b = 0, c = 1, d = 0;

  Vec3 normal() const { return {a, b, c}; }
  Scalar distance(const Vec3& p) const { return std::abs(signed_distance(p)); }
  Scalar signed_distance(const Vec3& p) const { return a * p.x() + b * p.y() + c * p.z() + d; }
};

struct RansacConfig {
  int iterations = 100;
  Scalar inlier_threshold = 0.15;  // meters
  std::uint64_t seed = 0;
};

/// Exact plane through three points; nullopt when they are (near) collinear.
std::optional<PlaneModel> plane_from_three(const Vec3& p0, const Vec3& p1, const Vec3& p2);

/// Orthogonal least-squares fit (centroid + smallest covariance eigenvector).
/// nullopt when points are degenerate (fewer than 3, or rank-deficient).
std::optional<PlaneModel> fit_plane_least_squares(std::span<const Vec3> points);

/// RANSAC with deterministic sampling followed by a least-squares refit over
/// the winning inlier set. Ties on inlier count keep the earliest iteration.
/// nullopt when every iteration drew a degenerate sample.
std::optional<PlaneModel> ransac_plane(std::span<const Vec3> points, const RansacConfig& cfg);

}  // namespace rpcc

#endif
