// SPDX-License-Identifier: Apache-2.0
#include "rpcc/plane.hpp"

#include <Eigen/Eigenvalues>

#include "rpcc/errors.hpp"
#include "rpcc/rng.hpp"

namespace rpcc {

namespace {

PlaneModel from_normal_point(Vec3 n, const Vec3& p) {
  n.normalize();
  return {n.x(), n.y(), n.z(), -n.dot(p)};
}

}  // namespace

std::optional<PlaneModel> plane_from_three(const Vec3& p0, const Vec3& p1, const Vec3& p2) {
  const Vec3 n = (p1 - p0).cross(p2 - p0);
  const Scalar scale = std::max({(p1 - p0).norm(), (p2 - p0).norm(), Scalar(1e-12)});
  if (n.norm() < 1e-9 * scale * scale) return std::nullopt;
  return from_normal_point(n, p0);
}

std::optional<PlaneModel> fit_plane_least_squares(std::span<const Vec3> points) {
  if (points.size() < 3) return std::nullopt;
  Vec3 centroid = Vec3::Zero();
  for (const Vec3& p : points) centroid += p;
  centroid /= static_cast<Scalar>(points.size());

  Mat3 cov = Mat3::Zero();
  for (const Vec3& p : points) {
    const Vec3 q = p - centroid;
    cov += q * q.transpose();
  }

  Eigen::SelfAdjointEigenSolver<Mat3> solver(cov);
  if (solver.info() != Eigen::Success) return std::nullopt;
  // Smallest eigenvalue first in Eigen's ordering.
  const Vec3 n = solver.eigenvectors().col(0);
  // Rank check: two near-zero eigenvalues mean the points are collinear.
  const Scalar mid = solver.eigenvalues()(1);
  const Scalar top = solver.eigenvalues()(2);
  if (top <= 0 || mid <= 1e-12 * top) return std::nullopt;
  return from_normal_point(n, centroid);
}

std::optional<PlaneModel> ransac_plane(std::span<const Vec3> points, const RansacConfig& cfg) {
  if (points.size() < 3) throw InvalidInput("ransac_plane: need at least 3 points");
  if (cfg.iterations < 1) throw InvalidInput("ransac_plane: iterations must be >= 1");
  if (!(cfg.inlier_threshold > 0)) throw InvalidInput("ransac_plane: threshold must be > 0");

  Rng rng(cfg.seed);
  const std::size_t n = points.size();

  std::optional<PlaneModel> best;
  std::size_t best_inliers = 0;

  for (int iter = 0; iter < cfg.iterations; ++iter) {
    const std::size_t i0 = rng.index(n);
    std::size_t i1 = rng.index(n);
    while (i1 == i0) i1 = rng.index(n);
    std::size_t i2 = rng.index(n);
    while (i2 == i0 || i2 == i1) i2 = rng.index(n);
    const auto cand = plane_from_three(points[i0], points[i1], points[i2]);
    if (!cand) continue;

    std::size_t inliers = 0;
    for (const Vec3& p : points)
      if (cand->distance(p) <= cfg.inlier_threshold) ++inliers;

    if (inliers > best_inliers) {  // ties keep the earlier iteration
      best_inliers = inliers;
      best = cand;
    }
  }
  if (!best) return std::nullopt;

  // Refit over the selected inliers; keep the RANSAC plane if the refit
  // degenerates or the inlier set is too small.
  PointList inlier_pts;
  inlier_pts.reserve(best_inliers);
  for (const Vec3& p : points)
    if (best->distance(p) <= cfg.inlier_threshold) inlier_pts.push_back(p);
  if (inlier_pts.size() >= 3) {
    if (auto refit = fit_plane_least_squares(inlier_pts)) return refit;
  }
  return best;
}

}  // namespace rpcc
