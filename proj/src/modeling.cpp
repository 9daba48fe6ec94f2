// SPDX-License-Identifier: Apache-2.0
#include "rpcc/modeling.hpp"

#include <cmath>

#include "rpcc/errors.hpp"

namespace rpcc {

namespace {
// Ray-plane intersections beyond this are treated as misses; keeps integer
// residual codes bounded for near-parallel rays that survive the incidence
// test.
constexpr Scalar kMaxPredictedRange = 1e5;
constexpr Scalar kMinDenominator = 1e-12;
}  // namespace

ClusterModel fit_point_model(std::span<const Vec3> points) {
  if (points.empty()) throw InvalidInput("fit_point_model: empty cluster");
  Scalar sum = 0;
  for (const Vec3& p : points) sum += p.norm();
  ClusterModel m;
  m.tag = ModelTag::Point;
  m.point_r = sum / static_cast<Scalar>(points.size());
  return m;
}

std::optional<PlaneModel> fit_plane_model(std::span<const Vec3> points, const RansacConfig& cfg) {
  if (points.size() < 3) throw InvalidInput("fit_plane_model: need at least 3 points");
  return ransac_plane(points, cfg);
}

Scalar max_incidence_deg(std::span<const Vec3> points, const PlaneModel& plane) {
  const Vec3 n = plane.normal();
  Scalar worst = 0;
  for (const Vec3& p : points) {
    const Scalar r = p.norm();
    if (!(r > 0)) continue;
    const Scalar cos_angle = std::clamp(std::abs(p.dot(n)) / r, Scalar(0), Scalar(1));
    worst = std::max(worst, rad2deg(std::acos(cos_angle)));
  }
  return worst;
}

ClusterModel select_model(std::span<const Vec3> points, const ModelingConfig& cfg) {
  ClusterModel point_model = fit_point_model(points);
  if (!cfg.plane_enabled || static_cast<int>(points.size()) < cfg.min_plane_points)
    return point_model;

  const auto plane = fit_plane_model(points, cfg.ransac);
  if (!plane) return point_model;
  if (max_incidence_deg(points, *plane) > cfg.max_incidence_deg) return point_model;

  ClusterModel m = point_model;  // keeps point_r as the fallback value
  m.tag = ModelTag::Plane;
  m.plane = *plane;
  return m;
}

std::optional<Scalar> plane_range_along_ray(const PlaneModel& plane, const Vec3& ray) {
  const Scalar denom = plane.a * ray.x() + plane.b * ray.y() + plane.c * ray.z();
  if (std::abs(denom) < kMinDenominator) return std::nullopt;
  const Scalar r_hat = -plane.d / denom;
  if (!std::isfinite(r_hat) || r_hat <= 0 || r_hat > kMaxPredictedRange) return std::nullopt;
  return r_hat;
}

RangeImage predict(const SensorGeometry& geom, const ClusterAssignment& assignment,
                   const MaskGrid& valid, std::span<ClusterModel> models) {
  RangeImage out(geom);
  out.valid = valid;
  const RayTable rays(geom);
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) {
      if (!valid(r, c)) continue;
      const std::int32_t label = assignment.labels(r, c);
      if (label < 0 || static_cast<std::size_t>(label) >= models.size())
        throw InvalidInput("predict: pixel with no model");
      ClusterModel& m = models[static_cast<std::size_t>(label)];
      Scalar r_hat = m.point_r;
      if (m.tag == ModelTag::Plane) {
        if (const auto hit = plane_range_along_ray(m.plane, rays.ray(r, c)))
          r_hat = *hit;
        else
          m.fallback_used = true;
      }
      out.depths(r, c) = r_hat;
    }
  return out;
}

}  // namespace rpcc
