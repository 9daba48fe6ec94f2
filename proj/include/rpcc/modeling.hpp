// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_MODELING_HPP
#define RPCC_MODELING_HPP

#include <optional>
#include <span>

#include "rpcc/plane.hpp"
#include "rpcc/range_image.hpp"
#include "rpcc/segmentation.hpp"

namespace rpcc {

enum class ModelTag : std::uint8_t { Point = 0, Plane = 1 };

/// Per-cluster intra-prediction model. Plane models always carry the point
/// value too: it is the prediction fallback where the cluster's plane fails
/// to intersect a pixel's ray.
struct ClusterModel {
  ModelTag tag = ModelTag::Point;
  Scalar point_r = 0;   // mean range; the Point prediction and Plane fallback
  PlaneModel plane;     // Plane models only
  bool fallback_used = false;  // set by predict() when any pixel fell back
};

struct ModelingConfig {
  bool plane_enabled = true;       // false = point-only ablation
  int min_plane_points = 30;       // below this, always the point model
  Scalar max_incidence_deg = 75.0; // reject planes seen at grazing incidence
  RansacConfig ransac{50, 0.05, 0};
};

/// point_r = mean of |P_i| over the cluster. Throws InvalidInput when empty.
ClusterModel fit_point_model(std::span<const Vec3> points);

/// RANSAC plane with least-squares refit; nullopt when all samples were
/// degenerate. Throws InvalidInput with fewer than 3 points.
std::optional<PlaneModel> fit_plane_model(std::span<const Vec3> points, const RansacConfig& cfg);

/// Largest angle between any point's viewing ray and the plane normal, in
/// degrees (optics convention: 0 = head-on, 90 = grazing).
Scalar max_incidence_deg(std::span<const Vec3> points, const PlaneModel& plane);

/// Point model when the cluster is small, the plane fit is rejected, or the
/// worst incidence angle exceeds the threshold; plane model otherwise.
ClusterModel select_model(std::span<const Vec3> points, const ModelingConfig& cfg);

/// Intra-predicted range image. models[0] belongs to the ground cluster
/// (label 0) and models[1..K] to the regions. Pixels whose plane prediction
/// is non-positive, non-finite or absurdly far fall back to the cluster's
/// point value and set that cluster's fallback flag.
RangeImage predict(const SensorGeometry& geom, const ClusterAssignment& assignment,
                   const MaskGrid& valid, std::span<ClusterModel> models);

/// Plane prediction along one ray (Eq. of the ray-plane intersection):
/// r_hat = -d / (a cos(phi) cos(theta) + b cos(phi) sin(theta) + c sin(phi)).
/// Returns nullopt where the fallback rule applies.
std::optional<Scalar> plane_range_along_ray(const PlaneModel& plane, const Vec3& ray);

}  // namespace rpcc

#endif
