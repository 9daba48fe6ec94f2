// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_SEGMENTATION_HPP
#define RPCC_SEGMENTATION_HPP

#include "rpcc/range_image.hpp"
#include "rpcc/types.hpp"

namespace rpcc {

/// Label grid partitioning valid pixels: 0 = ground, 1..K = regions,
/// kUnlabeled on invalid pixels.
inline constexpr std::int32_t kUnlabeled = -1;
inline constexpr std::int32_t kGroundLabel = 0;

struct ClusterAssignment {
  LabelGrid labels;
  PointList centers;  // K region centers; label k maps to centers[k - 1]

  int cluster_count() const { return static_cast<int>(centers.size()); }
};

/// Greedy farthest point sampling: start at seed_index, then repeatedly add
/// the point with maximal distance to the chosen set (ties keep the lowest
/// input index). Throws InvalidInput unless 1 <= k <= |points|.
PointList fps_centers(const PointList& points, int k, std::size_t seed_index);

/// Index of the point nearest the origin (ties keep the lowest index); the
/// deterministic FPS seed.
std::size_t nearest_origin_index(const PointList& points);

/// Nearest-center label for one point: 1-based center index, Euclidean
/// metric, ties keep the lowest center index.
std::int32_t nearest_center_label(const Vec3& p, const PointList& centers);

/// Label every valid non-ground pixel by its nearest center; ground pixels
/// keep label 0, invalid pixels stay kUnlabeled.
ClusterAssignment assign_pixels(const RangeImage& img, const MaskGrid& ground_mask,
                                const PointList& centers);

/// FPS centers + assign_pixels. FPS runs on a deterministic stride
/// subsample capped at `fps_sample_cap` points.
ClusterAssignment segment_fps(const RangeImage& img, const MaskGrid& ground_mask, int k,
                              std::size_t fps_sample_cap = 20000);

struct DbscanConfig {
  Scalar eps = 2.0;
  int min_pts = 10;
};

/// Density-based baseline. Clusters are numbered by discovery order over
/// input-ordered points; noise points become singleton clusters so the
/// modeling path needs no special case. Ablation only.
ClusterAssignment segment_dbscan(const RangeImage& img, const MaskGrid& ground_mask,
                                 const DbscanConfig& cfg);

/// Raw DBSCAN labels (0-based cluster ids, -1 noise) for a free point list.
std::vector<std::int32_t> dbscan_labels(const PointList& points, Scalar eps, int min_pts);

}  // namespace rpcc

#endif
