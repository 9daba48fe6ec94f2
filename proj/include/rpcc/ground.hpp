// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_GROUND_HPP
#define RPCC_GROUND_HPP

#include <optional>

#include "rpcc/plane.hpp"
#include "rpcc/range_image.hpp"

namespace rpcc {

struct GroundConfig {
  RansacConfig ransac{100, 0.15, 0};
  /// Candidate pre-filter: points with z at or below this percentile of the
  /// frame's z values may vote for the ground plane. Keeps walls from
  /// hijacking the fit.
  Scalar z_candidate_percentile = 25.0;
  /// When set, an absolute ceiling (e.g. minus the mounting height) replaces
  /// the percentile rule.
  std::optional<Scalar> z_candidate_max;
};

struct GroundResult {
  bool has_ground = false;
  PlaneModel plane;   // unit normal, oriented with c >= 0
  MaskGrid ground_mask;  // subset of the valid mask
};

/// RANSAC ground plane over low-z candidate pixels, least-squares refit,
/// ground_mask = candidate inliers of the refit plane. Fewer than 3
/// candidates yields a no-ground result rather than an error.
GroundResult extract_ground(const RangeImage& img, const GroundConfig& cfg);

}  // namespace rpcc

#endif
