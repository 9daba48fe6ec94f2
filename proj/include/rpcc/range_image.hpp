// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_RANGE_IMAGE_HPP
#define RPCC_RANGE_IMAGE_HPP

#include "rpcc/geometry.hpp"
#include "rpcc/types.hpp"

namespace rpcc {

/// Sentinel stored in depths at invalid pixels. The validity mask is
/// authoritative; the sentinel only makes dumps readable.
inline constexpr Scalar kInvalidDepth = -1.0;

/// H x W grid of radial depths with a validity bitmask.
struct RangeImage {
  SensorGeometry geom;
  DepthGrid depths;  // meters; kInvalidDepth where not valid
  MaskGrid valid;    // 0 / 1

  RangeImage() = default;
  explicit RangeImage(const SensorGeometry& g)
      : geom(g),
        depths(DepthGrid::Constant(g.num_beams, g.width(), kInvalidDepth)),
        valid(MaskGrid::Zero(g.num_beams, g.width())) {}

  int rows() const { return static_cast<int>(depths.rows()); }
  int cols() const { return static_cast<int>(depths.cols()); }

  std::size_t valid_count() const {
    std::size_t n = 0;
    for (Eigen::Index i = 0; i < valid.size(); ++i) n += valid.data()[i] != 0;
    return n;
  }
};

/// Per-pixel residual (actual minus predicted), defined on valid pixels.
struct ResidualPlane {
  DepthGrid values;
};

struct ProjectionResult {
  RangeImage image;
  std::size_t dropped_count = 0;  // out-of-FOV, degenerate and shadowed points
};

/// Bin every point; pixel collisions keep the nearest point, losers are
/// counted as dropped.
ProjectionResult cloud_to_range_image(const PointList& points, const SensorGeometry& geom);

/// Element-wise actual - predicted on valid pixels. Throws InvalidInput on
/// geometry or mask mismatch.
ResidualPlane subtract(const RangeImage& actual, const RangeImage& predicted);

struct ReconstructionStats {
  std::size_t negative_clamped = 0;
};

/// Inverse of subtract; negative reconstructed ranges clamp to zero and are
/// counted rather than rejected.
RangeImage add_residual(const RangeImage& predicted, const ResidualPlane& residual,
                        ReconstructionStats* stats = nullptr);

/// One point per valid pixel, row-major order.
PointList to_point_cloud(const RangeImage& img);

}  // namespace rpcc

#endif
