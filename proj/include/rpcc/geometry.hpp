// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_GEOMETRY_HPP
#define RPCC_GEOMETRY_HPP

#include <optional>

#include "rpcc/errors.hpp"
#include "rpcc/types.hpp"

namespace rpcc {

/// Spinning-sensor layout: H beams spread over [phi_min, phi_max] vertically,
/// full 360 degree sweep at `horizontal_resolution_deg` per column.
struct SensorGeometry {
  int num_beams = 64;                      // H
  Scalar horizontal_resolution_deg = 0.18; // rho
  Scalar phi_min_deg = -24.8;
  Scalar phi_max_deg = 2.0;

  /// W = round(360 / rho).
  int width() const {
    return static_cast<int>(round_half_away(360.0 / horizontal_resolution_deg));
  }

  /// Vertical bins per degree: H / (phi_max - phi_min).
  Scalar sigma() const { return num_beams / (phi_max_deg - phi_min_deg); }

  void validate() const;

  bool operator==(const SensorGeometry&) const = default;
};

struct PixelCoord {
  int row = 0;     // w: vertical index in [0, H)
  int col = 0;     // h: horizontal index in [0, W)
  Scalar range = 0;  // r: meters
};

struct Spherical {
  Scalar r = 0;          // meters
  Scalar theta_deg = 0;  // azimuth in (-180, 180]
  Scalar phi_deg = 0;    // elevation in [-90, 90]
};

/// r = |P|, theta = atan2(y, x), phi = asin(z / r).
/// Throws InvalidInput on a zero-norm point.
Spherical spherical_of(const Vec3& point);

/// Bin a point into the range image. Throws InvalidInput on a zero-norm
/// point and OutOfFov when phi falls outside [phi_min, phi_max] beyond
/// tolerance. The top half-bin clamps into row H-1.
PixelCoord project(const Vec3& point, const SensorGeometry& geom);

/// project() that reports out-of-FOV / degenerate points as nullopt.
std::optional<PixelCoord> try_project(const Vec3& point, const SensorGeometry& geom);

/// Unit viewing ray of a pixel's bin center.
Vec3 ray_direction(int row, int col, const SensorGeometry& geom);

/// P = (cos phi * cos theta, cos phi * sin theta, sin phi) * r_hat at the
/// bin center angles. Exact inverse of project's binning.
Vec3 backproject(int row, int col, Scalar r_hat, const SensorGeometry& geom);

/// Per-row / per-column bin-center trig, shared by prediction and
/// reconstruction so both sides evaluate identical values.
struct RayTable {
  std::vector<Scalar> cos_phi, sin_phi;  // size H
  std::vector<Scalar> cos_theta, sin_theta;  // size W

  explicit RayTable(const SensorGeometry& geom);

  Vec3 ray(int row, int col) const {
    return {cos_phi[row] * cos_theta[col], cos_phi[row] * sin_theta[col], sin_phi[row]};
  }
};

}  // namespace rpcc

#endif
