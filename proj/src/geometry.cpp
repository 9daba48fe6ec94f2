// SPDX-License-Identifier: Apache-2.0
#include "rpcc/geometry.hpp"

#include <cmath>

namespace rpcc {

namespace {
constexpr Scalar kFovToleranceDeg = 1e-9;
}

void SensorGeometry::validate() const {
  if (num_beams < 1) throw InvalidInput("geometry: num_beams must be >= 1");
  if (!(horizontal_resolution_deg > 0) || horizontal_resolution_deg > 360)
    throw InvalidInput("geometry: horizontal resolution must be in (0, 360]");
  if (!(phi_min_deg < phi_max_deg)) throw InvalidInput("geometry: phi_min must be < phi_max");
}

Spherical spherical_of(const Vec3& point) {
  const Scalar r = point.norm();
  if (!(r > 0)) throw InvalidInput("spherical_of: zero-norm point");
  Spherical s;
  s.r = r;
  s.theta_deg = rad2deg(std::atan2(point.y(), point.x()));
  s.phi_deg = rad2deg(std::asin(std::clamp(point.z() / r, -1.0, 1.0)));
  return s;
}

PixelCoord project(const Vec3& point, const SensorGeometry& geom) {
  const Spherical s = spherical_of(point);
  if (s.phi_deg < geom.phi_min_deg - kFovToleranceDeg ||
      s.phi_deg > geom.phi_max_deg + kFovToleranceDeg)
    throw OutOfFov("project: elevation outside vertical field of view");

  const int W = geom.width();
  Scalar theta = s.theta_deg;
  if (theta < 0) theta += 360.0;  // remap (-180, 180] to [0, 360)
  if (theta >= 360.0) theta -= 360.0;

  int col = static_cast<int>(round_half_away(theta / geom.horizontal_resolution_deg)) % W;
  if (col < 0) col += W;

  int row = static_cast<int>(round_half_away((s.phi_deg - geom.phi_min_deg) * geom.sigma()));
  row = std::clamp(row, 0, geom.num_beams - 1);

  return {row, col, s.r};
}

std::optional<PixelCoord> try_project(const Vec3& point, const SensorGeometry& geom) {
  if (!(point.norm() > 0) || !point.allFinite()) return std::nullopt;
  const Scalar phi = rad2deg(std::asin(std::clamp(point.z() / point.norm(), -1.0, 1.0)));
  if (phi < geom.phi_min_deg - kFovToleranceDeg || phi > geom.phi_max_deg + kFovToleranceDeg)
    return std::nullopt;
  return project(point, geom);
}

Vec3 ray_direction(int row, int col, const SensorGeometry& geom) {
  const Scalar theta = deg2rad(col * geom.horizontal_resolution_deg);
  const Scalar phi = deg2rad(geom.phi_min_deg + row / geom.sigma());
  const Scalar cp = std::cos(phi);
  return {cp * std::cos(theta), cp * std::sin(theta), std::sin(phi)};
}

Vec3 backproject(int row, int col, Scalar r_hat, const SensorGeometry& geom) {
  if (!(r_hat >= 0)) throw InvalidInput("backproject: negative range");
  return ray_direction(row, col, geom) * r_hat;
}

RayTable::RayTable(const SensorGeometry& geom) {
  const int H = geom.num_beams;
  const int W = geom.width();
  cos_phi.resize(H);
  sin_phi.resize(H);
  cos_theta.resize(W);
  sin_theta.resize(W);
  for (int row = 0; row < H; ++row) {
    const Scalar phi = deg2rad(geom.phi_min_deg + row / geom.sigma());
    cos_phi[row] = std::cos(phi);
    sin_phi[row] = std::sin(phi);
  }
  for (int col = 0; col < W; ++col) {
    const Scalar theta = deg2rad(col * geom.horizontal_resolution_deg);
    cos_theta[col] = std::cos(theta);
    sin_theta[col] = std::sin(theta);
  }
}

}  // namespace rpcc
