// SPDX-License-Identifier: Apache-2.0
#ifndef RPCC_TYPES_HPP
#define RPCC_TYPES_HPP

#include <Eigen/Core>

#include <cstdint>
#include <vector>

namespace rpcc {

using Scalar = double;

using Vec3 = Eigen::Vector3<Scalar>;
using Vec4 = Eigen::Vector4<Scalar>;
using Mat3 = Eigen::Matrix3<Scalar>;

// Grids are row-major so that row-major pixel traversal is contiguous.
using DepthGrid = Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MaskGrid  = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using LabelGrid = Eigen::Array<std::int32_t, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

using PointList = std::vector<Vec3>;

inline constexpr Scalar kPi = 3.14159265358979323846;

inline Scalar deg2rad(Scalar d) { return d * (kPi / 180.0); }
inline Scalar rad2deg(Scalar r) { return r * (180.0 / kPi); }

/// Rounding used everywhere a real value becomes a bin index or an integer
/// code: round half away from zero. Encode and decode share this rule.
inline long long round_half_away(Scalar v) { return std::llround(v); }

}  // namespace rpcc

#endif
