// SPDX-License-Identifier: Apache-2.0
#include "rpcc/range_image.hpp"

namespace rpcc {

ProjectionResult cloud_to_range_image(const PointList& points, const SensorGeometry& geom) {
  geom.validate();
  ProjectionResult out;
  out.image = RangeImage(geom);
  auto& img = out.image;
  for (const Vec3& p : points) {
    const auto px = try_project(p, geom);
    if (!px) {
      ++out.dropped_count;
      continue;
    }
    if (!img.valid(px->row, px->col)) {
      img.valid(px->row, px->col) = 1;
      img.depths(px->row, px->col) = px->range;
    } else {
      ++out.dropped_count;  // one of the two contenders is shadowed
      if (px->range < img.depths(px->row, px->col)) img.depths(px->row, px->col) = px->range;
    }
  }
  return out;
}

namespace {

void require_same_shape(const RangeImage& a, const RangeImage& b, const char* what) {
  if (a.geom != b.geom) throw InvalidInput(std::string(what) + ": geometry mismatch");
  if ((a.valid != b.valid).any()) throw InvalidInput(std::string(what) + ": validity mask mismatch");
}

}  // namespace

ResidualPlane subtract(const RangeImage& actual, const RangeImage& predicted) {
  require_same_shape(actual, predicted, "subtract");
  ResidualPlane res;
  res.values = DepthGrid::Zero(actual.rows(), actual.cols());
  for (int r = 0; r < actual.rows(); ++r)
    for (int c = 0; c < actual.cols(); ++c)
      if (actual.valid(r, c)) res.values(r, c) = actual.depths(r, c) - predicted.depths(r, c);
  return res;
}

RangeImage add_residual(const RangeImage& predicted, const ResidualPlane& residual,
                        ReconstructionStats* stats) {
  if (residual.values.rows() != predicted.depths.rows() ||
      residual.values.cols() != predicted.depths.cols())
    throw InvalidInput("add_residual: residual shape mismatch");
  RangeImage out(predicted.geom);
  out.valid = predicted.valid;
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) {
      if (!out.valid(r, c)) continue;
      Scalar v = predicted.depths(r, c) + residual.values(r, c);
      if (v < 0) {
        v = 0;
        if (stats) ++stats->negative_clamped;
      }
      out.depths(r, c) = v;
    }
  return out;
}

PointList to_point_cloud(const RangeImage& img) {
  PointList pts;
  pts.reserve(img.valid_count());
  const RayTable rays(img.geom);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      if (img.valid(r, c)) pts.push_back(rays.ray(r, c) * img.depths(r, c));
  return pts;
}

}  // namespace rpcc
