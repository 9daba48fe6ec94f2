// SPDX-License-Identifier: Apache-2.0
#include "rpcc/ground.hpp"

#include <algorithm>

namespace rpcc {

GroundResult extract_ground(const RangeImage& img, const GroundConfig& cfg) {
  GroundResult out;
  out.ground_mask = MaskGrid::Zero(img.rows(), img.cols());

  // Gather valid pixels as 3D points together with their grid position.
  const RayTable rays(img.geom);
  PointList pts;
  std::vector<std::pair<int, int>> pix;
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      if (img.valid(r, c)) {
        pts.push_back(rays.ray(r, c) * img.depths(r, c));
        pix.emplace_back(r, c);
      }
  if (pts.size() < 3) return out;

  Scalar z_cand;
  if (cfg.z_candidate_max) {
    z_cand = *cfg.z_candidate_max;
  } else {
    std::vector<Scalar> zs(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) zs[i] = pts[i].z();
    const std::size_t k = std::min<std::size_t>(
        zs.size() - 1,
        static_cast<std::size_t>(zs.size() * cfg.z_candidate_percentile / 100.0));
    std::nth_element(zs.begin(), zs.begin() + static_cast<std::ptrdiff_t>(k), zs.end());
    z_cand = zs[k];
  }

  PointList candidates;
  std::vector<std::size_t> cand_index;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].z() <= z_cand) {
      candidates.push_back(pts[i]);
      cand_index.push_back(i);
    }
  if (candidates.size() < 3) return out;

  const auto plane = ransac_plane(candidates, cfg.ransac);
  if (!plane) return out;

  out.plane = *plane;
  if (out.plane.c < 0) {  // orient the normal upward
    out.plane.a = -out.plane.a;
    out.plane.b = -out.plane.b;
    out.plane.c = -out.plane.c;
    out.plane.d = -out.plane.d;
  }

  std::size_t inliers = 0;
  for (std::size_t j = 0; j < candidates.size(); ++j)
    if (out.plane.distance(candidates[j]) <= cfg.ransac.inlier_threshold) {
      const auto [r, c] = pix[cand_index[j]];
      out.ground_mask(r, c) = 1;
      ++inliers;
    }
  out.has_ground = inliers >= 3;
  if (!out.has_ground) out.ground_mask.setZero();
  return out;
}

}  // namespace rpcc
