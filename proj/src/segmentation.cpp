// SPDX-License-Identifier: Apache-2.0
#include "rpcc/segmentation.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "rpcc/errors.hpp"

namespace rpcc {

std::size_t nearest_origin_index(const PointList& points) {
  if (points.empty()) throw InvalidInput("nearest_origin_index: empty point list");
  std::size_t best = 0;
  Scalar best_sq = points[0].squaredNorm();
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Scalar d = points[i].squaredNorm();
    if (d < best_sq) {
      best_sq = d;
      best = i;
    }
  }
  return best;
}

PointList fps_centers(const PointList& points, int k, std::size_t seed_index) {
  const std::size_t n = points.size();
  if (k < 1 || static_cast<std::size_t>(k) > n)
    throw InvalidInput("fps_centers: k must satisfy 1 <= k <= |points|");
  if (seed_index >= n) throw InvalidInput("fps_centers: seed_index out of range");

  PointList centers;
  centers.reserve(static_cast<std::size_t>(k));
  centers.push_back(points[seed_index]);

  std::vector<Scalar> min_sq(n);
  for (std::size_t i = 0; i < n; ++i) min_sq[i] = (points[i] - points[seed_index]).squaredNorm();

  for (int c = 1; c < k; ++c) {
    std::size_t far = 0;
    Scalar far_sq = -1;
    for (std::size_t i = 0; i < n; ++i)
      if (min_sq[i] > far_sq) {  // strict: ties keep the lowest index
        far_sq = min_sq[i];
        far = i;
      }
    centers.push_back(points[far]);
    for (std::size_t i = 0; i < n; ++i)
      min_sq[i] = std::min(min_sq[i], (points[i] - points[far]).squaredNorm());
  }
  return centers;
}

std::int32_t nearest_center_label(const Vec3& p, const PointList& centers) {
  if (centers.empty()) throw InvalidInput("nearest_center_label: no centers");
  std::size_t best = 0;
  Scalar best_sq = (p - centers[0]).squaredNorm();
  for (std::size_t i = 1; i < centers.size(); ++i) {
    const Scalar d = (p - centers[i]).squaredNorm();
    if (d < best_sq) {
      best_sq = d;
      best = i;
    }
  }
  return static_cast<std::int32_t>(best) + 1;
}

ClusterAssignment assign_pixels(const RangeImage& img, const MaskGrid& ground_mask,
                                const PointList& centers) {
  ClusterAssignment out;
  out.labels = LabelGrid::Constant(img.rows(), img.cols(), kUnlabeled);
  out.centers = centers;
  const RayTable rays(img.geom);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c) {
      if (!img.valid(r, c)) continue;
      if (ground_mask(r, c)) {
        out.labels(r, c) = kGroundLabel;
      } else {
        out.labels(r, c) = nearest_center_label(rays.ray(r, c) * img.depths(r, c), centers);
      }
    }
  return out;
}

namespace {

PointList gather_nonground(const RangeImage& img, const MaskGrid& ground_mask) {
  PointList pts;
  const RayTable rays(img.geom);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      if (img.valid(r, c) && !ground_mask(r, c)) pts.push_back(rays.ray(r, c) * img.depths(r, c));
  return pts;
}

}  // namespace

ClusterAssignment segment_fps(const RangeImage& img, const MaskGrid& ground_mask, int k,
                              std::size_t fps_sample_cap) {
  const PointList pts = gather_nonground(img, ground_mask);
  if (pts.empty()) return assign_pixels(img, ground_mask, {});

  // Deterministic stride subsample for the O(nk) FPS pass; assignment still
  // covers every point.
  PointList sample;
  if (pts.size() > fps_sample_cap) {
    const std::size_t stride = (pts.size() + fps_sample_cap - 1) / fps_sample_cap;
    for (std::size_t i = 0; i < pts.size(); i += stride) sample.push_back(pts[i]);
  } else {
    sample = pts;
  }

  const int k_eff = std::min<int>(k, static_cast<int>(sample.size()));
  const PointList centers = fps_centers(sample, k_eff, nearest_origin_index(sample));
  return assign_pixels(img, ground_mask, centers);
}

// --- DBSCAN baseline ------------------------------------------------------

namespace {

/// eps-cell spatial hash. Hash collisions merge cell lists, which only adds
/// distance-filtered extra work, never wrong neighbors.
class CellIndex {
 public:
  CellIndex(const PointList& pts, Scalar eps) : pts_(pts), inv_eps_(1.0 / eps) {
    for (std::size_t i = 0; i < pts.size(); ++i) cells_[key_of(pts[i])].push_back(i);
  }

  /// Indices with dist <= eps, sorted ascending, including `i` itself.
  std::vector<std::size_t> neighbors(std::size_t i, Scalar eps) const {
    const Vec3& p = pts_[i];
    const Scalar eps_sq = eps * eps;
    std::vector<std::size_t> out;
    const auto [cx, cy, cz] = cell_of(p);
    for (int dx = -1; dx <= 1; ++dx)
      for (int dy = -1; dy <= 1; ++dy)
        for (int dz = -1; dz <= 1; ++dz) {
          const auto it = cells_.find(pack(cx + dx, cy + dy, cz + dz));
          if (it == cells_.end()) continue;
          for (std::size_t j : it->second)
            if ((pts_[j] - p).squaredNorm() <= eps_sq) out.push_back(j);
        }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::tuple<int, int, int> cell_of(const Vec3& p) const {
    return {static_cast<int>(std::floor(p.x() * inv_eps_)),
            static_cast<int>(std::floor(p.y() * inv_eps_)),
            static_cast<int>(std::floor(p.z() * inv_eps_))};
  }

  static std::uint64_t pack(int x, int y, int z) {
    const auto m = [](int v) { return static_cast<std::uint64_t>(static_cast<std::uint32_t>(v)) & 0x1FFFFFull; };
    return m(x) << 42 | m(y) << 21 | m(z);
  }

  std::uint64_t key_of(const Vec3& p) const {
    const auto [x, y, z] = cell_of(p);
    return pack(x, y, z);
  }

  const PointList& pts_;
  Scalar inv_eps_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
};

constexpr std::int32_t kUndefined = -2;
constexpr std::int32_t kNoise = -1;

}  // namespace

std::vector<std::int32_t> dbscan_labels(const PointList& points, Scalar eps, int min_pts) {
  if (!(eps > 0)) throw InvalidInput("dbscan: eps must be > 0");
  if (min_pts < 1) throw InvalidInput("dbscan: min_pts must be >= 1");

  std::vector<std::int32_t> label(points.size(), kUndefined);
  const CellIndex index(points, eps);
  std::int32_t next_cluster = 0;

  for (std::size_t i = 0; i < points.size(); ++i) {
    if (label[i] != kUndefined) continue;
    auto seeds = index.neighbors(i, eps);
    if (seeds.size() < static_cast<std::size_t>(min_pts)) {
      label[i] = kNoise;
      continue;
    }
    const std::int32_t cid = next_cluster++;
    label[i] = cid;
    std::deque<std::size_t> queue(seeds.begin(), seeds.end());
    while (!queue.empty()) {
      const std::size_t j = queue.front();
      queue.pop_front();
      if (label[j] == kNoise) label[j] = cid;  // border point claimed
      if (label[j] != kUndefined) continue;
      label[j] = cid;
      auto nj = index.neighbors(j, eps);
      if (nj.size() >= static_cast<std::size_t>(min_pts))
        queue.insert(queue.end(), nj.begin(), nj.end());
    }
  }
  return label;
}

ClusterAssignment segment_dbscan(const RangeImage& img, const MaskGrid& ground_mask,
                                 const DbscanConfig& cfg) {
  PointList pts;
  std::vector<std::pair<int, int>> pix;
  const RayTable rays(img.geom);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      if (img.valid(r, c) && !ground_mask(r, c)) {
        pts.push_back(rays.ray(r, c) * img.depths(r, c));
        pix.emplace_back(r, c);
      }

  ClusterAssignment out;
  out.labels = LabelGrid::Constant(img.rows(), img.cols(), kUnlabeled);
  for (int r = 0; r < img.rows(); ++r)
    for (int c = 0; c < img.cols(); ++c)
      if (img.valid(r, c) && ground_mask(r, c)) out.labels(r, c) = kGroundLabel;
  if (pts.empty()) return out;

  auto raw = dbscan_labels(pts, cfg.eps, cfg.min_pts);

  // Clusters 1..m in discovery order, then noise points as singletons.
  std::int32_t m = 0;
  for (auto l : raw) m = std::max(m, l + 1);
  std::int32_t next = m;
  std::vector<std::int32_t> final(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    final[i] = raw[i] >= 0 ? raw[i] + 1 : ++next;

  const std::int32_t total = next;
  out.centers.assign(static_cast<std::size_t>(total), Vec3::Zero());
  std::vector<std::size_t> counts(static_cast<std::size_t>(total), 0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out.labels(pix[i].first, pix[i].second) = final[i];
    out.centers[static_cast<std::size_t>(final[i] - 1)] += pts[i];
    ++counts[static_cast<std::size_t>(final[i] - 1)];
  }
  for (std::size_t k = 0; k < out.centers.size(); ++k)
    out.centers[k] /= static_cast<Scalar>(counts[k]);
  return out;
}

}  // namespace rpcc
