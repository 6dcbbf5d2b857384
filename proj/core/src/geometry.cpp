#include "lmc/geometry.hpp"

#include <cmath>
#include <string>

#include "lmc/errors.hpp"

namespace lmc {

Point2 SimilarityTransform::apply(Point2 p) const {
  return apply_linear(p) + translation;
}

Point2 SimilarityTransform::apply_linear(Point2 p) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return {scale * (c * p.x - s * p.y), scale * (s * p.x + c * p.y)};
}

SimilarityTransform SimilarityTransform::inverse() const {
  SimilarityTransform inv;
  inv.scale = 1.0 / scale;
  inv.rotation = -rotation;
  const double c = std::cos(-rotation);
  const double s = std::sin(-rotation);
  inv.translation = {-inv.scale * (c * translation.x - s * translation.y),
                     -inv.scale * (s * translation.x + c * translation.y)};
  return inv;
}

bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

bool is_finite(const Shape& shape) {
  for (const Point2& p : shape)
    if (!is_finite(p)) return false;
  return true;
}

static void require_valid_box(const BBox& box) {
  if (!(box.w > 0.0) || !(box.h > 0.0))
    throw DataError("bounding box must have positive width and height");
}

Shape normalize_shape(const Shape& shape, const BBox& box) {
  require_valid_box(box);
  Shape out;
  out.points.reserve(shape.size());
  for (const Point2& p : shape) {
    if (!is_finite(p)) throw DataError("normalize_shape: non-finite landmark");
    out.points.push_back({(p.x - box.x) / box.w, (p.y - box.y) / box.h});
  }
  return out;
}

Shape denormalize_shape(const Shape& shape, const BBox& box) {
  require_valid_box(box);
  Shape out;
  out.points.reserve(shape.size());
  for (const Point2& p : shape) {
    if (!is_finite(p)) throw DataError("denormalize_shape: non-finite landmark");
    out.points.push_back({box.x + p.x * box.w, box.y + p.y * box.h});
  }
  return out;
}

Shape mean_shape(const std::vector<Shape>& shapes) {
  if (shapes.empty()) throw DataError("mean_shape: empty shape sequence");
  const std::size_t k = shapes.front().size();
  Shape mean;
  mean.points.assign(k, Point2{});
  for (const Shape& s : shapes) {
    if (s.size() != k)
      throw DataError("mean_shape: landmark count mismatch (" +
                      std::to_string(s.size()) + " vs " + std::to_string(k) + ")");
    for (std::size_t i = 0; i < k; ++i) {
      mean[i].x += s[i].x;
      mean[i].y += s[i].y;
    }
  }
  const double inv = 1.0 / static_cast<double>(shapes.size());
  for (Point2& p : mean.points) {
    p.x *= inv;
    p.y *= inv;
  }
  return mean;
}

SimilarityTransform similarity_fit(const Shape& reference, const Shape& target) {
  const std::size_t k = reference.size();
  if (k < 2) throw DataError("similarity_fit: need at least 2 points");
  if (target.size() != k) throw DataError("similarity_fit: landmark count mismatch");

  Point2 ref_c{0, 0}, tgt_c{0, 0};
  for (std::size_t i = 0; i < k; ++i) {
    ref_c = ref_c + reference[i];
    tgt_c = tgt_c + target[i];
  }
  const double inv_k = 1.0 / static_cast<double>(k);
  ref_c = inv_k * ref_c;
  tgt_c = inv_k * tgt_c;

  // Centered sums: norm of the reference, dot and cross covariances.
  double norm = 0.0, dot = 0.0, cross = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const Point2 r = reference[i] - ref_c;
    const Point2 t = target[i] - tgt_c;
    norm += r.x * r.x + r.y * r.y;
    dot += r.x * t.x + r.y * t.y;
    cross += r.x * t.y - r.y * t.x;
  }
  if (norm < 1e-12)
    throw NumericError("similarity_fit: degenerate reference (coincident points)");

  SimilarityTransform t;
  t.scale = std::sqrt(dot * dot + cross * cross) / norm;
  t.rotation = std::atan2(cross, dot);
  if (!(t.scale > 0.0))
    throw NumericError("similarity_fit: degenerate target (zero scale)");
  t.translation = tgt_c - t.apply_linear(ref_c);
  return t;
}

}  // namespace lmc
