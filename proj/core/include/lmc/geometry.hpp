#pragma once

#include <cstddef>
#include <vector>

namespace lmc {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }

// Ordered landmark vector. Landmark order is semantic and never permuted.
struct Shape {
  std::vector<Point2> points;

  Shape() = default;
  explicit Shape(std::vector<Point2> pts) : points(std::move(pts)) {}

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  Point2& operator[](std::size_t i) { return points[i]; }
  const Point2& operator[](std::size_t i) const { return points[i]; }

  auto begin() { return points.begin(); }
  auto end() { return points.end(); }
  auto begin() const { return points.begin(); }
  auto end() const { return points.end(); }
};

// Axis-aligned face box in image pixels.
struct BBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;
};

// p -> scale * R(rotation) * p + translation, uniform scale only.
struct SimilarityTransform {
  double scale = 1.0;
  double rotation = 0.0;  // radians
  Point2 translation{0.0, 0.0};

  Point2 apply(Point2 p) const;
  // Scale and rotation only; used for landmark-relative offsets.
  Point2 apply_linear(Point2 p) const;
  SimilarityTransform inverse() const;
};

bool is_finite(Point2 p);
bool is_finite(const Shape& shape);

// Map image-pixel coordinates into the unit box frame [0,1]^2 and back.
Shape normalize_shape(const Shape& shape, const BBox& box);
Shape denormalize_shape(const Shape& shape, const BBox& box);

// Coordinate-wise arithmetic mean; all shapes must share K.
Shape mean_shape(const std::vector<Shape>& shapes);

// Closed-form least-squares similarity (Umeyama-style, 2D):
// minimizes sum_k || T(reference_k) - target_k ||^2.
SimilarityTransform similarity_fit(const Shape& reference, const Shape& target);

}  // namespace lmc
