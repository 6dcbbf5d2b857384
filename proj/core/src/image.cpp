#include "lmc/image.hpp"

#include <algorithm>
#include <cmath>

namespace lmc {

std::uint8_t to_grayscale(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const double luma = 0.299 * r + 0.587 * g + 0.114 * b;
  return static_cast<std::uint8_t>(std::lround(luma));
}

std::uint8_t sample_intensity(const Image& image, Point2 p) {
  // Clamping before the round keeps lround away from overflow; the result
  // matches round-then-clamp for every finite point.
  const double cx = std::isfinite(p.x)
                        ? std::clamp(p.x, 0.0, static_cast<double>(image.width - 1))
                        : 0.0;
  const double cy = std::isfinite(p.y)
                        ? std::clamp(p.y, 0.0, static_cast<double>(image.height - 1))
                        : 0.0;
  return image.at(static_cast<int>(std::lround(cx)), static_cast<int>(std::lround(cy)));
}

}  // namespace lmc
