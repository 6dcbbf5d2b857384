#pragma once

#include <cstdint>
#include <vector>

#include "lmc/geometry.hpp"

namespace lmc {

// 8-bit grayscale raster, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Image() = default;
  Image(int w, int h, std::uint8_t fill = 0)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {}

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

// Rec. 601 luma, round-half-up.
std::uint8_t to_grayscale(std::uint8_t r, std::uint8_t g, std::uint8_t b);

// Nearest-pixel lookup with edge clamping; total over all finite points.
std::uint8_t sample_intensity(const Image& image, Point2 p);

}  // namespace lmc
