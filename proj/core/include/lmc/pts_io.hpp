#pragma once

#include <iosfwd>
#include <string>

#include "lmc/geometry.hpp"

namespace lmc {

// 300w-style .pts annotation:
//   version: 1
//   n_points: <K>
//   {
//   <x> <y>      (K lines)
//   }
Shape parse_pts(std::istream& in);
Shape parse_pts(const std::string& text);
Shape load_pts(const std::string& path);

std::string serialize_pts(const Shape& shape);
void save_pts(const Shape& shape, const std::string& path);

}  // namespace lmc
