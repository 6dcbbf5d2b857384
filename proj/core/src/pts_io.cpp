#include "lmc/pts_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include "lmc/errors.hpp"

namespace lmc {

namespace {

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw DataError(".pts parse error at line " + std::to_string(line_no) + ": " + what);
}

std::string trimmed(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
  return s.substr(start);
}

bool next_line(std::istream& in, std::string& line, int& line_no) {
  if (!std::getline(in, line)) return false;
  ++line_no;
  line = trimmed(line);
  return true;
}

double parse_double(const std::string& token, int line_no) {
  double value = 0.0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end) fail(line_no, "non-numeric token '" + token + "'");
  return value;
}

}  // namespace

Shape parse_pts(std::istream& in) {
  std::string line;
  int line_no = 0;

  if (!next_line(in, line, line_no) || line.rfind("version:", 0) != 0)
    fail(line_no == 0 ? 1 : line_no, "expected 'version: 1' header");
  if (!next_line(in, line, line_no) || line.rfind("n_points:", 0) != 0)
    fail(line_no == 0 ? 2 : line_no, "expected 'n_points: <K>' header");

  const std::string count_str = trimmed(line.substr(std::string("n_points:").size()));
  long n_points = 0;
  {
    auto [ptr, ec] =
        std::from_chars(count_str.data(), count_str.data() + count_str.size(), n_points);
    if (ec != std::errc{} || ptr != count_str.data() + count_str.size() || n_points < 1)
      fail(line_no, "invalid landmark count '" + count_str + "'");
  }

  if (!next_line(in, line, line_no) || line != "{") fail(line_no, "expected '{'");

  Shape shape;
  shape.points.reserve(static_cast<std::size_t>(n_points));
  for (long i = 0; i < n_points; ++i) {
    if (!next_line(in, line, line_no))
      fail(line_no + 1, "expected " + std::to_string(n_points) + " coordinate lines, got " +
                            std::to_string(i));
    if (line == "}")
      fail(line_no, "expected " + std::to_string(n_points) + " coordinate lines, got " +
                        std::to_string(i));
    std::istringstream ls(line);
    std::string xs, ys, extra;
    if (!(ls >> xs >> ys)) fail(line_no, "expected '<x> <y>'");
    if (ls >> extra) fail(line_no, "trailing token '" + extra + "'");
    shape.points.push_back({parse_double(xs, line_no), parse_double(ys, line_no)});
  }

  if (!next_line(in, line, line_no) || line != "}") fail(line_no + 1, "expected '}'");
  return shape;
}

Shape parse_pts(const std::string& text) {
  std::istringstream in(text);
  return parse_pts(in);
}

Shape load_pts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open .pts file: " + path);
  try {
    return parse_pts(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string serialize_pts(const Shape& shape) {
  if (shape.empty()) throw DataError("serialize_pts: shape must have at least one landmark");
  if (!is_finite(shape)) throw DataError("serialize_pts: non-finite landmark");
  std::string out = "version: 1\nn_points: " + std::to_string(shape.size()) + "\n{\n";
  char buf[64];
  for (const Point2& p : shape) {
    std::snprintf(buf, sizeof(buf), "%.6f %.6f\n", p.x, p.y);
    out += buf;
  }
  out += "}\n";
  return out;
}

void save_pts(const Shape& shape, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write .pts file: " + path);
  out << serialize_pts(shape);
  if (!out) throw DataError("failed writing .pts file: " + path);
}

}  // namespace lmc
