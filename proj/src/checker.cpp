#include "colsys/checker.hpp"

#include <sstream>

namespace colsys {

namespace {

std::string tile_str(Tile t) {
  return "(" + std::to_string(t.x) + ", " + std::to_string(t.y) + ")";
}

}  // namespace

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case ViolationKind::Origin:
      out << "origin tile (0, 0) has color " << to_color << ", expected the origin color";
      break;
    case ViolationKind::Horizontal:
      out << "horizontal pair (" << from_color << ", " << to_color << ") at tiles "
          << tile_str(from) << " -> " << tile_str(to) << " (index " << index
          << ") is not in H";
      break;
    case ViolationKind::Vertical:
      out << "vertical pair (" << from_color << ", " << to_color << ") at tiles "
          << tile_str(from) << " -> " << tile_str(to) << " (index " << index
          << ") is not in V";
      break;
  }
  return out.str();
}

CheckResult check_sequence(const ColoringSystem& sys, const ColorSequence& seq) {
  if (seq.empty()) throw InputError("color sequence is empty");
  for (std::size_t k = 0; k < seq.size(); ++k) {
    if (seq[k] >= sys.colors) {
      throw InputError("color " + std::to_string(seq[k]) + " at index " + std::to_string(k) +
                       " is not below color count " + std::to_string(sys.colors));
    }
  }

  if (seq[0] != sys.origin) {
    return {Violation{ViolationKind::Origin, 0, Tile{}, Tile{}, seq[0], seq[0]}};
  }
  for (std::size_t k = 1; k < seq.size(); ++k) {
    const Tile t = diag_tile(k);
    const std::size_t diag = t.x + t.y;
    if (t.x > 0) {
      const Color left = seq[k - diag - 1];
      if (!sys.horizontal.contains(left, seq[k])) {
        return {Violation{ViolationKind::Horizontal, k, Tile{t.x - 1, t.y}, t, left, seq[k]}};
      }
    }
    if (t.y > 0) {
      const Color below = seq[k - diag];
      if (!sys.vertical.contains(below, seq[k])) {
        return {Violation{ViolationKind::Vertical, k, Tile{t.x, t.y - 1}, t, below, seq[k]}};
      }
    }
  }
  return {};
}

CheckResult check_triangle(const ColoringSystem& sys, const TriangleColoring& tri) {
  return check_sequence(sys, sequence_from_triangle(tri));
}

bool is_prefix(const ColorSequence& prefix, const ColorSequence& seq) {
  if (seq.size() < prefix.size()) return false;
  for (std::size_t k = 0; k < prefix.size(); ++k) {
    if (seq[k] != prefix[k]) return false;
  }
  return true;
}

ColorMask allowed_colors(const ColoringSystem& sys, const ColorSequence& seq, std::size_t k) {
  if (k == 0) return ColorMask{1} << sys.origin;
  const Tile t = diag_tile(k);
  const std::size_t diag = t.x + t.y;
  ColorMask mask = sys.all_colors();
  if (t.x > 0) mask &= sys.horizontal.row(seq[k - diag - 1]);
  if (t.y > 0) mask &= sys.vertical.row(seq[k - diag]);
  return mask;
}

}  // namespace colsys
