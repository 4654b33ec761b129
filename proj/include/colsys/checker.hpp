#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "colsys/core.hpp"
#include "colsys/diagcodec.hpp"

namespace colsys {

enum class ViolationKind { Origin, Horizontal, Vertical };

/// The first failing constraint in diagonal-index order. For H/V violations
/// `from` is the left/lower tile and `to` the tile at `index`.
struct Violation {
  ViolationKind kind = ViolationKind::Origin;
  std::size_t index = 0;
  Tile from;
  Tile to;
  Color from_color = 0;
  Color to_color = 0;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct CheckResult {
  std::optional<Violation> violation;

  bool accepted() const { return !violation.has_value(); }
  explicit operator bool() const { return accepted(); }
};

/// Decides membership of `seq` in the acceptable coloring space. A constraint
/// binds only when both of its tiles lie inside the colored domain. Throws
/// InputError on an empty sequence or a color >= sys.colors.
CheckResult check_sequence(const ColoringSystem& sys, const ColorSequence& seq);

/// Same verdict as check_sequence on the diagonal-order serialization.
CheckResult check_triangle(const ColoringSystem& sys, const TriangleColoring& tri);

/// True iff `seq` starts with `prefix`.
bool is_prefix(const ColorSequence& prefix, const ColorSequence& seq);

/// Colors allowed at index k given seq[0..k), as a mask over the system.
/// Looks only at the left and lower neighbors of tile D^-1(k).
ColorMask allowed_colors(const ColoringSystem& sys, const ColorSequence& seq, std::size_t k);

}  // namespace colsys
