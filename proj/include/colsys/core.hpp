#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace colsys {

using Color = std::uint16_t;
using ColorSequence = std::vector<Color>;
using ColorMask = std::uint64_t;

inline constexpr int kMaxColors = 64;
inline constexpr int kMaxCensusColors = 8;

/// Raised for malformed or out-of-range input, as opposed to a coloring that
/// is well-formed but rejected.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A binary relation on colors stored as one 64-bit row per first component:
/// bit d of row c is set iff (c, d) is in the relation.
class Relation {
 public:
  Relation() = default;

  bool contains(Color from, Color to) const { return (rows_[from] >> to) & 1u; }
  void insert(Color from, Color to) { rows_[from] |= ColorMask{1} << to; }
  void erase(Color from, Color to) { rows_[from] &= ~(ColorMask{1} << to); }

  /// Successors of `from` as a color mask.
  ColorMask row(Color from) const { return rows_[from]; }
  void set_row(Color from, ColorMask mask) { rows_[from] = mask; }

  std::size_t size() const;
  std::vector<std::pair<Color, Color>> pairs() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::array<ColorMask, kMaxColors> rows_{};
};

/// A coloring system (C, a, H, V) with C = {0, ..., colors-1}.
struct ColoringSystem {
  int colors = 1;
  Color origin = 0;
  Relation horizontal;
  Relation vertical;

  ColorMask all_colors() const {
    return colors >= 64 ? ~ColorMask{0} : (ColorMask{1} << colors) - 1;
  }

  friend bool operator==(const ColoringSystem&, const ColoringSystem&) = default;
};

ColoringSystem make_system(int colors, Color origin,
                           const std::vector<std::pair<Color, Color>>& horizontal,
                           const std::vector<std::pair<Color, Color>>& vertical);

/// Returns one message per violated invariant; empty means the system is valid.
std::vector<std::string> validate_system(const ColoringSystem& sys);
bool is_valid(const ColoringSystem& sys);
/// Throws InputError listing every violation.
void require_valid(const ColoringSystem& sys);

// -- encodings ---------------------------------------------------------------
//
// A relation over n colors is encoded as an n*n-bit number written row-major
// with pair (0, 0) as the most significant bit. Numeric order on these masks is
// therefore lexicographic order on the row-major bit string.

/// Only defined for colors <= 8.
std::uint64_t relation_mask(const Relation& rel, int colors);
Relation relation_from_mask(std::uint64_t mask, int colors);

/// Row-major bit string of a relation, pair (0, 0) first. Defined for any n.
std::vector<bool> relation_bits(const Relation& rel, int colors);

// -- isomorphism -------------------------------------------------------------

/// perm[c] is the image of color c. Must be a bijection on [0, colors).
using Bijection = std::vector<Color>;

ColoringSystem apply_bijection(const ColoringSystem& sys, const Bijection& perm);

struct CanonicalResult {
  ColoringSystem system;
  /// Maps colors of the input to colors of the canonical form.
  Bijection to_canonical;
};

/// Lexicographically least (origin, H bits, V bits) over every relabeling.
ColoringSystem canonical_form(const ColoringSystem& sys);
CanonicalResult canonical_form_with_map(const ColoringSystem& sys);

/// Searches for a bijection directly; mismatched color counts give false.
bool is_isomorphic(const ColoringSystem& lhs, const ColoringSystem& rhs);

// -- colorings ---------------------------------------------------------------

/// Partial coloring of the tiles {(x, y) : D(x, y) <= depth}. rows[y][x] is the
/// color of tile (x, y); row y holds every tile of that row inside the domain.
struct TriangleColoring {
  std::size_t depth = 0;
  std::vector<std::vector<Color>> rows;

  Color at(std::size_t x, std::size_t y) const { return rows[y][x]; }
  std::size_t tile_count() const { return depth + 1; }

  friend bool operator==(const TriangleColoring&, const TriangleColoring&) = default;
};

/// Row lengths of the domain {D(x, y) <= depth}, bottom row first.
std::vector<std::size_t> triangle_shape(std::size_t depth);

TriangleColoring triangle_from_sequence(const ColorSequence& seq);
ColorSequence sequence_from_triangle(const TriangleColoring& tri);
/// Throws InputError unless rows match triangle_shape(depth).
void require_triangle_shape(const TriangleColoring& tri);

/// Eventually periodic coloring of the quadrant. Column x maps to cell column
/// x when x < preperiod_x and to preperiod_x + (x - preperiod_x) mod period_x
/// otherwise; rows likewise. With zero preperiods this is a torus coloring.
struct PeriodicWitness {
  std::size_t period_x = 1;
  std::size_t period_y = 1;
  std::size_t preperiod_x = 0;
  std::size_t preperiod_y = 0;
  /// cells[j][i], width preperiod_x + period_x, height preperiod_y + period_y.
  std::vector<std::vector<Color>> cells;

  std::size_t width() const { return preperiod_x + period_x; }
  std::size_t height() const { return preperiod_y + period_y; }
  std::size_t column_of(std::uint64_t x) const;
  std::size_t row_of(std::uint64_t y) const;
  Color color_at(std::uint64_t x, std::uint64_t y) const {
    return cells[row_of(y)][column_of(x)];
  }

  friend bool operator==(const PeriodicWitness&, const PeriodicWitness&) = default;
};

/// Checks shape, origin and every wraparound H/V constraint of the witness.
bool witness_is_valid(const ColoringSystem& sys, const PeriodicWitness& w);

/// Witness relabeled through a bijection, valid for apply_bijection(sys, perm).
PeriodicWitness apply_bijection(const PeriodicWitness& w, const Bijection& perm);

/// The induced coloring restricted to the first `tiles` tiles in diagonal order.
ColorSequence expand_witness(const PeriodicWitness& w, std::size_t tiles);
/// The induced coloring on the full staircase x + y <= diagonal.
TriangleColoring expand_witness_diagonals(const PeriodicWitness& w, std::size_t diagonal);

// -- verdicts ----------------------------------------------------------------

enum class VerdictKind { Bounded, HasColoring, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  /// Bounded: the exact maximal length. Unknown: longest length reached.
  std::size_t length = 0;
  /// Present iff kind == HasColoring.
  PeriodicWitness witness;
  /// Unknown only: budgets at which the search gave up.
  std::size_t depth_cap = 0;
  std::size_t period_cap = 0;
  bool node_cap_hit = false;

  static Verdict bounded(std::size_t max_length);
  static Verdict has_coloring(PeriodicWitness w);
  static Verdict unknown(std::size_t reached, std::size_t depth_cap,
                         std::size_t period_cap, bool node_cap_hit);

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

const char* to_string(VerdictKind kind);

}  // namespace colsys
