#include "colsys/core.hpp"

#include <bit>
#include <sstream>

#include "colsys/diagcodec.hpp"

namespace colsys {

std::size_t Relation::size() const {
  std::size_t total = 0;
  for (ColorMask r : rows_) total += static_cast<std::size_t>(std::popcount(r));
  return total;
}

std::vector<std::pair<Color, Color>> Relation::pairs() const {
  std::vector<std::pair<Color, Color>> out;
  for (std::size_t c = 0; c < rows_.size(); ++c) {
    for (ColorMask r = rows_[c]; r != 0; r &= r - 1) {
      out.emplace_back(static_cast<Color>(c), static_cast<Color>(std::countr_zero(r)));
    }
  }
  return out;
}

ColoringSystem make_system(int colors, Color origin,
                           const std::vector<std::pair<Color, Color>>& horizontal,
                           const std::vector<std::pair<Color, Color>>& vertical) {
  ColoringSystem sys;
  sys.colors = colors;
  sys.origin = origin;
  auto fill = [](Relation& rel, const std::vector<std::pair<Color, Color>>& pairs,
                 const char* name) {
    for (auto [c, d] : pairs) {
      if (c >= kMaxColors || d >= kMaxColors) {
        std::ostringstream msg;
        msg << name << " pair (" << c << ", " << d << ") is not representable";
        throw InputError(msg.str());
      }
      rel.insert(c, d);
    }
  };
  fill(sys.horizontal, horizontal, "horizontal");
  fill(sys.vertical, vertical, "vertical");
  return sys;
}

std::vector<std::string> validate_system(const ColoringSystem& sys) {
  std::vector<std::string> problems;
  if (sys.colors < 1 || sys.colors > kMaxColors) {
    problems.push_back("color count " + std::to_string(sys.colors) + " outside [1, " +
                       std::to_string(kMaxColors) + "]");
    return problems;
  }
  if (sys.origin >= sys.colors) {
    problems.push_back("origin color " + std::to_string(sys.origin) +
                       " not below color count " + std::to_string(sys.colors));
  }
  auto check = [&](const Relation& rel, const char* name) {
    for (auto [c, d] : rel.pairs()) {
      if (c >= sys.colors || d >= sys.colors) {
        std::ostringstream msg;
        msg << name << " pair (" << c << ", " << d << ") out of range";
        problems.push_back(msg.str());
      }
    }
  };
  check(sys.horizontal, "horizontal");
  check(sys.vertical, "vertical");
  return problems;
}

bool is_valid(const ColoringSystem& sys) { return validate_system(sys).empty(); }

void require_valid(const ColoringSystem& sys) {
  auto problems = validate_system(sys);
  if (problems.empty()) return;
  std::string msg = "invalid coloring system:";
  for (const auto& p : problems) msg += " " + p + ";";
  throw InputError(msg);
}

std::uint64_t relation_mask(const Relation& rel, int colors) {
  if (colors < 1 || colors > kMaxCensusColors) {
    throw std::invalid_argument("relation masks need 1 <= colors <= 8");
  }
  const int bits = colors * colors;
  std::uint64_t mask = 0;
  for (int c = 0; c < colors; ++c) {
    for (int d = 0; d < colors; ++d) {
      if (rel.contains(static_cast<Color>(c), static_cast<Color>(d))) {
        mask |= std::uint64_t{1} << (bits - 1 - (c * colors + d));
      }
    }
  }
  return mask;
}

Relation relation_from_mask(std::uint64_t mask, int colors) {
  if (colors < 1 || colors > kMaxCensusColors) {
    throw std::invalid_argument("relation masks need 1 <= colors <= 8");
  }
  const int bits = colors * colors;
  Relation rel;
  for (int c = 0; c < colors; ++c) {
    for (int d = 0; d < colors; ++d) {
      if ((mask >> (bits - 1 - (c * colors + d))) & 1u) {
        rel.insert(static_cast<Color>(c), static_cast<Color>(d));
      }
    }
  }
  return rel;
}

std::vector<bool> relation_bits(const Relation& rel, int colors) {
  std::vector<bool> bits;
  bits.reserve(static_cast<std::size_t>(colors) * colors);
  for (int c = 0; c < colors; ++c) {
    for (int d = 0; d < colors; ++d) {
      bits.push_back(rel.contains(static_cast<Color>(c), static_cast<Color>(d)));
    }
  }
  return bits;
}

ColoringSystem apply_bijection(const ColoringSystem& sys, const Bijection& perm) {
  if (perm.size() != static_cast<std::size_t>(sys.colors)) {
    throw std::invalid_argument("bijection size does not match color count");
  }
  ColoringSystem out;
  out.colors = sys.colors;
  out.origin = perm[sys.origin];
  for (auto [c, d] : sys.horizontal.pairs()) out.horizontal.insert(perm[c], perm[d]);
  for (auto [c, d] : sys.vertical.pairs()) out.vertical.insert(perm[c], perm[d]);
  return out;
}

std::vector<std::size_t> triangle_shape(std::size_t depth) {
  const Tile last = diag_tile(depth);
  const std::size_t diag = last.x + last.y;
  std::vector<std::size_t> shape(diag + 1);
  for (std::size_t y = 0; y <= diag; ++y) {
    shape[y] = y >= last.y ? diag - y + 1 : diag - y;
  }
  return shape;
}

TriangleColoring triangle_from_sequence(const ColorSequence& seq) {
  if (seq.empty()) throw InputError("empty color sequence has no triangle");
  TriangleColoring tri;
  tri.depth = seq.size() - 1;
  for (std::size_t len : triangle_shape(tri.depth)) tri.rows.emplace_back(len);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    Tile t = diag_tile(k);
    tri.rows[t.y][t.x] = seq[k];
  }
  return tri;
}

void require_triangle_shape(const TriangleColoring& tri) {
  auto shape = triangle_shape(tri.depth);
  if (tri.rows.size() != shape.size()) {
    throw InputError("triangle of depth " + std::to_string(tri.depth) + " needs " +
                     std::to_string(shape.size()) + " rows, got " +
                     std::to_string(tri.rows.size()));
  }
  for (std::size_t y = 0; y < shape.size(); ++y) {
    if (tri.rows[y].size() != shape[y]) {
      throw InputError("triangle row " + std::to_string(y) + " needs " +
                       std::to_string(shape[y]) + " entries, got " +
                       std::to_string(tri.rows[y].size()));
    }
  }
}

ColorSequence sequence_from_triangle(const TriangleColoring& tri) {
  require_triangle_shape(tri);
  ColorSequence seq(tri.depth + 1);
  for (std::size_t k = 0; k <= tri.depth; ++k) {
    Tile t = diag_tile(k);
    seq[k] = tri.rows[t.y][t.x];
  }
  return seq;
}

std::size_t PeriodicWitness::column_of(std::uint64_t x) const {
  if (x < preperiod_x) return static_cast<std::size_t>(x);
  return preperiod_x + static_cast<std::size_t>((x - preperiod_x) % period_x);
}

std::size_t PeriodicWitness::row_of(std::uint64_t y) const {
  if (y < preperiod_y) return static_cast<std::size_t>(y);
  return preperiod_y + static_cast<std::size_t>((y - preperiod_y) % period_y);
}

bool witness_is_valid(const ColoringSystem& sys, const PeriodicWitness& w) {
  if (w.period_x < 1 || w.period_y < 1) return false;
  if (w.cells.size() != w.height()) return false;
  for (const auto& row : w.cells) {
    if (row.size() != w.width()) return false;
    for (Color c : row) {
      if (c >= sys.colors) return false;
    }
  }
  if (w.cells[0][0] != sys.origin) return false;
  for (std::size_t j = 0; j < w.height(); ++j) {
    for (std::size_t i = 0; i < w.width(); ++i) {
      const Color c = w.cells[j][i];
      const std::size_t right = i + 1 < w.width() ? i + 1 : w.preperiod_x;
      const std::size_t up = j + 1 < w.height() ? j + 1 : w.preperiod_y;
      if (!sys.horizontal.contains(c, w.cells[j][right])) return false;
      if (!sys.vertical.contains(c, w.cells[up][i])) return false;
    }
  }
  return true;
}

PeriodicWitness apply_bijection(const PeriodicWitness& w, const Bijection& perm) {
  PeriodicWitness out = w;
  for (auto& row : out.cells) {
    for (Color& c : row) c = perm.at(c);
  }
  return out;
}

ColorSequence expand_witness(const PeriodicWitness& w, std::size_t tiles) {
  ColorSequence seq(tiles);
  for (std::size_t k = 0; k < tiles; ++k) {
    Tile t = diag_tile(k);
    seq[k] = w.color_at(t.x, t.y);
  }
  return seq;
}

TriangleColoring expand_witness_diagonals(const PeriodicWitness& w, std::size_t diagonal) {
  return triangle_from_sequence(expand_witness(w, triangular(diagonal + 1)));
}

Verdict Verdict::bounded(std::size_t max_length) {
  Verdict v;
  v.kind = VerdictKind::Bounded;
  v.length = max_length;
  return v;
}

Verdict Verdict::has_coloring(PeriodicWitness w) {
  Verdict v;
  v.kind = VerdictKind::HasColoring;
  v.witness = std::move(w);
  return v;
}

Verdict Verdict::unknown(std::size_t reached, std::size_t depth_cap, std::size_t period_cap,
                         bool node_cap_hit) {
  Verdict v;
  v.kind = VerdictKind::Unknown;
  v.length = reached;
  v.depth_cap = depth_cap;
  v.period_cap = period_cap;
  v.node_cap_hit = node_cap_hit;
  return v;
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Bounded:
      return "bounded";
    case VerdictKind::HasColoring:
      return "has_coloring";
    case VerdictKind::Unknown:
      return "unknown";
  }
  return "unknown";
}

}  // namespace colsys
