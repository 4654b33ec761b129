#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "colsys/core.hpp"

namespace colsys {

struct PaletteEntry {
  std::string name;
  std::uint8_t r = 0, g = 0, b = 0;
};

/// Display colors indexed by Color.
struct Palette {
  std::vector<PaletteEntry> entries;

  std::size_t size() const { return entries.size(); }
  const PaletteEntry& at(Color c) const;

  /// The 13 named colors of the bundled example system (0 red, 1 blue, ...).
  static Palette example();
  /// `colors` evenly spaced hues, for systems larger than the example palette.
  static Palette spectrum(int colors);
};

enum class RenderFormat { Text, Svg, Ppm };

RenderFormat parse_render_format(const std::string& name);

/// Staircase text: row y on line (rows - 1 - y), entries separated by one space.
std::string render_text(const TriangleColoring& tri);
/// Inverse of render_text; whitespace between entries is free. Throws InputError.
TriangleColoring parse_text_triangle(const std::string& text);

/// Unit cells of `cell` pixels, origin at the bottom-left, tiles outside the
/// domain left white. Throws InputError for colors the palette lacks.
std::string render_svg(const TriangleColoring& tri, const Palette& palette, int cell = 20);
/// Plain (P3) PPM.
std::string render_ppm(const TriangleColoring& tri, const Palette& palette, int cell = 1);

std::string render_triangle(const TriangleColoring& tri, const Palette& palette,
                            RenderFormat format, int cell = 0);

}  // namespace colsys
