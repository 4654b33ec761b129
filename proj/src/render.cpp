#include "colsys/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace colsys {

const PaletteEntry& Palette::at(Color c) const {
  if (c >= entries.size()) {
    throw InputError("color " + std::to_string(c) + " is not in the palette (" +
                     std::to_string(entries.size()) + " entries)");
  }
  return entries[c];
}

Palette Palette::example() {
  return Palette{{
      {"red", 255, 0, 0},
      {"blue", 0, 0, 255},
      {"forest green", 34, 139, 34},
      {"purple", 128, 0, 128},
      {"yellow", 255, 255, 0},
      {"pink", 255, 192, 203},
      {"aqua", 0, 255, 255},
      {"grey", 128, 128, 128},
      {"teal", 0, 128, 128},
      {"lime green", 50, 205, 50},
      {"brown", 165, 42, 42},
      {"candy green", 0, 200, 83},
      {"orange", 255, 165, 0},
  }};
}

Palette Palette::spectrum(int colors) {
  Palette p;
  for (int c = 0; c < colors; ++c) {
    // HSV with s = v = 1, integer-only so output is stable across platforms.
    const int hue = c * 1536 / std::max(colors, 1);  // 6 sectors of 256
    const int sector = hue / 256;
    const auto f = static_cast<std::uint8_t>(hue % 256);
    const auto rising = f;
    const auto falling = static_cast<std::uint8_t>(255 - f);
    PaletteEntry e{"color " + std::to_string(c), 0, 0, 0};
    switch (sector) {
      case 0: e.r = 255; e.g = rising; break;
      case 1: e.r = falling; e.g = 255; break;
      case 2: e.g = 255; e.b = rising; break;
      case 3: e.g = falling; e.b = 255; break;
      case 4: e.r = rising; e.b = 255; break;
      default: e.r = 255; e.b = falling; break;
    }
    p.entries.push_back(std::move(e));
  }
  return p;
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "text") return RenderFormat::Text;
  if (name == "svg") return RenderFormat::Svg;
  if (name == "ppm") return RenderFormat::Ppm;
  throw InputError("unknown render format \"" + name + "\" (expected text, svg or ppm)");
}

std::string render_text(const TriangleColoring& tri) {
  require_triangle_shape(tri);
  std::string out;
  for (std::size_t line = 0; line < tri.rows.size(); ++line) {
    const auto& row = tri.rows[tri.rows.size() - 1 - line];
    for (std::size_t x = 0; x < row.size(); ++x) {
      if (x > 0) out.push_back(' ');
      out += std::to_string(row[x]);
    }
    out.push_back('\n');
  }
  return out;
}

TriangleColoring parse_text_triangle(const std::string& text) {
  std::vector<std::vector<Color>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<Color> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char ch) {
            return ch >= '0' && ch <= '9';
          }) || tok.size() > 5) {
        throw InputError("bad triangle entry \"" + tok + "\"");
      }
      const unsigned long v = std::stoul(tok);
      if (v >= kMaxColors) throw InputError("triangle entry " + tok + " out of range");
      row.push_back(static_cast<Color>(v));
    }
    if (!row.empty()) lines.push_back(std::move(row));
  }
  if (lines.empty()) throw InputError("empty triangle text");
  TriangleColoring tri;
  tri.rows.assign(lines.rbegin(), lines.rend());
  std::size_t tiles = 0;
  for (const auto& r : tri.rows) tiles += r.size();
  tri.depth = tiles - 1;
  require_triangle_shape(tri);
  return tri;
}

namespace {

std::size_t image_columns(const TriangleColoring& tri) {
  std::size_t w = 0;
  for (const auto& r : tri.rows) w = std::max(w, r.size());
  return w;
}

std::string hex(const PaletteEntry& e) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", e.r, e.g, e.b);
  return buf;
}

void check_palette(const TriangleColoring& tri, const Palette& palette) {
  for (const auto& row : tri.rows) {
    for (Color c : row) palette.at(c);
  }
}

}  // namespace

std::string render_svg(const TriangleColoring& tri, const Palette& palette, int cell) {
  require_triangle_shape(tri);
  check_palette(tri, palette);
  if (cell < 1) throw InputError("cell size must be positive");
  const std::size_t cols = image_columns(tri);
  const std::size_t rows = tri.rows.size();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cols * cell << "\" height=\""
      << rows * cell << "\" viewBox=\"0 0 " << cols * cell << ' ' << rows * cell << "\">\n";
  for (std::size_t y = 0; y < rows; ++y) {
    for (std::size_t x = 0; x < tri.rows[y].size(); ++x) {
      const Color c = tri.rows[y][x];
      out << "  <rect x=\"" << x * cell << "\" y=\"" << (rows - 1 - y) * cell << "\" width=\""
          << cell << "\" height=\"" << cell << "\" fill=\"" << hex(palette.at(c))
          << "\"><title>(" << x << ", " << y << ") " << c << ' ' << palette.at(c).name
          << "</title></rect>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_ppm(const TriangleColoring& tri, const Palette& palette, int cell) {
  require_triangle_shape(tri);
  check_palette(tri, palette);
  if (cell < 1) throw InputError("cell size must be positive");
  const std::size_t cols = image_columns(tri);
  const std::size_t rows = tri.rows.size();
  std::ostringstream out;
  out << "P3\n" << cols * cell << ' ' << rows * cell << "\n255\n";
  for (std::size_t line = 0; line < rows * cell; ++line) {
    const std::size_t y = rows - 1 - line / cell;
    const auto& row = tri.rows[y];
    for (std::size_t px = 0; px < cols * cell; ++px) {
      const std::size_t x = px / cell;
      if (px > 0) out << ' ';
      if (x < row.size()) {
        const PaletteEntry& e = palette.at(row[x]);
        out << int{e.r} << ' ' << int{e.g} << ' ' << int{e.b};
      } else {
        out << "255 255 255";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_triangle(const TriangleColoring& tri, const Palette& palette,
                            RenderFormat format, int cell) {
  switch (format) {
    case RenderFormat::Text:
      return render_text(tri);
    case RenderFormat::Svg:
      return render_svg(tri, palette, cell > 0 ? cell : 20);
    case RenderFormat::Ppm:
      return render_ppm(tri, palette, cell > 0 ? cell : 1);
  }
  return {};
}

}  // namespace colsys
