#include "colsys/io.hpp"

#include <fstream>
#include <sstream>

namespace colsys {

namespace {

template <class T>
T get_integer(const Json& j, const char* what, T max) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  if (j.is_number_unsigned()) {
    auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(max)) {
      throw InputError(std::string(what) + " " + std::to_string(v) + " is out of range");
    }
    return static_cast<T>(v);
  }
  auto v = j.get<std::int64_t>();
  if (v < 0) throw InputError(std::string(what) + " must be non-negative");
  if (static_cast<std::uint64_t>(v) > static_cast<std::uint64_t>(max)) {
    throw InputError(std::string(what) + " " + std::to_string(v) + " is out of range");
  }
  return static_cast<T>(v);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

Json pairs_to_json(const Relation& rel) {
  Json out = Json::array();
  for (auto [c, d] : rel.pairs()) out.push_back(Json::array({c, d}));
  return out;
}

Relation pairs_from_json(const Json& j, int colors, const char* name) {
  if (!j.is_array()) throw InputError(std::string(name) + " must be an array of pairs");
  Relation rel;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw InputError(std::string(name) + " entries must be 2-element arrays");
    }
    auto c = get_integer<std::uint64_t>(p[0], name, ~std::uint64_t{0});
    auto d = get_integer<std::uint64_t>(p[1], name, ~std::uint64_t{0});
    if (c >= static_cast<std::uint64_t>(colors) || d >= static_cast<std::uint64_t>(colors)) {
      throw InputError(std::string(name) + " pair (" + std::to_string(c) + ", " +
                       std::to_string(d) + ") out of range for " + std::to_string(colors) +
                       " colors");
    }
    rel.insert(static_cast<Color>(c), static_cast<Color>(d));
  }
  return rel;
}

std::vector<Color> colors_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<Color> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(get_integer<Color>(e, what, kMaxColors - 1));
  return out;
}

}  // namespace

Json system_to_json(const ColoringSystem& sys) {
  Json j;
  j["colors"] = sys.colors;
  j["origin"] = sys.origin;
  j["horizontal"] = pairs_to_json(sys.horizontal);
  j["vertical"] = pairs_to_json(sys.vertical);
  return j;
}

ColoringSystem system_from_json(const Json& j) {
  ColoringSystem sys;
  sys.colors = get_integer<int>(member(j, "colors"), "colors", kMaxColors);
  if (sys.colors < 1) throw InputError("colors must be at least 1");
  sys.origin = get_integer<Color>(member(j, "origin"), "origin", kMaxColors);
  sys.horizontal = pairs_from_json(member(j, "horizontal"), sys.colors, "horizontal");
  sys.vertical = pairs_from_json(member(j, "vertical"), sys.colors, "vertical");
  require_valid(sys);
  return sys;
}

Json sequence_to_json(const ColorSequence& seq) {
  Json out = Json::array();
  for (Color c : seq) out.push_back(c);
  return out;
}

ColorSequence sequence_from_json(const Json& j) {
  ColorSequence seq = colors_from_json(j, "sequence element");
  if (seq.empty()) throw InputError("sequence is empty");
  return seq;
}

Json triangle_to_json(const TriangleColoring& tri) {
  Json j;
  j["depth"] = tri.depth;
  Json rows = Json::array();
  for (const auto& row : tri.rows) rows.push_back(sequence_to_json(row));
  j["rows"] = std::move(rows);
  return j;
}

TriangleColoring triangle_from_json(const Json& j) {
  TriangleColoring tri;
  tri.depth = get_integer<std::size_t>(member(j, "depth"), "depth", std::size_t{1} << 40);
  const Json& rows = member(j, "rows");
  if (!rows.is_array()) throw InputError("rows must be an array");
  for (const auto& row : rows) tri.rows.push_back(colors_from_json(row, "triangle entry"));
  require_triangle_shape(tri);
  return tri;
}

Coloring coloring_from_json(const Json& j) {
  if (j.is_array()) return sequence_from_json(j);
  if (j.is_object()) return triangle_from_json(j);
  throw InputError("coloring must be a sequence array or a triangle object");
}

ColorSequence as_sequence(const Coloring& c) {
  if (const auto* seq = std::get_if<ColorSequence>(&c)) return *seq;
  return sequence_from_triangle(std::get<TriangleColoring>(c));
}

Json witness_to_json(const PeriodicWitness& w) {
  Json j;
  j["period_x"] = w.period_x;
  j["period_y"] = w.period_y;
  j["preperiod_x"] = w.preperiod_x;
  j["preperiod_y"] = w.preperiod_y;
  Json cells = Json::array();
  for (const auto& row : w.cells) cells.push_back(sequence_to_json(row));
  j["cells"] = std::move(cells);
  return j;
}

PeriodicWitness witness_from_json(const Json& j) {
  PeriodicWitness w;
  constexpr std::size_t kMaxPeriod = 1 << 16;
  w.period_x = get_integer<std::size_t>(member(j, "period_x"), "period_x", kMaxPeriod);
  w.period_y = get_integer<std::size_t>(member(j, "period_y"), "period_y", kMaxPeriod);
  if (j.contains("preperiod_x")) {
    w.preperiod_x = get_integer<std::size_t>(j["preperiod_x"], "preperiod_x", kMaxPeriod);
  }
  if (j.contains("preperiod_y")) {
    w.preperiod_y = get_integer<std::size_t>(j["preperiod_y"], "preperiod_y", kMaxPeriod);
  }
  if (w.period_x < 1 || w.period_y < 1) throw InputError("witness periods must be >= 1");
  const Json& cells = member(j, "cells");
  if (!cells.is_array()) throw InputError("cells must be an array of rows");
  for (const auto& row : cells) w.cells.push_back(colors_from_json(row, "witness cell"));
  if (w.cells.size() != w.height()) throw InputError("witness has the wrong number of rows");
  for (const auto& row : w.cells) {
    if (row.size() != w.width()) throw InputError("witness row has the wrong width");
  }
  return w;
}

namespace {

Json verdict_detail(const Verdict& v) {
  Json d;
  switch (v.kind) {
    case VerdictKind::Bounded:
      d["max_length"] = v.length;
      break;
    case VerdictKind::HasColoring:
      d = witness_to_json(v.witness);
      break;
    case VerdictKind::Unknown:
      d["depth_reached"] = v.length;
      d["depth_cap"] = v.depth_cap;
      d["period_cap"] = v.period_cap;
      d["node_cap_hit"] = v.node_cap_hit;
      break;
  }
  return d;
}

Verdict verdict_from_parts(const std::string& kind, const Json& d) {
  if (kind == "bounded") {
    return Verdict::bounded(get_integer<std::size_t>(member(d, "max_length"), "max_length",
                                                     ~std::size_t{0}));
  }
  if (kind == "has_coloring") return Verdict::has_coloring(witness_from_json(d));
  if (kind == "unknown") {
    const Json& hit = member(d, "node_cap_hit");
    if (!hit.is_boolean()) throw InputError("node_cap_hit must be a boolean");
    return Verdict::unknown(
        get_integer<std::size_t>(member(d, "depth_reached"), "depth_reached", ~std::size_t{0}),
        get_integer<std::size_t>(member(d, "depth_cap"), "depth_cap", ~std::size_t{0}),
        get_integer<std::size_t>(member(d, "period_cap"), "period_cap", ~std::size_t{0}),
        hit.get<bool>());
  }
  throw InputError("unknown verdict kind \"" + kind + "\"");
}

std::string verdict_kind(const Json& j) {
  const Json& k = member(j, "verdict");
  if (!k.is_string()) throw InputError("verdict must be a string");
  return k.get<std::string>();
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["verdict"] = to_string(v.kind);
  const Json detail = verdict_detail(v);
  for (auto& [key, value] : detail.items()) j[key] = value;
  return j;
}

Verdict verdict_from_json(const Json& j) { return verdict_from_parts(verdict_kind(j), j); }

Json record_to_json(const CensusRecord& r) {
  Json j;
  j["system_index"] = r.system_index;
  j["canonical_id"] = r.canonical_id;
  j["verdict"] = to_string(r.verdict.kind);
  j["detail"] = verdict_detail(r.verdict);
  return j;
}

CensusRecord record_from_json(const Json& j) {
  CensusRecord r;
  r.system_index = get_integer<std::uint64_t>(member(j, "system_index"), "system_index",
                                              ~std::uint64_t{0});
  r.canonical_id = get_integer<std::uint64_t>(member(j, "canonical_id"), "canonical_id",
                                              ~std::uint64_t{0});
  r.verdict = verdict_from_parts(verdict_kind(j), member(j, "detail"));
  return r;
}

Json summary_to_json(const CensusSummary& s) {
  auto counts = [](const VerdictCounts& c) {
    Json j;
    j["bounded"] = c.bounded;
    j["has_coloring"] = c.has_coloring;
    j["unknown"] = c.unknown;
    return j;
  };
  Json j;
  j["colors"] = s.colors;
  j["total_systems"] = s.total_systems;
  j["counts"] = counts(s.counts);
  j["class_counts"] = counts(s.class_counts);
  j["mu_exact"] = s.mu_exact ? Json(*s.mu_exact) : Json(nullptr);
  j["mu_lower_bound"] = s.mu_lower_bound;
  j["champion"] = s.champion ? Json(*s.champion) : Json(nullptr);
  j["champion_length"] = s.champion_length;
  Json budget;
  budget["depth_cap"] = s.budget.depth_cap;
  budget["period_cap"] = s.budget.period_cap;
  budget["preperiod_cap"] = s.budget.preperiod_cap;
  budget["node_cap"] = s.budget.node_cap ? Json(*s.budget.node_cap) : Json(nullptr);
  j["budget"] = std::move(budget);
  return j;
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(source + ": malformed JSON at byte " + std::to_string(e.byte) + ": " +
                     e.what());
  }
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path.string());
}

void save_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed writing " + path.string());
}

ColoringSystem load_system(const std::filesystem::path& path) {
  try {
    return system_from_json(load_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Coloring load_coloring(const std::filesystem::path& path) {
  try {
    return coloring_from_json(load_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

}  // namespace colsys
