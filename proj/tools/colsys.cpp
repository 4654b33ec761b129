// colsys: command-line driver for checking, searching and censusing
// coloring systems.
//
// Exit status: 0 accepted / success, 1 rejected (or "not isomorphic"),
// 2 malformed input, unwritable output or bad flags.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "colsys/census.hpp"
#include "colsys/checker.hpp"
#include "colsys/io.hpp"
#include "colsys/render.hpp"
#include "colsys/search.hpp"

using namespace colsys;

namespace {

constexpr int kExitReject = 1;
constexpr int kExitInput = 2;

struct BudgetFlags {
  std::size_t depth_cap = 64;
  std::size_t period_cap = 4;
  std::size_t preperiod_cap = 2;
  std::uint64_t node_cap = 0;

  void attach(CLI::App* app) {
    app->add_option("--depth-cap", depth_cap, "Longest sequence length explored")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--period-cap", period_cap, "Largest witness period per axis")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app->add_option("--preperiod-cap", preperiod_cap, "Largest witness preperiod per axis")
        ->capture_default_str();
    app->add_option("--node-cap", node_cap, "Search nodes per operation (0 = unlimited)");
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.depth_cap = depth_cap;
    b.period_cap = period_cap;
    b.preperiod_cap = preperiod_cap;
    if (node_cap > 0) b.node_cap = node_cap;
    return b;
  }
};

void write_output(const std::string& path, const std::string& data) {
  if (path.empty() || path == "-") {
    std::cout << data;
  } else {
    save_text(path, data);
  }
}

std::string shape_text(const PeriodicWitness& w) {
  std::string s = "period " + std::to_string(w.period_x) + "×" + std::to_string(w.period_y);
  if (w.preperiod_x + w.preperiod_y > 0) {
    s += ", preperiod " + std::to_string(w.preperiod_x) + "×" + std::to_string(w.preperiod_y);
  }
  return s;
}

std::string verdict_line(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::Bounded:
      return "bounded, max length " + std::to_string(v.length);
    case VerdictKind::HasColoring:
      return "has coloring, " + shape_text(v.witness);
    case VerdictKind::Unknown:
      break;
  }
  std::string s = "unknown, reached length " + std::to_string(v.length) + " (depth cap " +
                  std::to_string(v.depth_cap) + ", period cap " + std::to_string(v.period_cap);
  if (v.node_cap_hit) s += ", node cap hit";
  return s + ")";
}

std::string witness_rows(const PeriodicWitness& w) {
  std::string out;
  for (std::size_t j = w.cells.size(); j-- > 0;) {
    for (std::size_t i = 0; i < w.cells[j].size(); ++i) {
      if (i > 0) out.push_back(' ');
      out += std::to_string(w.cells[j][i]);
    }
    out.push_back('\n');
  }
  return out;
}

Palette pick_palette(const std::string& name, const TriangleColoring& tri) {
  if (name == "example") return Palette::example();
  Color top = 0;
  for (const auto& row : tri.rows)
    for (Color c : row) top = std::max(top, c);
  if (name == "spectrum") return Palette::spectrum(top + 1);
  if (name == "auto") return top < 13 ? Palette::example() : Palette::spectrum(top + 1);
  throw InputError("unknown palette \"" + name + "\" (expected auto, example or spectrum)");
}

// A witness file holds either a bare witness or a has_coloring verdict.
PeriodicWitness load_witness(const std::string& path) {
  Json j = load_json(path);
  if (j.is_object() && j.contains("verdict")) {
    Verdict v = verdict_from_json(j);
    if (v.kind != VerdictKind::HasColoring) throw InputError(path + ": verdict has no witness");
    return v.witness;
  }
  return witness_from_json(j);
}

// -- subcommands -------------------------------------------------------------

int cmd_check(const std::string& system_path, const std::string& coloring_path, bool quiet) {
  const ColoringSystem sys = load_system(system_path);
  const ColorSequence seq = as_sequence(load_coloring(coloring_path));
  const CheckResult r = check_sequence(sys, seq);
  if (r.accepted()) {
    if (!quiet) std::cout << "accepted: " << seq.size() << " tiles\n";
    return 0;
  }
  std::cout << "rejected: " << r.violation->describe() << '\n';
  return kExitReject;
}

struct SolveFlags {
  std::string system;
  BudgetFlags budget;
  std::size_t chain = 0;
  std::size_t enumerate_length = 0;
  std::size_t limit = 0;
  bool profile = false;
  bool json = false;
};

int cmd_solve(const SolveFlags& f) {
  const ColoringSystem sys = load_system(f.system);
  const SearchBudget budget = f.budget.budget();
  const Verdict v = classify(sys, budget);
  if (f.json) {
    std::cout << verdict_to_json(v).dump() << '\n';
  } else {
    std::cout << verdict_line(v) << '\n';
    if (v.kind == VerdictKind::HasColoring) {
      std::cout << "witness cells, top row first:\n" << witness_rows(v.witness);
    }
  }

  if (f.profile) {
    const LengthProfile p = length_profile(sys, budget);
    std::cout << "profile" << (p.status == SearchStatus::Indeterminate ? " (node cap hit)" : "")
              << ":\n";
    for (std::size_t i = 0; i < p.counts.size(); ++i) {
      std::cout << "  length " << i + 1 << ": " << p.counts[i] << '\n';
    }
  }

  if (f.enumerate_length > 0) {
    const Enumeration e = enumerate(sys, f.enumerate_length, f.limit);
    for (const auto& s : e.sequences) std::cout << sequence_to_json(s).dump() << '\n';
    std::cout << e.sequences.size() << " sequence" << (e.sequences.size() == 1 ? "" : "s")
              << " of length " << f.enumerate_length << (e.truncated ? " (truncated)" : "")
              << '\n';
  }

  if (f.chain > 0) {
    const ChainResult c = build_chain(sys, f.chain, budget);
    switch (c.status) {
      case ChainStatus::Reached:
        std::cout << "chain of length " << f.chain << ":\n"
                  << sequence_to_json(c.sequence).dump() << '\n'
                  << render_text(triangle_from_sequence(c.sequence));
        break;
      case ChainStatus::Unreachable:
        std::cout << "chain: no acceptable sequence of length " << f.chain << '\n';
        break;
      case ChainStatus::Indeterminate:
        std::cout << "chain: node cap hit before length " << f.chain << '\n';
        break;
    }
  }
  return 0;
}

int cmd_classify(const std::string& system_path, const BudgetFlags& budget) {
  const Verdict v = classify(load_system(system_path), budget.budget());
  std::cout << verdict_to_json(v).dump() << '\n';
  return 0;
}

struct CensusFlags {
  int colors = 1;
  BudgetFlags budget;
  unsigned jobs = 1;
  std::string out;
  bool resume = false;
  bool no_dedupe = false;
};

int cmd_census(const CensusFlags& f) {
  CensusOptions opts;
  opts.budget = f.budget.budget();
  opts.jobs = f.jobs;
  opts.dedupe = !f.no_dedupe;
  CensusSummary s;
  if (f.out.empty()) {
    if (f.resume) throw InputError("--resume needs --out");
    s = run_census(f.colors, opts, {});
  } else {
    s = run_census_to_file(f.colors, opts, f.out, f.resume);
  }
  std::cout << summary_to_json(s).dump(2) << '\n';
  return 0;
}

struct RenderFlags {
  std::string coloring;
  std::string witness;
  std::size_t diagonal = 9;
  std::string format = "text";
  std::string palette = "auto";
  int cell = 0;
  std::string out;
};

int cmd_render(const RenderFlags& f) {
  TriangleColoring tri;
  if (!f.witness.empty()) {
    if (!f.coloring.empty()) throw InputError("give either a coloring or --witness, not both");
    tri = expand_witness_diagonals(load_witness(f.witness), f.diagonal);
  } else if (!f.coloring.empty()) {
    tri = triangle_from_sequence(as_sequence(load_coloring(f.coloring)));
  } else {
    throw InputError("nothing to render: give a coloring file or --witness");
  }
  const RenderFormat format = parse_render_format(f.format);
  const Palette palette = format == RenderFormat::Text ? Palette{} : pick_palette(f.palette, tri);
  write_output(f.out, render_triangle(tri, palette, format, f.cell));
  return 0;
}

int cmd_isomorphic(const std::string& a, const std::string& b) {
  const bool iso = is_isomorphic(load_system(a), load_system(b));
  std::cout << (iso ? "isomorphic" : "not isomorphic") << '\n';
  return iso ? 0 : kExitReject;
}

int cmd_canon(const std::string& path, bool show_map) {
  const ColoringSystem sys = load_system(path);
  require_valid(sys);
  const CanonicalResult r = canonical_form_with_map(sys);
  Json j = system_to_json(r.system);
  if (show_map) {
    Json map = Json::array();
    for (Color c : r.to_canonical) map.push_back(c);
    j["map"] = std::move(map);
  }
  if (sys.colors <= kMaxIndexedColors) j["canonical_id"] = system_index(r.system);
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coloring systems: check, search and census origin-anchored quadrant colorings"};
  app.require_subcommand(1);
  int status = 0;

  std::string system_path, coloring_path;
  bool quiet = false;
  auto* check = app.add_subcommand("check", "Check a finite coloring against a system");
  check->add_option("system", system_path, "System JSON file")->required();
  check->add_option("coloring", coloring_path, "Sequence or triangle JSON file")->required();
  check->add_flag("-q,--quiet", quiet, "Print nothing on acceptance");

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Classify a system and optionally explore it");
  solve->add_option("system", solve_flags.system, "System JSON file")->required();
  solve_flags.budget.attach(solve);
  solve->add_option("--chain", solve_flags.chain, "Build the least chain up to this length");
  solve->add_option("--enumerate", solve_flags.enumerate_length,
                    "List acceptable sequences of this length");
  solve->add_option("--limit", solve_flags.limit, "Stop enumerating after this many (0 = all)");
  solve->add_flag("--profile", solve_flags.profile, "Count acceptable sequences per length");
  solve->add_flag("--json", solve_flags.json, "Print the verdict as JSON");

  BudgetFlags classify_budget;
  auto* classify_cmd = app.add_subcommand("classify", "Print the verdict of a system as JSON");
  classify_cmd->add_option("system", system_path, "System JSON file")->required();
  classify_budget.attach(classify_cmd);

  CensusFlags census_flags;
  auto* census = app.add_subcommand("census", "Classify every system with n colors");
  census->add_option("colors", census_flags.colors, "Number of colors")
      ->required()
      ->check(CLI::Range(1, kMaxIndexedColors));
  census_flags.budget.attach(census);
  census->add_option("-j,--jobs", census_flags.jobs, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  census->add_option("-o,--out", census_flags.out, "JSON Lines record file");
  census->add_flag("--resume", census_flags.resume, "Continue from the record file's cursor");
  census->add_flag("--no-dedupe", census_flags.no_dedupe,
                   "Classify every system instead of one per isomorphism class");

  RenderFlags render_flags;
  auto* render = app.add_subcommand("render", "Draw a coloring or an expanded witness");
  render->add_option("coloring", render_flags.coloring, "Sequence or triangle JSON file");
  render->add_option("--witness", render_flags.witness, "Witness or has_coloring verdict JSON");
  render->add_option("--diagonal", render_flags.diagonal,
                     "Last diagonal drawn when expanding a witness")
      ->capture_default_str();
  render->add_option("-f,--format", render_flags.format, "text, svg or ppm")->capture_default_str();
  render->add_option("--palette", render_flags.palette, "auto, example or spectrum")
      ->capture_default_str();
  render->add_option("--cell", render_flags.cell, "Pixels per tile (svg 20, ppm 1 by default)");
  render->add_option("-o,--out", render_flags.out, "Output file (default stdout)");

  std::string lhs, rhs;
  auto* iso = app.add_subcommand("isomorphic", "Exit 0 iff two systems are isomorphic");
  iso->add_option("first", lhs, "System JSON file")->required();
  iso->add_option("second", rhs, "System JSON file")->required();

  bool show_map = false;
  auto* canon = app.add_subcommand("canon", "Print the canonical form of a system");
  canon->add_option("system", system_path, "System JSON file")->required();
  canon->add_flag("--map", show_map, "Include the relabeling into the canonical form");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*check) status = cmd_check(system_path, coloring_path, quiet);
    else if (*solve) status = cmd_solve(solve_flags);
    else if (*classify_cmd) status = cmd_classify(system_path, classify_budget);
    else if (*census) status = cmd_census(census_flags);
    else if (*render) status = cmd_render(render_flags);
    else if (*iso) status = cmd_isomorphic(lhs, rhs);
    else if (*canon) status = cmd_canon(system_path, show_map);
  } catch (const InputError& e) {
    std::cerr << "colsys: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "colsys: " << e.what() << '\n';
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "colsys: " << e.what() << '\n';
    return kExitInput;
  }
  std::cout.flush();
  return status;
}
