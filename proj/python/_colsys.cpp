#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "colsys/census.hpp"
#include "colsys/checker.hpp"
#include "colsys/diagcodec.hpp"
#include "colsys/fixtures.hpp"
#include "colsys/io.hpp"
#include "colsys/render.hpp"
#include "colsys/search.hpp"

namespace py = pybind11;
using namespace colsys;

namespace {

// JSON values cross the boundary as Python objects via the json module.
py::object to_python(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

Json from_python(const py::handle& obj) {
  const py::object text = py::module_::import("json").attr("dumps")(obj);
  return parse_json(text.cast<std::string>(), "argument");
}

SearchBudget budget(std::size_t depth_cap, std::size_t period_cap, std::size_t preperiod_cap,
                    std::optional<std::uint64_t> node_cap) {
  SearchBudget b;
  b.depth_cap = depth_cap;
  b.period_cap = period_cap;
  b.preperiod_cap = preperiod_cap;
  b.node_cap = node_cap;
  return b;
}

ColorSequence coloring_arg(const py::handle& obj) {
  return as_sequence(coloring_from_json(from_python(obj)));
}

py::object violation_dict(const CheckResult& r) {
  if (r.accepted()) return py::none();
  const Violation& v = *r.violation;
  py::dict d;
  d["kind"] = v.kind == ViolationKind::Origin       ? "origin"
              : v.kind == ViolationKind::Horizontal ? "horizontal"
                                                    : "vertical";
  d["index"] = v.index;
  d["from"] = py::make_tuple(v.from.x, v.from.y);
  d["to"] = py::make_tuple(v.to.x, v.to.y);
  d["message"] = v.describe();
  return std::move(d);
}

}  // namespace

PYBIND11_MODULE(_colsys, m) {
  m.doc() = "Coloring systems: checking, search and census";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);

  py::class_<ColoringSystem>(m, "ColoringSystem")
      .def(py::init(&make_system), py::arg("colors"), py::arg("origin"),
           py::arg("horizontal") = std::vector<std::pair<Color, Color>>{},
           py::arg("vertical") = std::vector<std::pair<Color, Color>>{})
      .def_readonly("colors", &ColoringSystem::colors)
      .def_readonly("origin", &ColoringSystem::origin)
      .def_property_readonly("horizontal",
                             [](const ColoringSystem& s) { return s.horizontal.pairs(); })
      .def_property_readonly("vertical", [](const ColoringSystem& s) { return s.vertical.pairs(); })
      .def("errors", &validate_system, "Violated invariants; empty when valid")
      .def("to_json", [](const ColoringSystem& s) { return to_python(system_to_json(s)); })
      .def_static("from_json", [](const py::object& o) { return system_from_json(from_python(o)); })
      .def_static("load", [](const std::string& path) { return load_system(path); })
      .def("__eq__", [](const ColoringSystem& a, const ColoringSystem& b) { return a == b; })
      .def("__repr__", [](const ColoringSystem& s) {
        return "ColoringSystem(" + system_to_json(s).dump() + ")";
      });

  m.def("example_system", &fixtures::example_system);
  m.def("example_triangle", [] { return fixtures::example_triangle().rows; },
        "Rows of the bundled 55-tile triangle, bottom row first");

  m.def("diag_index", [](std::uint64_t x, std::uint64_t y) { return diag_index({x, y}); });
  m.def("diag_tile", [](std::uint64_t k) {
    const Tile t = diag_tile(k);
    return py::make_tuple(t.x, t.y);
  });

  m.def(
      "check",
      [](const ColoringSystem& sys, const py::object& coloring) {
        return violation_dict(check_sequence(sys, coloring_arg(coloring)));
      },
      py::arg("system"), py::arg("coloring"),
      "None if accepted, else a description of the first violation. The coloring is a "
      "sequence or a {'depth', 'rows'} triangle.");
  m.def("is_prefix", &is_prefix);

  m.def(
      "max_accept_length",
      [](const ColoringSystem& sys, std::size_t depth_cap, std::optional<std::uint64_t> node_cap) {
        const auto r = max_accept_length(sys, budget(depth_cap, 1, 0, node_cap));
        const char* kind = r.kind == MaxLengthKind::ExactMax     ? "exact"
                           : r.kind == MaxLengthKind::ReachedCap ? "reached_cap"
                                                                 : "indeterminate";
        return py::make_tuple(kind, r.length);
      },
      py::arg("system"), py::arg("depth_cap") = 64, py::arg("node_cap") = py::none());
  m.def(
      "enumerate",
      [](const ColoringSystem& sys, std::size_t length, std::size_t limit) {
        return enumerate(sys, length, limit).sequences;
      },
      py::arg("system"), py::arg("length"), py::arg("limit") = 0);
  m.def(
      "length_profile",
      [](const ColoringSystem& sys, std::size_t depth_cap) {
        return length_profile(sys, budget(depth_cap, 1, 0, std::nullopt)).counts;
      },
      py::arg("system"), py::arg("depth_cap") = 16);
  m.def("extendable_colors", &extendable_colors, py::arg("system"), py::arg("prefix"),
        py::arg("horizon"));
  m.def(
      "build_chain",
      [](const ColoringSystem& sys, std::size_t horizon,
         std::optional<std::uint64_t> node_cap) -> std::optional<ColorSequence> {
        const auto r = build_chain(sys, horizon, budget(horizon, 1, 0, node_cap));
        if (r.status == ChainStatus::Indeterminate) throw InputError("node cap exhausted");
        if (r.status == ChainStatus::Unreachable) return std::nullopt;
        return r.sequence;
      },
      py::arg("system"), py::arg("horizon"), py::arg("node_cap") = py::none(),
      "The least chain up to `horizon`, or None if no sequence is that long.");
  m.def(
      "find_periodic_witness",
      [](const ColoringSystem& sys, std::size_t period_cap, std::size_t preperiod_cap) {
        const auto w = find_periodic_witness(sys, budget(1, period_cap, preperiod_cap, {}));
        return w ? to_python(witness_to_json(*w)) : py::none();
      },
      py::arg("system"), py::arg("period_cap") = 4, py::arg("preperiod_cap") = 2);
  m.def(
      "classify",
      [](const ColoringSystem& sys, std::size_t depth_cap, std::size_t period_cap,
         std::size_t preperiod_cap, std::optional<std::uint64_t> node_cap) {
        return to_python(
            verdict_to_json(classify(sys, budget(depth_cap, period_cap, preperiod_cap, node_cap))));
      },
      py::arg("system"), py::arg("depth_cap") = 64, py::arg("period_cap") = 4,
      py::arg("preperiod_cap") = 2, py::arg("node_cap") = py::none());

  m.def("canonical_form", &canonical_form);
  m.def("is_isomorphic", &is_isomorphic);

  m.def("system_count", &system_count);
  m.def("system_at", &system_at, py::arg("colors"), py::arg("index"));
  m.def("system_index", &system_index);
  m.def(
      "census",
      [](int colors, std::size_t depth_cap, std::size_t period_cap, std::size_t preperiod_cap,
         unsigned jobs, bool dedupe, bool records) {
        CensusOptions opts;
        opts.budget = budget(depth_cap, period_cap, preperiod_cap, {});
        opts.jobs = jobs;
        opts.dedupe = dedupe;
        std::vector<Json> lines;
        CensusSummary s;
        {
          py::gil_scoped_release release;
          s = run_census(colors, opts, [&](const CensusRecord& r) {
            if (records) lines.push_back(record_to_json(r));
          });
        }
        py::dict out;
        out["summary"] = to_python(summary_to_json(s));
        if (records) {
          py::list l;
          for (const auto& j : lines) l.append(to_python(j));
          out["records"] = l;
        }
        return out;
      },
      py::arg("colors"), py::arg("depth_cap") = 64, py::arg("period_cap") = 4,
      py::arg("preperiod_cap") = 2, py::arg("jobs") = 1, py::arg("dedupe") = true,
      py::arg("records") = false);

  m.def(
      "render",
      [](const py::object& coloring, const std::string& format) {
        const TriangleColoring tri = triangle_from_sequence(coloring_arg(coloring));
        const RenderFormat f = parse_render_format(format);
        Color top = 0;
        for (const auto& row : tri.rows)
          for (Color c : row) top = std::max(top, c);
        const Palette p = top < 13 ? Palette::example() : Palette::spectrum(top + 1);
        return render_triangle(tri, p, f);
      },
      py::arg("coloring"), py::arg("format") = "text");
}
