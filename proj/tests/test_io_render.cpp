#include <filesystem>

#include "colsys/fixtures.hpp"
#include "colsys/io.hpp"
#include "colsys/render.hpp"
#include "doctest.h"

using namespace colsys;

namespace {

// The example matrix as printed, top line first.
const char* kPaperMatrix = R"(8
9 & 11
1 & 5 & 4
8 & 10 & 9 & 8
0 & 4 & 0 & 1 & 2
8 & 9 & 7 & 8 & 9 & 8
9 & 11 & 12 & 10 & 9 & 11 & 12
0 & 4 & 0 & 4 & 0 & 4 & 0 & 4
8 & 9 & 8 & 9 & 8 & 9 & 8 & 9 & 8
1 & 2 & 0 & 1 & 2 & 0 & 1 & 2 & 0 & 1
)";

std::string normalize(std::string s) {
  std::string out;
  bool space = false;
  for (char c : s) {
    if (c == '&' || c == ' ' || c == '\t') {
      space = true;
      continue;
    }
    if (c == '\n') {
      space = false;
      out.push_back('\n');
      continue;
    }
    if (space && !out.empty() && out.back() != '\n') out.push_back(' ');
    space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("system files roundtrip and are written sorted") {
  auto sys = make_system(3, 2, {{2, 1}, {0, 0}, {2, 1}}, {{1, 2}, {0, 2}});
  Json j = system_to_json(sys);
  CHECK(j.dump() ==
        R"({"colors":3,"origin":2,"horizontal":[[0,0],[2,1]],"vertical":[[0,2],[1,2]]})");
  CHECK(system_from_json(j) == sys);
  CHECK(system_from_json(system_to_json(fixtures::example_system())) ==
        fixtures::example_system());

  auto unsorted = parse_json(R"({"colors":2,"origin":0,"horizontal":[[1,0],[0,1],[1,0]],"vertical":[]})");
  CHECK(system_from_json(unsorted).horizontal.size() == 2);
}

TEST_CASE("malformed system files are input errors") {
  const char* bad[] = {
      R"({"colors":2,"origin":0,"horizontal":[[0,2]],"vertical":[]})",
      R"({"colors":2,"origin":2,"horizontal":[],"vertical":[]})",
      R"({"colors":0,"origin":0,"horizontal":[],"vertical":[]})",
      R"({"colors":65,"origin":0,"horizontal":[],"vertical":[]})",
      R"({"colors":2,"origin":0,"horizontal":[[0]],"vertical":[]})",
      R"({"colors":2,"origin":0,"horizontal":[[0,-1]],"vertical":[]})",
      R"({"colors":2,"origin":0,"vertical":[]})",
      R"([1,2,3])",
  };
  for (const char* text : bad) CHECK_THROWS_AS(system_from_json(parse_json(text)), InputError);
}

TEST_CASE("parse errors carry the byte offset") {
  try {
    parse_json("{\"colors\": 2,", "sys.json");
    FAIL("no throw");
  } catch (const InputError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("sys.json") != std::string::npos);
    CHECK(msg.find("byte 14") != std::string::npos);
  }
  CHECK_THROWS_AS(load_json("/nonexistent/file.json"), InputError);
}

TEST_CASE("colorings: sequences and triangles") {
  auto seq = coloring_from_json(parse_json("[1, 8, 2]"));
  CHECK(as_sequence(seq) == ColorSequence{1, 8, 2});

  auto tri = fixtures::example_triangle();
  Json j = triangle_to_json(tri);
  CHECK(j["depth"] == 54);
  CHECK(j["rows"][0].size() == 10);
  CHECK(triangle_from_json(j) == tri);
  CHECK(as_sequence(coloring_from_json(j)) == sequence_from_triangle(tri));

  CHECK_THROWS_AS(coloring_from_json(parse_json("[]")), InputError);
  CHECK_THROWS_AS(coloring_from_json(parse_json("[1, -3]")), InputError);
  CHECK_THROWS_AS(coloring_from_json(parse_json("\"x\"")), InputError);
  CHECK_THROWS_AS(triangle_from_json(parse_json(R"({"depth":2,"rows":[[1,2,3]]})")), InputError);
}

TEST_CASE("verdicts and witnesses") {
  PeriodicWitness w;
  w.period_x = 2;
  w.preperiod_y = 1;
  w.cells = {{0, 1}, {1, 0}};
  CHECK(witness_from_json(witness_to_json(w)) == w);

  for (const Verdict& v : {Verdict::bounded(5), Verdict::has_coloring(w),
                           Verdict::unknown(12, 64, 4, true)}) {
    CHECK(verdict_from_json(verdict_to_json(v)) == v);
  }
  CHECK(verdict_to_json(Verdict::bounded(5)).dump() == R"({"verdict":"bounded","max_length":5})");

  CensusRecord r{73, 73, Verdict::bounded(5)};
  CHECK(record_to_json(r).dump() ==
        R"({"system_index":73,"canonical_id":73,"verdict":"bounded","detail":{"max_length":5}})");
  CHECK(record_from_json(record_to_json(r)) == r);
  CensusRecord u{3, 3, Verdict::unknown(7, 8, 2, false)};
  CHECK(record_from_json(record_to_json(u)) == u);
}

}

TEST_SUITE("render") {

TEST_CASE("text rendering matches the printed matrix") {
  auto text = render_text(fixtures::example_triangle());
  CHECK(normalize(text) == normalize(kPaperMatrix));
  const auto last = text.rfind('\n', text.size() - 2);
  CHECK(text.substr(last + 1) == "1 2 0 1 2 0 1 2 0 1\n");

  TriangleColoring origin;
  origin.rows = {{1}};
  CHECK(render_text(origin) == "1\n");
}

TEST_CASE("text rendering is a fixed point of parse and render") {
  auto text = render_text(fixtures::example_triangle());
  CHECK(parse_text_triangle(text) == fixtures::example_triangle());
  CHECK(render_text(parse_text_triangle(text)) == text);
  CHECK(parse_text_triangle(normalize(kPaperMatrix)) == fixtures::example_triangle());
  CHECK_THROWS_AS(parse_text_triangle("1 2\n3\n"), InputError);
  CHECK_THROWS_AS(parse_text_triangle("x\n"), InputError);
  CHECK_THROWS_AS(parse_text_triangle("\n"), InputError);
}

TEST_CASE("ppm of an expanded 2x1 witness") {
  PeriodicWitness w;
  w.period_x = 2;
  w.cells = {{0, 1}};
  auto tri = expand_witness_diagonals(w, 5);
  CHECK(tri.rows.size() == 6);

  const std::string R = "255 0 0", B = "0 0 255", W = "255 255 255";
  const std::string expected = "P3\n6 6\n255\n" +
                               R + ' ' + W + ' ' + W + ' ' + W + ' ' + W + ' ' + W + '\n' +
                               R + ' ' + B + ' ' + W + ' ' + W + ' ' + W + ' ' + W + '\n' +
                               R + ' ' + B + ' ' + R + ' ' + W + ' ' + W + ' ' + W + '\n' +
                               R + ' ' + B + ' ' + R + ' ' + B + ' ' + W + ' ' + W + '\n' +
                               R + ' ' + B + ' ' + R + ' ' + B + ' ' + R + ' ' + W + '\n' +
                               R + ' ' + B + ' ' + R + ' ' + B + ' ' + R + ' ' + B + '\n';
  CHECK(render_ppm(tri, Palette::example()) == expected);
  CHECK(render_ppm(tri, Palette::example(), 2).substr(0, 12) == "P3\n12 12\n255");
  CHECK(parse_text_triangle(render_text(tri)) == tri);
}

TEST_CASE("svg output") {
  auto svg = render_svg(fixtures::example_triangle(), Palette::example());
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t rects = 0;
  for (auto p = svg.find("<rect"); p != std::string::npos; p = svg.find("<rect", p + 1)) ++rects;
  CHECK(rects == 55);
  CHECK(svg.find("fill=\"#0000ff\"><title>(0, 0) 1 blue</title>") != std::string::npos);
  CHECK(svg == render_svg(fixtures::example_triangle(), Palette::example()));
}

TEST_CASE("palettes") {
  auto p = Palette::example();
  CHECK(p.size() == 13);
  CHECK(p.at(0).name == "red");
  CHECK(p.at(1).name == "blue");
  CHECK(p.at(2).name == "forest green");
  CHECK(p.at(12).name == "orange");
  CHECK_THROWS_AS(p.at(13), InputError);

  TriangleColoring t;
  t.rows = {{20}};
  CHECK_THROWS_AS(render_svg(t, p), InputError);
  CHECK_THROWS_AS(render_ppm(t, p), InputError);
  CHECK(render_text(t) == "20\n");
  CHECK(Palette::spectrum(30).size() == 30);
  CHECK_NOTHROW(render_ppm(t, Palette::spectrum(21)));

  CHECK(parse_render_format("svg") == RenderFormat::Svg);
  CHECK_THROWS_AS(parse_render_format("png"), InputError);
}

}
