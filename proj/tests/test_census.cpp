#include <filesystem>
#include <fstream>
#include <sstream>

#include "colsys/census.hpp"
#include "colsys/io.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace colsys;
namespace fs = std::filesystem;

namespace {

SearchBudget caps(std::size_t depth, std::size_t period) {
  SearchBudget b;
  b.depth_cap = depth;
  b.period_cap = period;
  return b;
}

std::string stream_text(int colors, CensusOptions opts) {
  std::ostringstream out;
  run_census(colors, opts, [&](const CensusRecord& r) { out << record_to_json(r).dump() << '\n'; });
  return out.str();
}

std::vector<CensusRecord> records(int colors, CensusOptions opts) {
  std::vector<CensusRecord> out;
  run_census(colors, opts, [&](const CensusRecord& r) { out.push_back(r); });
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("colsys_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("census") {

TEST_CASE("system enumeration order and counts") {
  CHECK(system_count(1) == 4);
  CHECK(system_count(2) == 512);
  CHECK(system_count(3) == 786432);
  CHECK(system_at(1, 0) == make_system(1, 0, {}, {}));

  for (int n = 1; n <= 3; ++n) {
    auto stream = enumerate_systems(n);
    std::uint64_t i = 0;
    while (auto s = stream.next()) {
      if (n < 3 || i % 97 == 0) {
        REQUIRE(*s == oracle::nth_system(n, i));
        REQUIRE(system_at(n, i) == *s);
        REQUIRE(system_index(*s) == i);
      }
      ++i;
    }
    CHECK(i == system_count(n));
  }
  CHECK_THROWS(system_count(0));
  CHECK_THROWS(system_count(6));
  CHECK_THROWS(SystemStream(9));

  // n = 8 streams even though its count overflows 64 bits
  auto big = enumerate_systems(8);
  auto first = big.next();
  auto second = big.next();
  REQUIRE(first);
  REQUIRE(second);
  CHECK(second->vertical.contains(7, 7));
  CHECK(second->vertical.size() == 1);
}

TEST_CASE("one-color census") {
  CensusOptions opts;
  opts.budget = caps(10, 2);
  auto recs = records(1, opts);
  REQUIRE(recs.size() == 4);
  // hand enumeration: empty, V only, H only, both
  CHECK(recs[0].verdict == Verdict::bounded(1));
  CHECK(recs[1].verdict == Verdict::bounded(2));
  CHECK(recs[2].verdict == Verdict::bounded(1));
  CHECK(recs[3].verdict.kind == VerdictKind::HasColoring);

  auto s = run_census(1, opts, {});
  CHECK(s.total_systems == 4);
  CHECK(s.counts.bounded == 3);
  CHECK(s.counts.has_coloring == 1);
  CHECK(s.counts.unknown == 0);
  CHECK(s.mu_exact == 3u);
  CHECK(s.mu_lower_bound == 3);
  CHECK(s.champion == 1u);
  CHECK(s.champion_length == 2);

  CHECK(mu(1, caps(10, 2)).exact == 3u);
}

TEST_CASE("one-color census with a tiny depth cap") {
  // the length-2 system reaches the cap, so it stays unknown
  auto m = mu(1, caps(2, 2));
  CHECK_FALSE(m.exact.has_value());
  CHECK(m.lower_bound == 2);
}

TEST_CASE("two-color census regression values") {
  CensusOptions opts;
  opts.budget = caps(32, 4);
  auto s = run_census(2, opts, {});
  CHECK(s.total_systems == 512);
  CHECK(s.counts.total() == 512);
  CHECK(s.counts.bounded == 314);
  CHECK(s.counts.has_coloring == 198);
  CHECK(s.counts.unknown == 0);
  CHECK(s.class_counts.bounded == 157);
  CHECK(s.class_counts.has_coloring == 99);
  CHECK(s.mu_exact == 6u);
  CHECK(s.champion == 73u);
  CHECK(s.champion_length == 5);
  CHECK(oracle::max_length(system_at(2, 73), 8) == 5);

  // embedding monotonicity
  CHECK(mu(2, caps(32, 4)).lower_bound >= mu(1, caps(32, 4)).lower_bound);
  auto embedded = make_system(2, 0, {}, {{0, 0}});
  CHECK(oracle::max_length(embedded, 6) == 2);
}

TEST_CASE("two-color verdicts are confirmed by the oracles") {
  CensusOptions opts;
  opts.budget = caps(32, 4);
  for (auto& r : records(2, opts)) {
    auto sys = system_at(2, r.system_index);
    CHECK(r.canonical_id == system_index(oracle::canonical(sys)));
    if (r.verdict.kind == VerdictKind::Bounded) {
      const std::size_t L = r.verdict.length;
      auto p = oracle::profile(sys, L + 1);
      CHECK(p[L - 1] > 0);
      CHECK(p[L] == 0);
    } else {
      REQUIRE(r.verdict.kind == VerdictKind::HasColoring);
      CHECK(witness_is_valid(sys, r.verdict.witness));
      // the induced coloring of a few diagonals, checked independently
      CHECK(oracle::accepts(sys, expand_witness(r.verdict.witness, 66)));
    }
  }
}

TEST_CASE("verdicts are invariant under relabeling") {
  for (int n = 1; n <= 2; ++n) {
    for (std::uint64_t i = 0; i < system_count(n); ++i) {
      auto sys = system_at(n, i);
      auto v = classify(sys, caps(32, 4));
      for (auto& perm : oracle::permutations(n)) {
        auto u = classify(apply_bijection(sys, perm), caps(32, 4));
        CHECK(u.kind == v.kind);
        CHECK(u.length == v.length);
      }
    }
  }
}

TEST_CASE("record stream does not depend on the worker count") {
  CensusOptions opts;
  opts.budget = caps(32, 4);
  opts.block_size = 37;
  const std::string one = stream_text(2, opts);
  opts.jobs = 8;
  CHECK(stream_text(2, opts) == one);
  opts.jobs = 3;
  opts.block_size = 2048;
  CHECK(stream_text(2, opts) == one);
}

TEST_CASE("dedupe does not change the summary") {
  for (int n = 1; n <= 2; ++n) {
    CensusOptions opts;
    opts.budget = caps(32, 4);
    opts.dedupe = true;
    auto on = records(n, opts);
    auto s_on = run_census(n, opts, {});
    opts.dedupe = false;
    auto off = records(n, opts);
    CHECK(run_census(n, opts, {}) == s_on);
    REQUIRE(on.size() == off.size());
    for (std::size_t i = 0; i < on.size(); ++i) {
      CHECK(on[i].canonical_id == off[i].canonical_id);
      CHECK(on[i].verdict.kind == off[i].verdict.kind);
      CHECK(on[i].verdict.length == off[i].verdict.length);
    }
  }
}

TEST_CASE("partial census from a starting index") {
  CensusOptions opts;
  opts.budget = caps(32, 4);
  auto all = records(2, opts);
  opts.begin = 300;
  auto tail = records(2, opts);
  REQUIRE(tail.size() == 212);
  for (std::size_t i = 0; i < tail.size(); ++i) CHECK(tail[i] == all[300 + i]);
}

TEST_CASE("file output and resume") {
  auto dir = scratch_dir("resume");
  CensusOptions opts;
  opts.budget = caps(32, 4);
  opts.block_size = 64;

  const auto full = dir / "full.jsonl";
  auto summary = run_census_to_file(2, opts, full, false);
  CHECK(summary.total_systems == 512);
  const std::string expected = slurp(full);
  CHECK(std::count(expected.begin(), expected.end(), '\n') == 512);
  CHECK(fs::exists(summary_path(full)));
  auto cur = load_json(cursor_path(full));
  CHECK(cur["next_index"] == 512);
  CHECK(cur["bytes"] == expected.size());

  // a run stopped after 128 records, with a torn line past the cursor
  const auto part = dir / "part.jsonl";
  std::size_t cut = 0;
  for (int lines = 0; lines < 128; ++lines) cut = expected.find('\n', cut) + 1;
  save_text(part, expected.substr(0, cut) + expected.substr(cut, 40));
  save_text(cursor_path(part),
            "{\"next_index\":128,\"bytes\":" + std::to_string(cut) + "}\n");
  auto resumed = run_census_to_file(2, opts, part, true);
  CHECK(slurp(part) == expected);
  CHECK(resumed == summary);
  CHECK(slurp(summary_path(part)) == slurp(summary_path(full)));

  // resuming a finished run changes nothing
  run_census_to_file(2, opts, part, true);
  CHECK(slurp(part) == expected);

  // without --resume the file starts over
  run_census_to_file(2, opts, part, false);
  CHECK(slurp(part) == expected);

  save_text(cursor_path(part), "{\"next_index\": \"x\"}");
  CHECK_THROWS_AS(run_census_to_file(2, opts, part, true), InputError);
  save_text(cursor_path(part), "{\"next_index\":5,\"bytes\":999999}");
  CHECK_THROWS_AS(run_census_to_file(2, opts, part, true), InputError);

  CHECK_THROWS_AS(run_census_to_file(1, opts, dir / "missing" / "x.jsonl", false), InputError);
  fs::remove_all(dir);
}

}
