#include "colsys/census.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "colsys/io.hpp"

namespace colsys {

namespace {

void require_indexed(int colors) {
  if (colors < 1 || colors > kMaxIndexedColors) {
    throw InputError("indexed census needs 1 <= colors <= " +
                     std::to_string(kMaxIndexedColors) + ", got " + std::to_string(colors));
  }
}

std::uint64_t low_mask(int bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Runs fn(lo, hi) over contiguous slices of [0, count) on up to `jobs` threads.
template <class Fn>
void parallel_ranges(std::size_t count, unsigned jobs, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (workers <= 1) {
    fn(std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([&, lo, hi] {
      try {
        fn(lo, hi);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

Bijection invert(const Bijection& perm) {
  Bijection inv(perm.size());
  for (std::size_t c = 0; c < perm.size(); ++c) inv[perm[c]] = static_cast<Color>(c);
  return inv;
}

}  // namespace

std::uint64_t system_count(int colors) {
  require_indexed(colors);
  return static_cast<std::uint64_t>(colors) << (2 * colors * colors);
}

ColoringSystem system_at(int colors, std::uint64_t index) {
  if (index >= system_count(colors)) throw InputError("system index out of range");
  const int bits = colors * colors;
  ColoringSystem sys;
  sys.colors = colors;
  sys.vertical = relation_from_mask(index & low_mask(bits), colors);
  sys.horizontal = relation_from_mask((index >> bits) & low_mask(bits), colors);
  sys.origin = static_cast<Color>(index >> (2 * bits));
  return sys;
}

std::uint64_t system_index(const ColoringSystem& sys) {
  require_indexed(sys.colors);
  require_valid(sys);
  const int bits = sys.colors * sys.colors;
  return ((std::uint64_t{sys.origin} << bits | relation_mask(sys.horizontal, sys.colors))
          << bits) |
         relation_mask(sys.vertical, sys.colors);
}

SystemStream::SystemStream(int colors) : colors_(colors), bits_(colors * colors) {
  if (colors < 1 || colors > kMaxCensusColors) {
    throw InputError("census needs 1 <= colors <= " + std::to_string(kMaxCensusColors));
  }
}

std::optional<ColoringSystem> SystemStream::next() {
  if (done_) return std::nullopt;
  ColoringSystem sys;
  sys.colors = colors_;
  sys.origin = origin_;
  sys.horizontal = relation_from_mask(h_, colors_);
  sys.vertical = relation_from_mask(v_, colors_);
  const std::uint64_t top = low_mask(bits_);
  if (v_ != top) {
    ++v_;
  } else {
    v_ = 0;
    if (h_ != top) {
      ++h_;
    } else {
      h_ = 0;
      if (++origin_ == colors_) done_ = true;
    }
  }
  return sys;
}

SystemStream enumerate_systems(int colors) { return SystemStream(colors); }

void VerdictCounts::add(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Bounded:
      ++bounded;
      break;
    case VerdictKind::HasColoring:
      ++has_coloring;
      break;
    case VerdictKind::Unknown:
      ++unknown;
      break;
  }
}

CensusTally::CensusTally(int colors, SearchBudget budget) {
  summary_.colors = colors;
  summary_.total_systems = system_count(colors);
  summary_.budget = budget;
}

void CensusTally::add(const CensusRecord& record) {
  ++seen_;
  summary_.counts.add(record.verdict.kind);
  if (record.system_index == record.canonical_id) summary_.class_counts.add(record.verdict.kind);
  if (record.verdict.kind == VerdictKind::Bounded &&
      (!summary_.champion || record.verdict.length > summary_.champion_length)) {
    summary_.champion = record.system_index;
    summary_.champion_length = record.verdict.length;
  }
}

CensusSummary CensusTally::summary() const {
  CensusSummary s = summary_;
  s.mu_lower_bound = s.champion ? s.champion_length + 1 : 0;
  if (s.counts.unknown == 0 && seen_ == s.total_systems) s.mu_exact = s.mu_lower_bound;
  return s;
}

CensusSummary run_census(int colors, const CensusOptions& options, const RecordSink& sink,
                         const BlockCallback& on_block) {
  const std::uint64_t total = system_count(colors);
  if (options.begin > total) throw InputError("census start index past the end");
  const std::uint64_t block = std::max<std::uint64_t>(1, options.block_size);

  CensusTally tally(colors, options.budget);
  // Verdicts of canonical representatives, keyed by canonical id.
  std::unordered_map<std::uint64_t, Verdict> cache;

  struct Slot {
    ColoringSystem sys;
    std::uint64_t canonical_id = 0;
    Bijection to_canonical;
    Verdict verdict;
  };

  for (std::uint64_t lo = options.begin; lo < total; lo += block) {
    const std::uint64_t hi = std::min(total, lo + block);
    std::vector<Slot> slots(hi - lo);

    parallel_ranges(slots.size(), options.jobs, [&](std::size_t a, std::size_t b) {
      for (std::size_t i = a; i < b; ++i) {
        Slot& slot = slots[i];
        slot.sys = system_at(colors, lo + i);
        CanonicalResult canon = canonical_form_with_map(slot.sys);
        slot.canonical_id = system_index(canon.system);
        slot.to_canonical = std::move(canon.to_canonical);
        if (!options.dedupe) slot.verdict = classify(slot.sys, options.budget);
      }
    });

    if (options.dedupe) {
      std::vector<std::uint64_t> missing;
      for (const Slot& slot : slots) {
        if (!cache.contains(slot.canonical_id)) missing.push_back(slot.canonical_id);
      }
      std::sort(missing.begin(), missing.end());
      missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
      std::vector<Verdict> verdicts(missing.size());
      parallel_ranges(missing.size(), options.jobs, [&](std::size_t a, std::size_t b) {
        for (std::size_t i = a; i < b; ++i) {
          verdicts[i] = classify(system_at(colors, missing[i]), options.budget);
        }
      });
      for (std::size_t i = 0; i < missing.size(); ++i) {
        cache.emplace(missing[i], std::move(verdicts[i]));
      }
      for (Slot& slot : slots) {
        slot.verdict = cache.at(slot.canonical_id);
        if (slot.verdict.kind == VerdictKind::HasColoring) {
          slot.verdict.witness = apply_bijection(slot.verdict.witness, invert(slot.to_canonical));
        }
      }
    }

    for (std::size_t i = 0; i < slots.size(); ++i) {
      CensusRecord record{lo + i, slots[i].canonical_id, std::move(slots[i].verdict)};
      tally.add(record);
      if (sink) sink(record);
    }
    if (on_block) on_block(hi);
  }
  return tally.summary();
}

MuBound mu(int colors, const SearchBudget& budget, unsigned jobs) {
  CensusOptions options;
  options.budget = budget;
  options.jobs = jobs;
  CensusSummary s = run_census(colors, options, {});
  return {s.mu_exact, s.mu_lower_bound};
}

std::filesystem::path cursor_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".cursor");
}

std::filesystem::path summary_path(const std::filesystem::path& out) {
  return std::filesystem::path(out.string() + ".summary.json");
}

namespace {

struct Cursor {
  std::uint64_t next_index = 0;
  std::uint64_t bytes = 0;
};

void write_cursor(const std::filesystem::path& path, const Cursor& c) {
  Json j;
  j["next_index"] = c.next_index;
  j["bytes"] = c.bytes;
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  save_text(tmp, j.dump() + "\n");
  std::filesystem::rename(tmp, path);
}

Cursor read_cursor(const std::filesystem::path& path) {
  Json j = load_json(path);
  if (!j.is_object() || !j.contains("next_index") || !j.contains("bytes") ||
      !j["next_index"].is_number_unsigned() || !j["bytes"].is_number_unsigned()) {
    throw InputError(path.string() + ": corrupt census cursor");
  }
  return {j["next_index"].get<std::uint64_t>(), j["bytes"].get<std::uint64_t>()};
}

}  // namespace

CensusSummary run_census_to_file(int colors, const CensusOptions& options,
                                 const std::filesystem::path& out, bool resume) {
  namespace fs = std::filesystem;
  CensusTally tally(colors, options.budget);
  Cursor cursor;

  if (resume && fs::exists(cursor_path(out)) && fs::exists(out)) {
    cursor = read_cursor(cursor_path(out));
    std::error_code ec;
    if (fs::file_size(out, ec) < cursor.bytes || ec) {
      throw InputError(out.string() + ": shorter than its cursor says");
    }
    fs::resize_file(out, cursor.bytes);
    std::ifstream in(out, std::ios::binary);
    std::string line;
    std::uint64_t expected = 0;
    while (std::getline(in, line)) {
      CensusRecord r = record_from_json(parse_json(line, out.string()));
      if (r.system_index != expected++) {
        throw InputError(out.string() + ": records out of order before the cursor");
      }
      tally.add(r);
    }
    if (expected != cursor.next_index) {
      throw InputError(out.string() + ": record count disagrees with the cursor");
    }
  }

  std::ofstream file(out, std::ios::binary | (cursor.next_index > 0 ? std::ios::app
                                                                     : std::ios::trunc));
  if (!file) throw InputError("cannot write " + out.string());
  write_cursor(cursor_path(out), cursor);

  CensusOptions opts = options;
  opts.begin = cursor.next_index;
  run_census(
      colors, opts,
      [&](const CensusRecord& r) {
        tally.add(r);
        const std::string line = record_to_json(r).dump() + "\n";
        file << line;
        cursor.bytes += line.size();
      },
      [&](std::uint64_t next) {
        file.flush();
        if (!file) throw InputError("failed writing " + out.string());
        cursor.next_index = next;
        write_cursor(cursor_path(out), cursor);
      });

  CensusSummary summary = tally.summary();
  save_text(summary_path(out), summary_to_json(summary).dump(2) + "\n");
  return summary;
}

}  // namespace colsys
