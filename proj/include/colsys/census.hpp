#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>

#include "colsys/core.hpp"
#include "colsys/search.hpp"

namespace colsys {

/// Largest color count for which every system index fits in 64 bits.
inline constexpr int kMaxIndexedColors = 5;

/// n * 2^(n^2) * 2^(n^2). Requires 1 <= n <= kMaxIndexedColors.
std::uint64_t system_count(int colors);

/// Systems are ordered by origin, then H mask, then V mask:
/// index = (origin * 2^(n^2) + H) * 2^(n^2) + V.
ColoringSystem system_at(int colors, std::uint64_t index);
std::uint64_t system_index(const ColoringSystem& sys);

/// Streams every system with `colors` colors in index order. Works for the
/// whole census range 1 <= colors <= 8, including counts beyond 64 bits.
class SystemStream {
 public:
  explicit SystemStream(int colors);
  std::optional<ColoringSystem> next();

 private:
  int colors_;
  int bits_;
  Color origin_ = 0;
  std::uint64_t h_ = 0;
  std::uint64_t v_ = 0;
  bool done_ = false;
};

SystemStream enumerate_systems(int colors);

struct CensusRecord {
  std::uint64_t system_index = 0;
  /// Index of the canonical form, i.e. the least index in the isomorphism class.
  std::uint64_t canonical_id = 0;
  Verdict verdict;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

struct VerdictCounts {
  std::uint64_t bounded = 0;
  std::uint64_t has_coloring = 0;
  std::uint64_t unknown = 0;

  void add(VerdictKind kind);
  std::uint64_t total() const { return bounded + has_coloring + unknown; }
  friend bool operator==(const VerdictCounts&, const VerdictCounts&) = default;
};

struct CensusSummary {
  int colors = 0;
  std::uint64_t total_systems = 0;
  /// Per system.
  VerdictCounts counts;
  /// Per isomorphism class (records whose index is their canonical id).
  VerdictCounts class_counts;
  /// 1 + the largest bounded length; present iff no verdict is Unknown.
  std::optional<std::uint64_t> mu_exact;
  std::uint64_t mu_lower_bound = 0;
  std::optional<std::uint64_t> champion;
  std::uint64_t champion_length = 0;
  SearchBudget budget;

  friend bool operator==(const CensusSummary& a, const CensusSummary& b) {
    return a.colors == b.colors && a.total_systems == b.total_systems &&
           a.counts == b.counts && a.class_counts == b.class_counts &&
           a.mu_exact == b.mu_exact && a.mu_lower_bound == b.mu_lower_bound &&
           a.champion == b.champion && a.champion_length == b.champion_length;
  }
};

/// Accumulates records (in index order) into a summary.
class CensusTally {
 public:
  CensusTally(int colors, SearchBudget budget);
  void add(const CensusRecord& record);
  std::uint64_t seen() const { return seen_; }
  CensusSummary summary() const;

 private:
  CensusSummary summary_;
  std::uint64_t seen_ = 0;
};

struct CensusOptions {
  SearchBudget budget;
  /// Classify one system per isomorphism class and relabel its verdict.
  bool dedupe = true;
  unsigned jobs = 1;
  /// First index to classify; earlier records are assumed already emitted.
  std::uint64_t begin = 0;
  /// Indices per scheduling block; records are emitted after each block.
  std::uint64_t block_size = 2048;
};

using RecordSink = std::function<void(const CensusRecord&)>;
/// Called after each block with the next unprocessed index.
using BlockCallback = std::function<void(std::uint64_t next_index)>;

/// Classifies systems [options.begin, system_count(colors)) and feeds every
/// record to `sink` in index order, independent of options.jobs. The returned
/// summary covers only the records produced by this call.
CensusSummary run_census(int colors, const CensusOptions& options, const RecordSink& sink,
                         const BlockCallback& on_block = {});

struct MuBound {
  std::optional<std::uint64_t> exact;
  std::uint64_t lower_bound = 0;
};

MuBound mu(int colors, const SearchBudget& budget, unsigned jobs = 1);

/// Census streamed to `out` as JSON Lines, with `out`.cursor recording the
/// resumption point and `out`.summary.json written at the end. With `resume`,
/// records past the cursor are discarded and the run continues from it.
/// Throws InputError if the files cannot be written or the cursor is corrupt.
CensusSummary run_census_to_file(int colors, const CensusOptions& options,
                                 const std::filesystem::path& out, bool resume);

std::filesystem::path cursor_path(const std::filesystem::path& out);
std::filesystem::path summary_path(const std::filesystem::path& out);

}  // namespace colsys
