#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "colsys/core.hpp"

namespace colsys {

struct SearchBudget {
  /// Longest sequence length explored.
  std::size_t depth_cap = 64;
  /// Largest period tried in each axis by the witness search.
  std::size_t period_cap = 4;
  /// Largest preperiod tried in each axis by the witness search.
  std::size_t preperiod_cap = 2;
  /// Search nodes per operation; nullopt means unlimited.
  std::optional<std::uint64_t> node_cap;
};

enum class SearchStatus {
  Complete,       // the answer is exact
  Indeterminate,  // node_cap ran out first
};

enum class MaxLengthKind { ExactMax, ReachedCap, Indeterminate };

struct MaxLengthResult {
  MaxLengthKind kind = MaxLengthKind::Indeterminate;
  /// ExactMax: the maximum. ReachedCap: depth_cap. Indeterminate: longest seen.
  std::size_t length = 0;
  std::uint64_t nodes = 0;
};

/// ExactMax(L): some acceptable sequence has length L and none has L+1.
/// ReachedCap: an acceptable sequence of length depth_cap exists.
MaxLengthResult max_accept_length(const ColoringSystem& sys, const SearchBudget& budget);

struct Enumeration {
  std::vector<ColorSequence> sequences;
  bool truncated = false;
};

/// All acceptable sequences of exactly `length` in lexicographic order, at most
/// `limit` of them (0 = no limit).
Enumeration enumerate(const ColoringSystem& sys, std::size_t length, std::size_t limit = 0);

struct LengthProfile {
  /// counts[L] = number of acceptable sequences of length L + 1.
  std::vector<std::uint64_t> counts;
  SearchStatus status = SearchStatus::Complete;
  std::uint64_t nodes = 0;
};

LengthProfile length_profile(const ColoringSystem& sys, const SearchBudget& budget);

/// True iff some acceptable sequence of length `target` starts with `prefix`.
/// `prefix` must itself be acceptable. nullopt when node_cap runs out.
std::optional<bool> extends_to(const ColoringSystem& sys, const ColorSequence& prefix,
                               std::size_t target, std::optional<std::uint64_t> node_cap = {});

/// Colors c (as a sorted list) such that prefix + c is acceptable and extends
/// to an acceptable sequence of length max(horizon, |prefix| + 1).
std::vector<Color> extendable_colors(const ColoringSystem& sys, const ColorSequence& prefix,
                                     std::size_t horizon);

enum class ChainStatus { Reached, Unreachable, Indeterminate };

struct ChainResult {
  ChainStatus status = ChainStatus::Indeterminate;
  /// Reached: the length-`horizon` endpoint of the chain.
  ColorSequence sequence;
};

/// Builds (a0) ⊆ (a0,a1) ⊆ ... up to length `horizon`, taking at every step the
/// least color that still extends to the horizon.
ChainResult build_chain(const ColoringSystem& sys, std::size_t horizon,
                        const SearchBudget& budget = {});

/// Colors that can occur in a coloring of the whole quadrant: the greatest set
/// in which every color has an H-successor and a V-successor inside the set.
ColorMask live_colors(const ColoringSystem& sys);

struct WitnessShape {
  std::size_t period_x, period_y, preperiod_x, preperiod_y;
};

/// Candidate shapes in the order the witness search tries them: fewest cells
/// first, pure tori before shapes with a preperiod, then by periods.
std::vector<WitnessShape> witness_shapes(const SearchBudget& budget);

/// Witness with exactly this shape, if one exists. nullopt also covers a node
/// budget running out; `exhausted` reports that case.
std::optional<PeriodicWitness> find_witness_with_shape(const ColoringSystem& sys,
                                                       const WitnessShape& shape,
                                                       std::optional<std::uint64_t> node_cap,
                                                       bool* exhausted = nullptr);

std::optional<PeriodicWitness> find_periodic_witness(const ColoringSystem& sys,
                                                     const SearchBudget& budget);

/// HasColoring if a witness is found, else Bounded if the maximal length is
/// exact, else Unknown.
Verdict classify(const ColoringSystem& sys, const SearchBudget& budget);

}  // namespace colsys
