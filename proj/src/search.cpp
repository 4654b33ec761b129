#include "colsys/search.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "colsys/checker.hpp"
#include "colsys/diagcodec.hpp"

namespace colsys {

namespace {

enum class Step { Descend, Skip, Stop };

// Depth-first walk over acceptable sequences in lexicographic order. Every
// placement is checked against at most the left and lower neighbor of its
// tile, both of which have smaller diagonal indices.
class SequenceWalker {
 public:
  SequenceWalker(const ColoringSystem& sys, std::optional<std::uint64_t> node_cap)
      : sys_(sys), node_cap_(node_cap) {
    for (auto [c, d] : sys.horizontal.pairs()) h_into_[d] |= ColorMask{1} << c;
    for (auto [c, d] : sys.vertical.pairs()) v_into_[d] |= ColorMask{1} << c;
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Subtrees that provably cannot produce a sequence longer than `target - 1`
  /// are skipped. 0 disables the check.
  void set_prune_target(std::size_t target) { prune_target_ = target; }
  bool exhausted_budget() const { return out_of_nodes_; }

  /// Calls visit(seq) for every acceptable strict extension of `prefix` up to
  /// `max_len` colors. Returns false if stopped by the visitor or the budget.
  /// With `dead` set, states whose subtree was fully walked are recorded and
  /// skipped when reached again; only valid when the visitor never returns
  /// Skip and stops on the first success.
  template <class Visit>
  bool walk(const ColorSequence& prefix, std::size_t max_len, Visit&& visit,
            std::unordered_set<std::string>* dead = nullptr) {
    seq_ = prefix;
    if (seq_.size() >= max_len) return true;
    grow_tiles(max_len);
    if (dead && dead->contains(state_key())) return true;
    std::vector<ColorMask> pending{candidates()};
    while (!pending.empty()) {
      ColorMask& mask = pending.back();
      if (mask == 0) {
        if (dead && dead->size() < kMaxDeadStates) dead->insert(state_key());
        pending.pop_back();
        if (pending.empty()) break;
        seq_.pop_back();
        continue;
      }
      const auto color = static_cast<Color>(std::countr_zero(mask));
      mask &= mask - 1;
      if (node_cap_ && nodes_ >= *node_cap_) {
        out_of_nodes_ = true;
        return false;
      }
      ++nodes_;
      seq_.push_back(color);
      const Step step = visit(static_cast<const ColorSequence&>(seq_));
      if (step == Step::Stop) return false;
      if (step == Step::Descend && seq_.size() < max_len &&
          !(dead && dead->contains(state_key())) && lookahead_ok()) {
        pending.push_back(candidates());
      } else {
        seq_.pop_back();
      }
    }
    return true;
  }

 private:
  static constexpr std::size_t kMaxDeadStates = std::size_t{1} << 22;
  static constexpr int kLookaheadRounds = 2;
  static constexpr std::size_t kLookaheadDiagonals = 4;

  void grow_tiles(std::size_t len) {
    while (diag_.size() < len) {
      const Tile t = diag_tile(diag_.size());
      diag_.push_back(t.x + t.y);
      has_left_.push_back(t.x > 0);
      has_below_.push_back(t.y > 0);
    }
  }

  ColorMask candidates() const {
    const std::size_t k = seq_.size();
    if (k == 0) return ColorMask{1} << sys_.origin;
    const std::size_t diag = diag_[k];
    ColorMask mask = sys_.all_colors();
    if (has_left_[k]) mask &= sys_.horizontal.row(seq_[k - diag - 1]);
    if (has_below_[k]) mask &= sys_.vertical.row(seq_[k - diag]);
    return mask;
  }

  ColorMask successors(const Relation& rel, ColorMask from) const {
    ColorMask out = 0;
    for (; from != 0; from &= from - 1) out |= rel.row(static_cast<Color>(std::countr_zero(from)));
    return out;
  }

  ColorMask predecessors_into(const std::array<ColorMask, kMaxColors>& into, ColorMask to) const {
    ColorMask out = 0;
    for (; to != 0; to &= to - 1) out |= into[std::countr_zero(to)];
    return out;
  }

  // Arc consistency over the current diagonal and the next few: every tile
  // keeps a set of colors, and a color survives only while it is compatible
  // with some color of each neighbor in the window. An empty set at index i
  // means no extension reaches length i + 1.
  bool lookahead_ok() {
    if (prune_target_ == 0) return true;
    const std::size_t k = seq_.size();  // next index to color
    const std::size_t diag = k < diag_.size() ? diag_[k] : diag_of_index(k);
    const std::uint64_t first = triangular(diag);
    if (first >= prune_target_) return true;

    // layers_[0] is the current diagonal; only tiles with index < target count.
    layers_.clear();
    std::size_t d = diag;
    std::uint64_t start = first;
    while (layers_.size() <= kLookaheadDiagonals && start < prune_target_) {
      const std::size_t len = static_cast<std::size_t>(
          std::min<std::uint64_t>(d + 1, prune_target_ - start));
      layers_.emplace_back(len, sys_.all_colors());
      start += d + 1;
      ++d;
    }
    const std::size_t prev_first = diag == 0 ? 0 : first - diag;
    for (std::size_t x = 0; x < layers_[0].size(); ++x) {
      const std::size_t idx = first + x;
      if (idx < k) {
        layers_[0][x] = ColorMask{1} << seq_[idx];
        continue;
      }
      ColorMask m = sys_.all_colors();
      if (x > 0) m &= sys_.horizontal.row(seq_[prev_first + x - 1]);
      if (x < diag) m &= sys_.vertical.row(seq_[prev_first + x]);
      if (m == 0) return false;
      layers_[0][x] = m;
    }

    for (int round = 0; round < kLookaheadRounds; ++round) {
      bool changed = false;
      // Forward: tile x of layer l+1 has left neighbor x-1 and lower neighbor x
      // in layer l (tile index diag+l is the diagonal number of layer l).
      for (std::size_t l = 0; l + 1 < layers_.size(); ++l) {
        const std::size_t dl = diag + l;
        auto& cur = layers_[l];
        auto& nxt = layers_[l + 1];
        for (std::size_t x = 0; x < nxt.size(); ++x) {
          ColorMask m = nxt[x];
          if (x > 0 && x - 1 < cur.size()) m &= successors(sys_.horizontal, cur[x - 1]);
          if (x <= dl && x < cur.size()) m &= successors(sys_.vertical, cur[x]);
          if (m == 0) return false;
          if (m != nxt[x]) {
            nxt[x] = m;
            changed = true;
          }
        }
      }
      // Backward: tile x of layer l is the lower neighbor of x and the left
      // neighbor of x+1 in layer l+1.
      for (std::size_t l = layers_.size() - 1; l-- > 0;) {
        auto& cur = layers_[l];
        const auto& nxt = layers_[l + 1];
        for (std::size_t x = 0; x < cur.size(); ++x) {
          ColorMask m = cur[x];
          if (x < nxt.size()) m &= predecessors_into(v_into_, nxt[x]);
          if (x + 1 < nxt.size()) m &= predecessors_into(h_into_, nxt[x + 1]);
          if (m == 0) return false;
          if (m != cur[x]) {
            cur[x] = m;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    return true;
  }

  // The colors any future placement can still reference, keyed by position.
  std::string state_key() const {
    const std::size_t k = seq_.size();
    std::string key = std::to_string(k);
    key.push_back(':');
    if (k == 0) return key;
    const std::size_t diag = k < diag_.size() ? diag_[k] : diag_of_index(k);
    const std::size_t start = k >= diag + 1 ? k - diag - 1 : 0;
    for (std::size_t i = start; i < k; ++i) key.push_back(static_cast<char>(seq_[i]));
    return key;
  }

  const ColoringSystem& sys_;
  std::optional<std::uint64_t> node_cap_;
  std::uint64_t nodes_ = 0;
  bool out_of_nodes_ = false;
  ColorSequence seq_;
  std::vector<std::size_t> diag_;
  std::vector<bool> has_left_;
  std::vector<bool> has_below_;
  std::size_t prune_target_ = 0;
  std::vector<std::vector<ColorMask>> layers_;
  std::array<ColorMask, kMaxColors> h_into_{};  // h_into_[d] = {c : (c, d) in H}
  std::array<ColorMask, kMaxColors> v_into_{};
};

void require_accepted(const ColoringSystem& sys, const ColorSequence& prefix) {
  if (!check_sequence(sys, prefix)) throw InputError("prefix is not an acceptable sequence");
}

}  // namespace

MaxLengthResult max_accept_length(const ColoringSystem& sys, const SearchBudget& budget) {
  require_valid(sys);
  if (budget.depth_cap < 1) throw std::invalid_argument("depth_cap must be at least 1");
  MaxLengthResult result;
  result.length = 1;
  if (budget.depth_cap == 1) {
    result.kind = MaxLengthKind::ReachedCap;
    return result;
  }
  SequenceWalker walker(sys, budget.node_cap);
  walker.set_prune_target(2);
  std::unordered_set<std::string> dead;
  bool reached = false;
  walker.walk(
      ColorSequence{sys.origin}, budget.depth_cap,
      [&](const ColorSequence& seq) {
        if (seq.size() > result.length) {
          result.length = seq.size();
          walker.set_prune_target(std::min(budget.depth_cap, result.length + 1));
        }
        if (seq.size() == budget.depth_cap) {
          reached = true;
          return Step::Stop;
        }
        return Step::Descend;
      },
      &dead);
  result.nodes = walker.nodes() + 1;
  if (reached) {
    result.kind = MaxLengthKind::ReachedCap;
  } else if (walker.exhausted_budget()) {
    result.kind = MaxLengthKind::Indeterminate;
  } else {
    result.kind = MaxLengthKind::ExactMax;
  }
  return result;
}

Enumeration enumerate(const ColoringSystem& sys, std::size_t length, std::size_t limit) {
  require_valid(sys);
  if (length < 1) throw std::invalid_argument("enumeration length must be at least 1");
  Enumeration out;
  const ColorSequence root{sys.origin};
  if (length == 1) {
    out.sequences.push_back(root);
    return out;
  }
  SequenceWalker walker(sys, std::nullopt);
  walker.set_prune_target(length);
  walker.walk(root, length, [&](const ColorSequence& seq) {
    if (seq.size() < length) return Step::Descend;
    if (limit != 0 && out.sequences.size() == limit) {
      out.truncated = true;
      return Step::Stop;
    }
    out.sequences.push_back(seq);
    return Step::Skip;
  });
  return out;
}

LengthProfile length_profile(const ColoringSystem& sys, const SearchBudget& budget) {
  require_valid(sys);
  if (budget.depth_cap < 1) throw std::invalid_argument("depth_cap must be at least 1");
  LengthProfile profile;
  profile.counts.assign(budget.depth_cap, 0);
  profile.counts[0] = 1;
  SequenceWalker walker(sys, budget.node_cap);
  walker.walk(ColorSequence{sys.origin}, budget.depth_cap, [&](const ColorSequence& seq) {
    ++profile.counts[seq.size() - 1];
    return Step::Descend;
  });
  profile.nodes = walker.nodes() + 1;
  if (walker.exhausted_budget()) profile.status = SearchStatus::Indeterminate;
  return profile;
}

std::optional<bool> extends_to(const ColoringSystem& sys, const ColorSequence& prefix,
                               std::size_t target, std::optional<std::uint64_t> node_cap) {
  require_accepted(sys, prefix);
  if (prefix.size() >= target) return true;
  SequenceWalker walker(sys, node_cap);
  walker.set_prune_target(target);
  std::unordered_set<std::string> dead;
  bool found = false;
  walker.walk(
      prefix, target,
      [&](const ColorSequence& seq) {
        if (seq.size() == target) {
          found = true;
          return Step::Stop;
        }
        return Step::Descend;
      },
      &dead);
  if (found) return true;
  if (walker.exhausted_budget()) return std::nullopt;
  return false;
}

std::vector<Color> extendable_colors(const ColoringSystem& sys, const ColorSequence& prefix,
                                     std::size_t horizon) {
  require_accepted(sys, prefix);
  const std::size_t target = std::max(horizon, prefix.size() + 1);
  std::vector<Color> out;
  ColorSequence next = prefix;
  for (ColorMask m = allowed_colors(sys, prefix, prefix.size()); m != 0; m &= m - 1) {
    next.push_back(static_cast<Color>(std::countr_zero(m)));
    if (extends_to(sys, next, target).value_or(false)) out.push_back(next.back());
    next.pop_back();
  }
  return out;
}

ChainResult build_chain(const ColoringSystem& sys, std::size_t horizon,
                        const SearchBudget& budget) {
  require_valid(sys);
  if (horizon < 1) throw std::invalid_argument("chain horizon must be at least 1");
  ChainResult result;
  const ColorSequence root{sys.origin};
  if (horizon == 1) {
    result.status = ChainStatus::Reached;
    result.sequence = root;
    return result;
  }
  // The least color extending to the horizon at each step is exactly the
  // lexicographically first length-`horizon` leaf of the walk.
  SequenceWalker walker(sys, budget.node_cap);
  walker.set_prune_target(horizon);
  std::unordered_set<std::string> dead;
  walker.walk(
      root, horizon,
      [&](const ColorSequence& seq) {
        if (seq.size() == horizon) {
          result.sequence = seq;
          result.status = ChainStatus::Reached;
          return Step::Stop;
        }
        return Step::Descend;
      },
      &dead);
  if (result.status != ChainStatus::Reached) {
    result.status = walker.exhausted_budget() ? ChainStatus::Indeterminate
                                              : ChainStatus::Unreachable;
  }
  return result;
}

}  // namespace colsys
