// Canonical labeling of coloring systems.
//
// The canonical form minimizes (origin, H bits, V bits) with the bit strings in
// row-major order. The origin always receives label 0. Labels are then handed
// out in increasing order while the unlabeled colors are kept in an ordered
// partition: after label k is assigned, every cell is split into colors that
// are not / are H-successors of the newly labeled color. That split is the
// unique arrangement minimizing row k of H given rows 0..k-1, so only the
// choice of which first-cell color receives label k is branched on, and
// siblings with a larger row are discarded. Colors whose transposition is an
// automorphism of the system give isomorphic subtrees and are tried once.

#include <algorithm>
#include <bit>
#include <optional>

#include "colsys/core.hpp"

namespace colsys {

namespace {

using RowKey = std::uint64_t;  // column j stored at bit 63 - j

RowKey bit_at(int column) { return RowKey{1} << (63 - column); }

bool swap_is_automorphism(const Relation& rel, int n, Color x, Color y) {
  auto tau = [&](int c) { return static_cast<Color>(c == x ? y : (c == y ? x : c)); };
  for (int u = 0; u < n; ++u) {
    const Color tu = tau(u);
    for (int v = 0; v < n; ++v) {
      if (rel.contains(static_cast<Color>(u), static_cast<Color>(v)) !=
          rel.contains(tu, tau(v))) {
        return false;
      }
    }
  }
  return true;
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const ColoringSystem& sys) : sys_(sys), n_(sys.colors) {
    twin_class_.resize(static_cast<std::size_t>(n_));
    for (int x = 0; x < n_; ++x) {
      twin_class_[x] = static_cast<Color>(x);
      if (x == sys.origin) continue;
      for (int y = 0; y < x; ++y) {
        if (y == sys.origin) continue;
        const auto cx = static_cast<Color>(x);
        const auto cy = static_cast<Color>(y);
        if (swap_is_automorphism(sys.horizontal, n_, cx, cy) &&
            swap_is_automorphism(sys.vertical, n_, cx, cy)) {
          twin_class_[x] = twin_class_[y];
          break;
        }
      }
    }
  }

  CanonicalResult run() {
    std::vector<Color> order{sys_.origin};
    std::vector<std::vector<Color>> cells;
    std::vector<Color> rest;
    for (int c = 0; c < n_; ++c) {
      if (c != sys_.origin) rest.push_back(static_cast<Color>(c));
    }
    if (!rest.empty()) cells.push_back(std::move(rest));

    std::vector<RowKey> rows;
    rows.push_back(split_and_row(sys_.origin, order, cells));
    descend(order, cells, rows);

    CanonicalResult result;
    result.to_canonical.assign(static_cast<std::size_t>(n_), 0);
    for (int label = 0; label < n_; ++label) {
      result.to_canonical[best_order_[label]] = static_cast<Color>(label);
    }
    result.system = apply_bijection(sys_, result.to_canonical);
    return result;
  }

 private:
  // Splits every cell by H-successorship of `labeled` (non-successors first)
  // and returns the H row of `labeled` under the resulting arrangement.
  RowKey split_and_row(Color labeled, const std::vector<Color>& order,
                       std::vector<std::vector<Color>>& cells) const {
    RowKey row = 0;
    int column = 0;
    for (Color c : order) {
      if (sys_.horizontal.contains(labeled, c)) row |= bit_at(column);
      ++column;
    }
    std::vector<std::vector<Color>> refined;
    refined.reserve(cells.size() * 2);
    for (auto& cell : cells) {
      std::vector<Color> zeros;
      std::vector<Color> ones;
      for (Color c : cell) {
        (sys_.horizontal.contains(labeled, c) ? ones : zeros).push_back(c);
      }
      column += static_cast<int>(zeros.size());
      for (std::size_t i = 0; i < ones.size(); ++i) row |= bit_at(column++);
      if (!zeros.empty()) refined.push_back(std::move(zeros));
      if (!ones.empty()) refined.push_back(std::move(ones));
    }
    cells = std::move(refined);
    return row;
  }

  // -1, 0, 1 comparing the partial H rows against the best leaf.
  int compare_to_best(const std::vector<RowKey>& rows) const {
    if (!best_) return -1;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r] != best_->first[r]) return rows[r] < best_->first[r] ? -1 : 1;
    }
    return 0;
  }

  void descend(std::vector<Color>& order, std::vector<std::vector<Color>>& cells,
               std::vector<RowKey>& rows) {
    if (compare_to_best(rows) > 0) return;
    if (cells.empty()) {
      leaf(order, rows);
      return;
    }

    struct Branch {
      Color color;
      RowKey row;
      std::vector<std::vector<Color>> cells;
    };
    std::vector<Branch> branches;
    std::vector<Color> seen_classes;
    const auto& first = cells.front();
    for (std::size_t i = 0; i < first.size(); ++i) {
      const Color x = first[i];
      if (std::find(seen_classes.begin(), seen_classes.end(), twin_class_[x]) !=
          seen_classes.end()) {
        continue;
      }
      seen_classes.push_back(twin_class_[x]);

      std::vector<std::vector<Color>> next = cells;
      next.front().erase(next.front().begin() + static_cast<std::ptrdiff_t>(i));
      if (next.front().empty()) next.erase(next.begin());
      order.push_back(x);
      RowKey row = split_and_row(x, order, next);
      order.pop_back();
      branches.push_back({x, row, std::move(next)});
    }

    RowKey min_row = branches.front().row;
    for (const auto& b : branches) min_row = std::min(min_row, b.row);
    for (auto& b : branches) {
      if (b.row != min_row) continue;
      order.push_back(b.color);
      rows.push_back(b.row);
      descend(order, b.cells, rows);
      rows.pop_back();
      order.pop_back();
    }
  }

  void leaf(const std::vector<Color>& order, const std::vector<RowKey>& rows) {
    std::vector<RowKey> v_rows(static_cast<std::size_t>(n_), 0);
    for (int r = 0; r < n_; ++r) {
      for (int j = 0; j < n_; ++j) {
        if (sys_.vertical.contains(order[r], order[j])) v_rows[r] |= bit_at(j);
      }
    }
    if (best_) {
      int cmp = compare_to_best(rows);
      if (cmp > 0) return;
      if (cmp == 0 && !(v_rows < best_->second)) return;
    }
    best_.emplace(rows, std::move(v_rows));
    best_order_ = order;
  }

  const ColoringSystem& sys_;
  int n_;
  std::vector<Color> twin_class_;
  std::optional<std::pair<std::vector<RowKey>, std::vector<RowKey>>> best_;
  std::vector<Color> best_order_;
};

struct Signature {
  int h_out, h_in, v_out, v_in;
  bool h_loop, v_loop;
  friend bool operator==(const Signature&, const Signature&) = default;
};

std::vector<Signature> signatures(const ColoringSystem& sys) {
  std::vector<Signature> sig(static_cast<std::size_t>(sys.colors), Signature{});
  for (auto [c, d] : sys.horizontal.pairs()) {
    ++sig[c].h_out;
    ++sig[d].h_in;
    if (c == d) sig[c].h_loop = true;
  }
  for (auto [c, d] : sys.vertical.pairs()) {
    ++sig[c].v_out;
    ++sig[d].v_in;
    if (c == d) sig[c].v_loop = true;
  }
  return sig;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const ColoringSystem& lhs, const ColoringSystem& rhs)
      : lhs_(lhs), rhs_(rhs), n_(lhs.colors), lsig_(signatures(lhs)), rsig_(signatures(rhs)) {
    order_.push_back(lhs.origin);
    for (int c = 0; c < n_; ++c) {
      if (c != lhs.origin) order_.push_back(static_cast<Color>(c));
    }
    image_.assign(static_cast<std::size_t>(n_), kUnset);
    used_.assign(static_cast<std::size_t>(n_), false);
  }

  bool run() {
    if (!(lsig_[lhs_.origin] == rsig_[rhs_.origin])) return false;
    return extend(0);
  }

 private:
  static constexpr int kUnset = -1;

  bool consistent(Color c, Color t) const {
    for (int i = 0; i < n_; ++i) {
      if (image_[i] == kUnset) continue;
      const auto u = static_cast<Color>(i);
      const auto tu = static_cast<Color>(image_[i]);
      if (lhs_.horizontal.contains(c, u) != rhs_.horizontal.contains(t, tu)) return false;
      if (lhs_.horizontal.contains(u, c) != rhs_.horizontal.contains(tu, t)) return false;
      if (lhs_.vertical.contains(c, u) != rhs_.vertical.contains(t, tu)) return false;
      if (lhs_.vertical.contains(u, c) != rhs_.vertical.contains(tu, t)) return false;
    }
    return lhs_.horizontal.contains(c, c) == rhs_.horizontal.contains(t, t) &&
           lhs_.vertical.contains(c, c) == rhs_.vertical.contains(t, t);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Color c = order_[depth];
    for (int t = 0; t < n_; ++t) {
      if (used_[t]) continue;
      if (depth == 0 && t != rhs_.origin) continue;
      if (depth > 0 && t == rhs_.origin) continue;
      if (!(lsig_[c] == rsig_[t])) continue;
      const auto target = static_cast<Color>(t);
      if (!consistent(c, target)) continue;
      image_[c] = t;
      used_[t] = true;
      if (extend(depth + 1)) return true;
      image_[c] = kUnset;
      used_[t] = false;
    }
    return false;
  }

  const ColoringSystem& lhs_;
  const ColoringSystem& rhs_;
  int n_;
  std::vector<Signature> lsig_;
  std::vector<Signature> rsig_;
  std::vector<Color> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

}  // namespace

CanonicalResult canonical_form_with_map(const ColoringSystem& sys) {
  require_valid(sys);
  return Canonicalizer(sys).run();
}

ColoringSystem canonical_form(const ColoringSystem& sys) {
  return canonical_form_with_map(sys).system;
}

bool is_isomorphic(const ColoringSystem& lhs, const ColoringSystem& rhs) {
  if (lhs.colors != rhs.colors) return false;
  require_valid(lhs);
  require_valid(rhs);
  if (lhs.horizontal.size() != rhs.horizontal.size() ||
      lhs.vertical.size() != rhs.vertical.size()) {
    return false;
  }
  return IsomorphismSearch(lhs, rhs).run();
}

}  // namespace colsys
