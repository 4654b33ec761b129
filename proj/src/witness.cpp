#include <algorithm>
#include <bit>
#include <tuple>

#include "colsys/search.hpp"

namespace colsys {

ColorMask live_colors(const ColoringSystem& sys) {
  ColorMask live = sys.all_colors();
  for (bool changed = true; changed;) {
    changed = false;
    for (ColorMask m = live; m != 0; m &= m - 1) {
      const auto c = static_cast<Color>(std::countr_zero(m));
      if ((sys.horizontal.row(c) & live) == 0 || (sys.vertical.row(c) & live) == 0) {
        live &= ~(ColorMask{1} << c);
        changed = true;
      }
    }
  }
  return live;
}

std::vector<WitnessShape> witness_shapes(const SearchBudget& budget) {
  std::vector<WitnessShape> shapes;
  for (std::size_t px = 1; px <= budget.period_cap; ++px) {
    for (std::size_t py = 1; py <= budget.period_cap; ++py) {
      for (std::size_t sx = 0; sx <= budget.preperiod_cap; ++sx) {
        for (std::size_t sy = 0; sy <= budget.preperiod_cap; ++sy) {
          shapes.push_back({px, py, sx, sy});
        }
      }
    }
  }
  auto key = [](const WitnessShape& s) {
    return std::make_tuple((s.preperiod_x + s.period_x) * (s.preperiod_y + s.period_y),
                           s.preperiod_x + s.preperiod_y, s.period_x, s.period_y,
                           s.preperiod_x, s.preperiod_y);
  };
  std::sort(shapes.begin(), shapes.end(),
            [&](const WitnessShape& a, const WitnessShape& b) { return key(a) < key(b); });
  return shapes;
}

namespace {

class TorusFiller {
 public:
  TorusFiller(const ColoringSystem& sys, const WitnessShape& shape, ColorMask live)
      : sys_(sys), shape_(shape), live_(live),
        width_(shape.preperiod_x + shape.period_x),
        height_(shape.preperiod_y + shape.period_y) {
    for (int c = 0; c < sys.colors; ++c) {
      const auto cc = static_cast<Color>(c);
      for (int d = 0; d < sys.colors; ++d) {
        const auto dd = static_cast<Color>(d);
        if (sys.horizontal.contains(cc, dd)) h_into_[d] |= ColorMask{1} << c;
        if (sys.vertical.contains(cc, dd)) v_into_[d] |= ColorMask{1} << c;
      }
      if (sys.horizontal.contains(cc, cc)) h_loops_ |= ColorMask{1} << c;
      if (sys.vertical.contains(cc, cc)) v_loops_ |= ColorMask{1} << c;
    }
  }

  std::optional<PeriodicWitness> run(std::optional<std::uint64_t> node_cap, bool* exhausted) {
    const std::size_t total = width_ * height_;
    cells_.assign(total, 0);
    std::vector<ColorMask> pending{candidates(0)};
    std::uint64_t nodes = 0;
    while (!pending.empty()) {
      ColorMask& mask = pending.back();
      if (mask == 0) {
        pending.pop_back();
        continue;
      }
      const std::size_t pos = pending.size() - 1;
      cells_[pos] = static_cast<Color>(std::countr_zero(mask));
      mask &= mask - 1;
      if (node_cap && nodes >= *node_cap) {
        if (exhausted) *exhausted = true;
        return std::nullopt;
      }
      ++nodes;
      if (pos + 1 == total) return to_witness();
      pending.push_back(candidates(pos + 1));
    }
    return std::nullopt;
  }

 private:
  ColorMask candidates(std::size_t pos) const {
    const std::size_t i = pos % width_;
    const std::size_t j = pos / width_;
    if (pos == 0) {
      ColorMask mask = (ColorMask{1} << sys_.origin) & live_;
      if (width_ == 1) mask &= h_loops_;
      if (height_ == 1) mask &= v_loops_;
      return mask;
    }
    ColorMask mask = live_;
    if (i > 0) mask &= sys_.horizontal.row(cell(i - 1, j));
    if (j > 0) mask &= sys_.vertical.row(cell(i, j - 1));
    if (i + 1 == width_) {
      mask &= shape_.preperiod_x == i ? h_loops_ : h_into_[cell(shape_.preperiod_x, j)];
    }
    if (j + 1 == height_) {
      mask &= shape_.preperiod_y == j ? v_loops_ : v_into_[cell(i, shape_.preperiod_y)];
    }
    return mask;
  }

  Color cell(std::size_t i, std::size_t j) const { return cells_[j * width_ + i]; }

  PeriodicWitness to_witness() const {
    PeriodicWitness w;
    w.period_x = shape_.period_x;
    w.period_y = shape_.period_y;
    w.preperiod_x = shape_.preperiod_x;
    w.preperiod_y = shape_.preperiod_y;
    w.cells.assign(height_, std::vector<Color>(width_));
    for (std::size_t j = 0; j < height_; ++j) {
      for (std::size_t i = 0; i < width_; ++i) w.cells[j][i] = cell(i, j);
    }
    return w;
  }

  const ColoringSystem& sys_;
  WitnessShape shape_;
  ColorMask live_;
  std::size_t width_;
  std::size_t height_;
  std::array<ColorMask, kMaxColors> h_into_{};  // h_into_[d] = {c : (c, d) in H}
  std::array<ColorMask, kMaxColors> v_into_{};
  ColorMask h_loops_ = 0;
  ColorMask v_loops_ = 0;
  std::vector<Color> cells_;
};

std::optional<PeriodicWitness> search_shapes(const ColoringSystem& sys, const SearchBudget& budget,
                                             bool* exhausted) {
  const ColorMask live = live_colors(sys);
  if (((live >> sys.origin) & 1u) == 0) return std::nullopt;
  for (const WitnessShape& shape : witness_shapes(budget)) {
    auto w = TorusFiller(sys, shape, live).run(budget.node_cap, exhausted);
    if (w) return w;
  }
  return std::nullopt;
}

}  // namespace

std::optional<PeriodicWitness> find_witness_with_shape(const ColoringSystem& sys,
                                                       const WitnessShape& shape,
                                                       std::optional<std::uint64_t> node_cap,
                                                       bool* exhausted) {
  require_valid(sys);
  if (shape.period_x < 1 || shape.period_y < 1) {
    throw std::invalid_argument("witness periods must be at least 1");
  }
  const ColorMask live = live_colors(sys);
  if (((live >> sys.origin) & 1u) == 0) return std::nullopt;
  return TorusFiller(sys, shape, live).run(node_cap, exhausted);
}

std::optional<PeriodicWitness> find_periodic_witness(const ColoringSystem& sys,
                                                     const SearchBudget& budget) {
  require_valid(sys);
  return search_shapes(sys, budget, nullptr);
}

Verdict classify(const ColoringSystem& sys, const SearchBudget& budget) {
  require_valid(sys);
  bool witness_budget_hit = false;
  if (auto w = search_shapes(sys, budget, &witness_budget_hit)) {
    return Verdict::has_coloring(std::move(*w));
  }
  const MaxLengthResult r = max_accept_length(sys, budget);
  switch (r.kind) {
    case MaxLengthKind::ExactMax:
      return Verdict::bounded(r.length);
    case MaxLengthKind::ReachedCap:
      return Verdict::unknown(r.length, budget.depth_cap, budget.period_cap, witness_budget_hit);
    case MaxLengthKind::Indeterminate:
      break;
  }
  return Verdict::unknown(r.length, budget.depth_cap, budget.period_cap, true);
}

}  // namespace colsys
