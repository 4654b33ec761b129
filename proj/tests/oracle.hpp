#pragma once

// Brute-force reference implementations. Deliberately naive: nothing here
// calls into the library beyond its plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <tuple>
#include <utility>
#include <vector>

#include "colsys/core.hpp"

namespace oracle {

using colsys::Color;
using colsys::ColorSequence;
using colsys::ColoringSystem;

// Tile of each index, generated by walking the anti-diagonals.
inline std::vector<std::pair<int, int>> tiles(std::size_t count) {
  std::vector<std::pair<int, int>> out;
  for (int s = 0; out.size() < count; ++s) {
    for (int x = 0; x <= s && out.size() < count; ++x) out.emplace_back(x, s - x);
  }
  return out;
}

inline bool accepts(const ColoringSystem& sys, const ColorSequence& seq) {
  if (seq.empty() || seq[0] != sys.origin) return false;
  std::map<std::pair<int, int>, Color> g;
  auto t = tiles(seq.size());
  for (std::size_t k = 0; k < seq.size(); ++k) g[t[k]] = seq[k];
  for (auto& [tile, c] : g) {
    auto right = g.find({tile.first + 1, tile.second});
    if (right != g.end() && !sys.horizontal.contains(c, right->second)) return false;
    auto up = g.find({tile.first, tile.second + 1});
    if (up != g.end() && !sys.vertical.contains(c, up->second)) return false;
  }
  return true;
}

// Every sequence of `length` over n colors, in lexicographic order.
inline std::vector<ColorSequence> all_sequences(int n, std::size_t length) {
  std::vector<ColorSequence> out;
  ColorSequence s(length, 0);
  for (;;) {
    out.push_back(s);
    std::size_t i = length;
    while (i > 0 && s[i - 1] == n - 1) s[--i] = 0;
    if (i == 0) return out;
    ++s[i - 1];
  }
}

inline std::vector<ColorSequence> filter(const ColoringSystem& sys, std::size_t length) {
  std::vector<ColorSequence> out;
  for (auto& s : all_sequences(sys.colors, length)) {
    if (accepts(sys, s)) out.push_back(s);
  }
  return out;
}

// Level-by-level growth: counts[L] = acceptable sequences of length L + 1.
inline std::vector<std::uint64_t> profile(const ColoringSystem& sys, std::size_t cap) {
  std::vector<std::uint64_t> counts;
  std::vector<ColorSequence> level;
  if (accepts(sys, {sys.origin})) level.push_back({sys.origin});
  for (std::size_t len = 1; len <= cap; ++len) {
    counts.push_back(level.size());
    if (len == cap) break;
    std::vector<ColorSequence> next;
    for (auto& s : level) {
      for (int c = 0; c < sys.colors; ++c) {
        auto t = s;
        t.push_back(static_cast<Color>(c));
        if (accepts(sys, t)) next.push_back(std::move(t));
      }
    }
    level = std::move(next);
  }
  return counts;
}

// Longest acceptable length below `cap`, or cap if length cap is reachable.
inline std::size_t max_length(const ColoringSystem& sys, std::size_t cap) {
  auto p = profile(sys, cap);
  std::size_t best = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 0) best = i + 1;
  }
  return best;
}

// (origin, H mask, V mask) with pair (0,0) as the top bit. Small n only.
inline std::tuple<int, std::uint64_t, std::uint64_t> encode(const ColoringSystem& sys) {
  std::uint64_t h = 0, v = 0;
  for (int c = 0; c < sys.colors; ++c) {
    for (int d = 0; d < sys.colors; ++d) {
      h = h << 1 | sys.horizontal.contains(static_cast<Color>(c), static_cast<Color>(d));
      v = v << 1 | sys.vertical.contains(static_cast<Color>(c), static_cast<Color>(d));
    }
  }
  return {sys.origin, h, v};
}

inline ColoringSystem relabel(const ColoringSystem& sys, const std::vector<Color>& perm) {
  ColoringSystem out;
  out.colors = sys.colors;
  out.origin = perm[sys.origin];
  for (int c = 0; c < sys.colors; ++c) {
    for (int d = 0; d < sys.colors; ++d) {
      if (sys.horizontal.contains(static_cast<Color>(c), static_cast<Color>(d)))
        out.horizontal.insert(perm[c], perm[d]);
      if (sys.vertical.contains(static_cast<Color>(c), static_cast<Color>(d)))
        out.vertical.insert(perm[c], perm[d]);
    }
  }
  return out;
}

inline std::vector<std::vector<Color>> permutations(int n) {
  std::vector<Color> p(n);
  std::iota(p.begin(), p.end(), Color{0});
  std::vector<std::vector<Color>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Least encoding over all n! relabelings.
inline ColoringSystem canonical(const ColoringSystem& sys) {
  ColoringSystem best = sys;
  for (auto& p : permutations(sys.colors)) {
    auto r = relabel(sys, p);
    if (encode(r) < encode(best)) best = r;
  }
  return best;
}

inline bool isomorphic(const ColoringSystem& a, const ColoringSystem& b) {
  if (a.colors != b.colors) return false;
  for (auto& p : permutations(a.colors)) {
    if (relabel(a, p) == b) return true;
  }
  return false;
}

// Uniform random system; `density` is the chance of each pair being present.
inline ColoringSystem random_system(std::mt19937_64& rng, int n, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  ColoringSystem s;
  s.colors = n;
  s.origin = static_cast<Color>(std::uniform_int_distribution<int>(0, n - 1)(rng));
  for (int c = 0; c < n; ++c) {
    for (int d = 0; d < n; ++d) {
      if (coin(rng)) s.horizontal.insert(static_cast<Color>(c), static_cast<Color>(d));
      if (coin(rng)) s.vertical.insert(static_cast<Color>(c), static_cast<Color>(d));
    }
  }
  return s;
}

// System number `index` in (origin, H, V) order, built pair by pair.
inline ColoringSystem nth_system(int n, std::uint64_t index) {
  const int bits = n * n;
  ColoringSystem s;
  s.colors = n;
  std::uint64_t v = index & ((std::uint64_t{1} << bits) - 1);
  std::uint64_t h = (index >> bits) & ((std::uint64_t{1} << bits) - 1);
  s.origin = static_cast<Color>(index >> (2 * bits));
  for (int i = 0; i < bits; ++i) {
    const int shift = bits - 1 - i;
    const auto c = static_cast<Color>(i / n), d = static_cast<Color>(i % n);
    if ((h >> shift) & 1) s.horizontal.insert(c, d);
    if ((v >> shift) & 1) s.vertical.insert(c, d);
  }
  return s;
}

}  // namespace oracle
