#pragma once

#include <cstdint>

namespace colsys {

struct Tile {
  std::uint64_t x = 0;
  std::uint64_t y = 0;

  friend bool operator==(const Tile&, const Tile&) = default;
};

/// n(n+1)/2. Throws std::range_error if the result does not fit in 64 bits.
std::uint64_t triangular(std::uint64_t n);

/// Diagonal index (x+y)(x+y+1)/2 + x. Tiles are counted one anti-diagonal at a
/// time with x increasing: (0,0)=0, (0,1)=1, (1,0)=2, (0,2)=3.
/// Throws std::range_error when the index does not fit in 64 bits.
std::uint64_t diag_index(Tile t);

/// Largest j with triangular(j) <= k. Integer-only.
std::uint64_t diag_of_index(std::uint64_t k);

/// Inverse of diag_index; total on 64-bit indices.
Tile diag_tile(std::uint64_t k);

}  // namespace colsys
