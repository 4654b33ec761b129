#include "colsys/diagcodec.hpp"

#include <stdexcept>

namespace colsys {

namespace {

__extension__ typedef unsigned __int128 u128;

constexpr u128 kU64Max = ~std::uint64_t{0};

// floor(sqrt(v)) for 128-bit v, Newton iteration from an upper bound.
u128 isqrt(u128 v) {
  if (v < 2) return v;
  int bits = 0;
  for (u128 t = v; t != 0; t >>= 1) ++bits;
  u128 x = u128{1} << ((bits + 1) / 2);
  for (;;) {
    u128 y = (x + v / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

}  // namespace

std::uint64_t triangular(std::uint64_t n) {
  u128 t = u128{n} * (u128{n} + 1) / 2;
  if (t > kU64Max) throw std::range_error("triangular number exceeds 64 bits");
  return static_cast<std::uint64_t>(t);
}

std::uint64_t diag_index(Tile t) {
  u128 s = u128{t.x} + t.y;
  u128 k = s * (s + 1) / 2 + t.x;
  if (k > kU64Max) throw std::range_error("diagonal index exceeds 64 bits");
  return static_cast<std::uint64_t>(k);
}

std::uint64_t diag_of_index(std::uint64_t k) {
  // j = floor((sqrt(8k+1) - 1) / 2), then correct by +-1 against T(j) <= k < T(j+1).
  u128 j = (isqrt(u128{8} * k + 1) - 1) / 2;
  auto tri = [](u128 m) { return m * (m + 1) / 2; };
  while (tri(j) > k) --j;
  while (tri(j + 1) <= k) ++j;
  return static_cast<std::uint64_t>(j);
}

Tile diag_tile(std::uint64_t k) {
  std::uint64_t diag = diag_of_index(k);
  u128 start = u128{diag} * (u128{diag} + 1) / 2;
  std::uint64_t x = static_cast<std::uint64_t>(k - start);
  return Tile{x, diag - x};
}

}  // namespace colsys
