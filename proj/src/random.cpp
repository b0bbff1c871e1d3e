#include "locmult/random.hpp"

namespace locmult {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t draw, std::uint64_t slot) const {
  return splitmix64(splitmix64(splitmix64(seed_) ^ draw) ^ slot);
}

long CounterRng::uniform(std::uint64_t draw, std::uint64_t slot, long lo, long hi) const {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the distribution exactly uniform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t v = bits(draw, slot + (attempt << 32));
    if (v < limit) return lo + static_cast<long>(v % span);
  }
}

Matrix random_matrix(const CounterRng& rng, std::uint64_t draw, std::size_t rows, std::size_t cols,
                     long bound) {
  Matrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(draw, i * cols + j, -bound, bound);
  }
  return a;
}

}  // namespace locmult
