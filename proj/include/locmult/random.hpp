#pragma once

#include <cstddef>
#include <cstdint>

#include "locmult/matrix.hpp"

namespace locmult {

/// Counter-based generator: every value is a pure function of
/// (seed, draw, slot), so any draw replays without its predecessors and
/// parallel trials never share state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t bits(std::uint64_t draw, std::uint64_t slot) const;
  /// Uniform in [lo, hi].
  long uniform(std::uint64_t draw, std::uint64_t slot, long lo, long hi) const;

 private:
  std::uint64_t seed_;
};

inline constexpr long kDefaultCoefficientBound = 7;

/// rows x cols integer matrix with entries in [-bound, bound] for one draw.
Matrix random_matrix(const CounterRng& rng, std::uint64_t draw, std::size_t rows, std::size_t cols,
                     long bound = kDefaultCoefficientBound);

}  // namespace locmult
