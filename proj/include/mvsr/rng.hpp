#pragma once

#include <cstdint>
#include <random>

namespace mvsr {

/// Seeded generator with a draw procedure fixed across standard libraries, so
/// sampled reports are reproducible byte-for-byte.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability 1/n.
  bool one_in(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace mvsr
