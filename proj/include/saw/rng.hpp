#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "saw/bignat.hpp"
#include "saw/error.hpp"

namespace saw {

/// Deterministic 64-bit random stream. Identical (seed, stream id) pairs
/// produce identical sequences on every conforming standard library.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    engine_.seed(seq);
  }

  /// Independent stream sharing this stream's seed.
  RngStream substream(std::uint64_t id) const { return RngStream(seed_, id); }

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Exactly uniform on [0, bound).
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound == 0) throw invalid_argument("uniform_below: bound must be positive");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

/// Exactly uniform on [0, bound) by rejection on whole random blocks.
inline BigNat uniform_bignat(RngStream& rng, const BigNat& bound) {
  if (bound <= 0) throw invalid_argument("uniform_bignat: bound must be positive");
  if (bound == 1) return 0;
  const BigNat top = bound - 1;
  const std::size_t bits = mpz_sizeinbase(top.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned spare = static_cast<unsigned>(words * 64 - bits);
  std::vector<std::uint64_t> block(words);
  BigNat candidate;
  for (;;) {
    for (auto& w : block) w = rng.next_u64();
    block.back() >>= spare;  // most significant word last
    mpz_import(candidate.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, block.data());
    if (candidate < bound) return candidate;
  }
}

}  // namespace saw
