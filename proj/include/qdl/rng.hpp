#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "qdl/bitstring.hpp"

namespace qdl {

/// Counter-based deterministic generator. Output i is a strong 64-bit mix of
/// (seed, stream, i), so any block or purpose can derive its own stream from
/// the run seed without shared state, and replays are bit-identical.
class RngStream {
 public:
  using Seed = std::array<std::uint64_t, 4>;

  RngStream(const Seed& seed, std::uint64_t stream) {
    std::uint64_t b = 0x6A09E667F3BCC909ull;
    for (std::uint64_t w : seed) b = mix(b + w);
    base_ = mix(b + stream);
  }

  /// Expand a 64-bit seed into the full 256-bit form.
  static RngStream from_u64(std::uint64_t seed, std::uint64_t stream) {
    Seed s{seed, mix(seed + 1), mix(seed + 2), mix(seed + 3)};
    return RngStream(s, stream);
  }

  /// Generator keyed on arbitrary seed material (e.g. a key segment).
  static RngStream from_bits(const BitString& bits, std::uint64_t stream) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint8_t c : bits.bytes()) h = (h ^ c) * 0x100000001b3ull;
    Seed s{h, bits.size(), 0, 0};
    return RngStream(s, stream);
  }

  /// Independent child stream; used to give each block its own randomness.
  RngStream substream(std::uint64_t tag) const {
    RngStream child;
    child.base_ = mix(base_ ^ mix(tag + kGolden));
    return child;
  }

  std::uint64_t next_u64() { return mix(base_ + (++counter_) * kGolden); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double next_double() {
    return double(next_u64() >> 11) * 0x1.0p-53;
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  bool next_bit() { return next_u64() >> 63; }

  /// Unbiased uniform integer in [0, bound).
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

 private:
  RngStream() = default;

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  // splitmix64 finalizer
  static constexpr std::uint64_t mix(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
  }

  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
};

/// Purpose tags for deriving per-task streams from one run seed.
namespace stream_tag {
inline constexpr std::uint64_t kMessage = 1;
inline constexpr std::uint64_t kChannel = 2;
inline constexpr std::uint64_t kKeyGen = 3;
inline constexpr std::uint64_t kEve = 4;
inline constexpr std::uint64_t kDhlstBlockKeys = 5;
inline constexpr std::uint64_t kBasisDerive = 0x42;
inline constexpr std::uint64_t kPermDerive = 0x50;
}  // namespace stream_tag

/// k fresh bits, MSB-first out of each underlying 64-bit draw.
inline BitString draw_bits(RngStream& rng, std::size_t k) {
  BitString out(k);
  std::size_t i = 0;
  while (i < k) {
    std::uint64_t w = rng.next_u64();
    std::size_t take = std::min<std::size_t>(64, k - i);
    for (std::size_t j = 0; j < take; ++j)
      out.set(i + j, (w >> (63 - j)) & 1u);
    i += take;
  }
  return out;
}

}  // namespace qdl
