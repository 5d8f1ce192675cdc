#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/bitstring.hpp"
#include "qdl/rng.hpp"

namespace qdl {

/// Keyed bijection on [0, n): mapping[i] is the destination of source i.
struct Permutation {
  std::vector<std::uint32_t> mapping;

  std::size_t size() const { return mapping.size(); }

  bool is_bijection() const {
    std::vector<std::uint32_t> s = mapping;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] != i) return false;
    return true;
  }
};

/// Key cost charged for the permutation stage: ceil(40000 * log2(24 n^2 / eps))
/// bits. This is bookkeeping, not the bits Fisher-Yates actually consumes.
inline std::uint64_t perm_key_bits(std::uint64_t n, double epsilon) {
  if (n < 1) throw std::invalid_argument("perm_key_bits: n must be >= 1");
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("perm_key_bits: epsilon outside (0,1)");
  long double x = std::log2(24.0L) + 2.0L * std::log2((long double)n) -
                  std::log2((long double)epsilon);
  return (std::uint64_t)std::ceil(40000.0L * x);
}

/// Structured key segment driving the permutation stage.
struct PermutationSeed {
  BitString bits;                  // actual seed material
  std::uint64_t accounted_length;  // formula value for the session's (n, eps)

  static PermutationSeed make(BitString seed_bits, std::uint64_t n,
                              double epsilon) {
    return {std::move(seed_bits), perm_key_bits(n, epsilon)};
  }
};

/// Deterministic Fisher-Yates keyed on the seed bits; `block` selects an
/// independent substream so multi-block sessions stay reproducible.
inline Permutation derive_permutation(const BitString& seed, std::size_t n,
                                      std::uint64_t block = 0) {
  if (n == 0) throw std::invalid_argument("derive_permutation: n must be >= 1");
  if (seed.empty()) throw std::invalid_argument("derive_permutation: empty seed");
  RngStream rng = RngStream::from_bits(seed, stream_tag::kPermDerive).substream(block);
  std::vector<std::uint32_t> m(n);
  std::iota(m.begin(), m.end(), 0u);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = std::size_t(rng.next_below(i + 1));
    std::swap(m[i], m[j]);
  }
  return Permutation{std::move(m)};
}

inline Permutation derive_permutation(const PermutationSeed& seed, std::size_t n,
                                      std::uint64_t block = 0) {
  return derive_permutation(seed.bits, n, block);
}

template <typename T>
std::vector<T> apply_permutation(const Permutation& p, std::span<const T> xs) {
  if (xs.size() != p.size())
    throw std::invalid_argument("apply_permutation: length mismatch");
  std::vector<T> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[p.mapping[i]] = xs[i];
  return out;
}

template <typename T>
std::vector<T> apply_permutation(const Permutation& p, const std::vector<T>& xs) {
  return apply_permutation(p, std::span<const T>(xs));
}

inline BitString apply_permutation(const Permutation& p, const BitString& bits) {
  if (bits.size() != p.size())
    throw std::invalid_argument("apply_permutation: length mismatch");
  BitString out(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i)
    if (bits.get(i)) out.set(p.mapping[i], true);
  return out;
}

inline Permutation invert_permutation(const Permutation& p) {
  std::vector<std::uint32_t> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p.mapping[i]] = std::uint32_t(i);
  return Permutation{std::move(q)};
}

}  // namespace qdl
