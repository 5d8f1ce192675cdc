#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/bitstring.hpp"
#include "qdl/types.hpp"

namespace qdl {

/// Walsh-Hadamard [2^k, k, 2^(k-1)] binary code. Codeword position j holds
/// the inner product <msg, j>; message bit i pairs with bit i of j counted
/// from the top, i.e. the k message bits read MSB-first form the integer
/// whose AND with j is popcounted.
class HadamardCode {
 public:
  explicit HadamardCode(int k) : k_(k) {
    if (k < 1 || k > 16)
      throw std::invalid_argument("HadamardCode: k outside [1,16]");
    if (k_ <= 6) {
      table_.resize(n());
      for (std::uint32_t m = 0; m < n(); ++m) {
        std::uint64_t cw = 0;
        for (std::uint32_t j = 0; j < n(); ++j)
          if (codeword_bit(m, j)) cw |= std::uint64_t(1) << j;
        table_[m] = cw;
      }
    }
  }

  int k() const { return k_; }
  std::size_t n() const { return std::size_t(1) << k_; }
  std::size_t min_distance() const { return std::size_t(1) << (k_ - 1); }

  /// Codeword bit j for message value `msg`.
  static bool codeword_bit(std::uint32_t msg, std::uint32_t j) {
    return __builtin_parity(msg & j);
  }

  BitString encode(const BitString& msg) const {
    if (msg.size() != std::size_t(k_))
      throw std::invalid_argument("hadamard: wrong message length");
    std::uint32_t m = std::uint32_t(msg.to_uint(0, msg.size()));
    BitString cw(n());
    for (std::uint32_t j = 0; j < n(); ++j) cw.set(j, codeword_bit(m, j));
    return cw;
  }

  struct Decoded {
    std::uint32_t msg;  // winning message value
    int confidence;     // agreements - disagreements over non-erased positions
  };

  /// Maximum-likelihood decode: the message whose codeword agrees with the
  /// most non-erased positions wins; ties go to the smallest message value.
  Decoded decode(std::span<const Trit> word) const {
    if (word.size() != n())
      throw std::invalid_argument("hadamard: wrong word length");
    if (k_ <= 6) return decode_packed(word);
    return decode_generic(word);
  }

  BitString msg_bits(std::uint32_t msg) const {
    BitString b(static_cast<std::size_t>(k_));
    b.set_uint(0, std::size_t(k_), msg);
    return b;
  }

 private:
  // n <= 64: pack word and mask into machine words; agreement maximisation is
  // popcount minimisation of (codeword ^ word) & mask.
  Decoded decode_packed(std::span<const Trit> word) const {
    std::uint64_t received = 0, mask = 0;
    for (std::size_t j = 0; j < word.size(); ++j) {
      if (word[j] == Trit::Erased) continue;
      mask |= std::uint64_t(1) << j;
      if (word[j] == Trit::One) received |= std::uint64_t(1) << j;
    }
    int detected = __builtin_popcountll(mask);
    std::uint32_t best = 0;
    int best_agree = -1;
    for (std::uint32_t m = 0; m < n(); ++m) {
      int agree = detected - __builtin_popcountll((table_[m] ^ received) & mask);
      if (agree > best_agree) {
        best_agree = agree;
        best = m;
      }
    }
    return {best, best_agree - (detected - best_agree)};
  }

  Decoded decode_generic(std::span<const Trit> word) const {
    std::uint32_t best = 0;
    long best_agree = -1;
    long detected = 0;
    for (auto t : word)
      if (t != Trit::Erased) ++detected;
    for (std::uint32_t m = 0; m < n(); ++m) {
      long agree = 0;
      for (std::uint32_t j = 0; j < n(); ++j) {
        if (word[j] == Trit::Erased) continue;
        if (trit_of(codeword_bit(m, j)) == word[j]) ++agree;
      }
      if (agree > best_agree) {
        best_agree = agree;
        best = m;
      }
    }
    return {best, int(best_agree - (detected - best_agree))};
  }

  int k_;
  std::vector<std::uint64_t> table_;  // packed codewords when n <= 64
};

}  // namespace qdl
