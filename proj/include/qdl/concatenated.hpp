#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/bitstring.hpp"
#include "qdl/hadamard.hpp"
#include "qdl/reed_solomon.hpp"
#include "qdl/types.hpp"

namespace qdl {

/// Outer Reed-Solomon over GF(2^m) with each symbol expanded by an inner
/// Walsh-Hadamard [2^m, m] block, so the overall minimum distance is
/// (n_rs - k_rs + 1) * 2^(m-1). Message bits map to outer symbols m bits at
/// a time, MSB first.
class ConcatenatedCode {
 public:
  ConcatenatedCode(ReedSolomonCode outer, HadamardCode inner)
      : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (inner_.k() != outer_.field().m())
      throw std::invalid_argument(
          "ConcatenatedCode: inner message size must equal outer symbol size");
  }

  /// Production default: RS[63,42] over GF(2^6) with Hadamard[64,6],
  /// rate 252/4032 = 1/16.
  static ConcatenatedCode production() {
    return ConcatenatedCode(ReedSolomonCode(6, 63, 42), HadamardCode(6));
  }

  const ReedSolomonCode& outer() const { return outer_; }
  const HadamardCode& inner() const { return inner_; }

  std::size_t message_bits() const {
    return std::size_t(outer_.k()) * std::size_t(outer_.field().m());
  }
  std::size_t codeword_bits() const {
    return std::size_t(outer_.n()) * inner_.n();
  }
  double rate() const {
    return double(message_bits()) / double(codeword_bits());
  }
  std::size_t min_distance() const {
    return std::size_t(outer_.min_distance()) * inner_.min_distance();
  }

  BitString encode(const BitString& msg) const {
    if (msg.size() != message_bits())
      throw std::invalid_argument("concat_encode: wrong message length");
    const int m = outer_.field().m();
    std::vector<std::uint32_t> syms(std::size_t(outer_.k()));
    for (int t = 0; t < outer_.k(); ++t)
      syms[std::size_t(t)] =
          std::uint32_t(msg.to_uint(std::size_t(t) * std::size_t(m), std::size_t(m)));
    std::vector<std::uint32_t> cw = outer_.encode(syms);
    BitString out(codeword_bits());
    std::size_t pos = 0;
    for (std::uint32_t s : cw) {
      for (std::uint32_t j = 0; j < inner_.n(); ++j)
        out.set(pos + j, HadamardCode::codeword_bit(s, j));
      pos += inner_.n();
    }
    return out;
  }

  /// Inner-decode each block (all positions erased or confidence <= 0 turns
  /// the block into an outer erasure), then outer-decode.
  std::optional<BitString> decode(std::span<const Trit> word) const {
    if (word.size() != codeword_bits())
      throw std::invalid_argument("concat_decode: wrong word length");
    std::vector<std::int32_t> outer_word(std::size_t(outer_.n()));
    for (int b = 0; b < outer_.n(); ++b) {
      auto block = word.subspan(std::size_t(b) * inner_.n(), inner_.n());
      bool all_erased = true;
      for (auto tr : block)
        if (tr != Trit::Erased) {
          all_erased = false;
          break;
        }
      if (all_erased) {
        outer_word[std::size_t(b)] = ReedSolomonCode::kErased;
        continue;
      }
      auto dec = inner_.decode(block);
      outer_word[std::size_t(b)] = dec.confidence <= 0
                                       ? ReedSolomonCode::kErased
                                       : std::int32_t(dec.msg);
    }
    auto msg_syms = outer_.decode(outer_word);
    if (!msg_syms) return std::nullopt;
    const int m = outer_.field().m();
    BitString msg(message_bits());
    for (int t = 0; t < outer_.k(); ++t)
      msg.set_uint(std::size_t(t) * std::size_t(m), std::size_t(m),
                   (*msg_syms)[std::size_t(t)]);
    return msg;
  }

 private:
  ReedSolomonCode outer_;
  HadamardCode inner_;
};

}  // namespace qdl
