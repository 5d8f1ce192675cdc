#pragma once

#include <span>
#include <vector>

#include "qdl/bitstring.hpp"
#include "qdl/types.hpp"

namespace qdl {

/// One-bit locking key: the whole message rides in basis Z (key 0) or Y
/// (key 1). The key ledger charges exactly this single bit.
struct DhlstKey {
  std::uint8_t bit;  // 0 or 1

  Basis basis() const { return bit == 0 ? Basis::Z : Basis::Y; }
};

inline std::vector<QubitSymbol> dhlst_encode(const BitString& msg, DhlstKey key) {
  std::vector<QubitSymbol> out(msg.size());
  Basis b = key.basis();
  for (std::size_t i = 0; i < msg.size(); ++i)
    out[i] = QubitSymbol{b, std::uint8_t(msg.get(i) ? 1 : 0)};
  return out;
}

/// Outcomes are assumed measured in the key's basis.
inline std::vector<Trit> dhlst_decode(std::span<const ChannelOutcome> outcomes,
                                      DhlstKey /*key*/) {
  std::vector<Trit> out(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) out[i] = outcomes[i].to_trit();
  return out;
}

/// Accessible information ceiling without the key: n/2 bits.
inline double dhlst_locked_bound(std::uint64_t n) { return double(n) / 2.0; }

}  // namespace qdl
