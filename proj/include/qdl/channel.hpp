#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/rng.hpp"
#include "qdl/types.hpp"

namespace qdl {

/// One use of the lossy channel followed by measurement in `measure_basis`.
/// The photon is lost with probability 1-eta. A matched-basis detection
/// returns the prepared bit flipped with probability e_b; a conjugate-basis
/// detection is uniform and independent of the prepared bit (Z and Y are
/// mutually unbiased, so no density-matrix machinery is needed).
inline ChannelOutcome transmit_and_measure(QubitSymbol q, Basis measure_basis,
                                           const ChannelParams& params,
                                           RngStream& rng) {
  if (!rng.next_bernoulli(params.eta)) return ChannelOutcome::lost();
  if (measure_basis == q.basis) {
    bool flip = rng.next_bernoulli(params.e_b);
    return ChannelOutcome::of(std::uint8_t(q.bit ^ (flip ? 1 : 0)));
  }
  return ChannelOutcome::of(std::uint8_t(rng.next_bit() ? 1 : 0));
}

/// Independent per-symbol transmission, in order.
inline std::vector<ChannelOutcome> transmit_block(
    std::span<const QubitSymbol> qs, std::span<const Basis> bases,
    const ChannelParams& params, RngStream& rng) {
  if (qs.size() != bases.size())
    throw std::invalid_argument("transmit_block: length mismatch");
  params.validate();
  std::vector<ChannelOutcome> out(qs.size());
  for (std::size_t i = 0; i < qs.size(); ++i)
    out[i] = transmit_and_measure(qs[i], bases[i], params, rng);
  return out;
}

}  // namespace qdl
