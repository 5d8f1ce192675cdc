#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/types.hpp"

namespace qdl {

/// Repetition factor ceil(50/eta) for the loss-beating forward error
/// correction wrapped around the locked qubit stream.
inline std::uint64_t repetition_factor(double eta) {
  if (!(eta > 0.0 && eta <= 1.0))
    throw std::invalid_argument("repetition_factor: eta outside (0,1]");
  return (std::uint64_t)std::ceil(50.0 / eta);
}

/// Probability that at least one of m repeats survives: 1 - (1-eta)^m,
/// evaluated in the log domain so m in the hundreds stays accurate.
inline double recovery_probability(double eta, std::uint64_t m) {
  if (!(eta >= 0.0 && eta <= 1.0))
    throw std::invalid_argument("recovery_probability: eta outside [0,1]");
  if (m < 1) throw std::invalid_argument("recovery_probability: m must be >= 1");
  if (eta >= 1.0) return 1.0;
  if (eta <= 0.0) return 0.0;
  return -std::expm1(double(m) * std::log1p(-eta));
}

struct RepetitionPlan {
  std::uint64_t factor;
  double eta;

  static RepetitionPlan for_eta(double eta) {
    return {repetition_factor(eta), eta};
  }
};

/// Each symbol repeated m times, contiguously, order preserved.
inline std::vector<QubitSymbol> fec_expand(std::span<const QubitSymbol> symbols,
                                           std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("fec_expand: m must be >= 1");
  std::vector<QubitSymbol> out;
  out.reserve(symbols.size() * m);
  for (const auto& s : symbols)
    for (std::uint64_t r = 0; r < m; ++r) out.push_back(s);
  return out;
}

/// Per group of m: erased when every repeat was lost, otherwise a majority
/// vote over the detected bits with ties surfacing as erasures.
inline std::vector<Trit> fec_collapse(std::span<const ChannelOutcome> outcomes,
                                      std::uint64_t m) {
  if (m < 1) throw std::invalid_argument("fec_collapse: m must be >= 1");
  if (outcomes.size() % m != 0)
    throw std::invalid_argument("fec_collapse: length not divisible by m");
  std::size_t groups = outcomes.size() / m;
  std::vector<Trit> out(groups);
  for (std::size_t g = 0; g < groups; ++g) {
    std::uint64_t ones = 0, zeros = 0;
    for (std::uint64_t r = 0; r < m; ++r) {
      const auto& oc = outcomes[g * m + r];
      if (!oc.detected) continue;
      if (oc.bit)
        ++ones;
      else
        ++zeros;
    }
    if (ones == zeros)
      out[g] = Trit::Erased;  // covers the all-lost group too
    else
      out[g] = ones > zeros ? Trit::One : Trit::Zero;
  }
  return out;
}

/// Eve sees every repeat, so the keyless leakage bound inflates by m.
inline double fec_inflated_bound(double base_bound_bits, std::uint64_t m) {
  return base_bound_bits * double(m);
}

}  // namespace qdl
