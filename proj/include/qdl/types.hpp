#pragma once

#include <cstdint>
#include <stdexcept>

namespace qdl {

/// Preparation/measurement basis. Z and Y are mutually unbiased: a state
/// prepared in one gives a uniform outcome when measured in the other.
enum class Basis : std::uint8_t { Z = 0, Y = 1 };

/// One prepared single-photon state: a basis and an eigenvalue bit.
struct QubitSymbol {
  Basis basis;
  std::uint8_t bit;  // 0 or 1

  bool operator==(const QubitSymbol&) const = default;
};

/// Lossy-channel model: single-photon transmittance and bit error rate.
struct ChannelParams {
  double eta;  // detection probability, in [0, 1]
  double e_b;  // flip probability for matched-basis detections, in [0, 0.5]

  void validate() const {
    if (!(eta >= 0.0 && eta <= 1.0))
      throw std::invalid_argument("ChannelParams: eta outside [0,1]");
    if (!(e_b >= 0.0 && e_b <= 0.5))
      throw std::invalid_argument("ChannelParams: e_b outside [0,0.5]");
  }
};

/// Ternary received symbol used throughout the decoders.
enum class Trit : std::uint8_t { Zero = 0, One = 1, Erased = 2 };

inline Trit trit_of(bool bit) { return bit ? Trit::One : Trit::Zero; }

/// Per-qubit detection result: a measured bit, or lost in the channel.
struct ChannelOutcome {
  bool detected;
  std::uint8_t bit;  // valid only when detected

  static ChannelOutcome lost() { return {false, 0}; }
  static ChannelOutcome of(std::uint8_t b) { return {true, b}; }

  Trit to_trit() const {
    return detected ? trit_of(bit != 0) : Trit::Erased;
  }
};

}  // namespace qdl
