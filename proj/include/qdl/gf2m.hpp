#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qdl {

/// GF(2^m) arithmetic for m in [1, 12], log/antilog table based. Elements are
/// integers in [0, 2^m) over the polynomial basis; alpha = x = 2 is primitive
/// for every default polynomial below.
class GF2m {
 public:
  explicit GF2m(int m) : GF2m(m, default_poly(m)) {}

  GF2m(int m, std::uint32_t poly) : m_(m), q_(1u << m), poly_(poly) {
    if (m < 1 || m > 12) throw std::invalid_argument("GF2m: m outside [1,12]");
    exp_.resize(2 * q_);
    log_.resize(q_, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q_ - 1; ++i) {
      exp_[i] = std::uint16_t(x);
      log_[x] = i;
      x <<= 1;
      if (x & q_) x ^= poly_;
    }
    if (x != 1) throw std::invalid_argument("GF2m: polynomial not primitive");
    for (std::uint32_t i = q_ - 1; i < 2 * q_ - 2; ++i)
      exp_[i] = exp_[i - (q_ - 1)];
  }

  /// Fixed published primitive polynomials, so codewords are reproducible
  /// bit-exactly across implementations.
  static std::uint32_t default_poly(int m) {
    switch (m) {
      case 1: return 0x3;          // x + 1
      case 2: return 0x7;          // x^2 + x + 1
      case 3: return 0xB;          // x^3 + x + 1
      case 4: return 0x13;         // x^4 + x + 1
      case 5: return 0x25;         // x^5 + x^2 + 1
      case 6: return 0x43;         // x^6 + x + 1
      case 7: return 0x89;         // x^7 + x^3 + 1
      case 8: return 0x11D;        // x^8 + x^4 + x^3 + x^2 + 1
      case 9: return 0x211;        // x^9 + x^4 + 1
      case 10: return 0x409;       // x^10 + x^3 + 1
      case 11: return 0x805;       // x^11 + x^2 + 1
      case 12: return 0x1053;      // x^12 + x^6 + x^4 + x + 1
      default:
        throw std::invalid_argument("GF2m: no default polynomial for this m");
    }
  }

  int m() const { return m_; }
  std::uint32_t order() const { return q_; }          // field size 2^m
  std::uint32_t poly() const { return poly_; }

  void check_element(std::uint32_t a) const {
    if (a >= q_) throw std::invalid_argument("GF2m: symbol out of field range");
  }

  static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }

  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("GF2m: inverse of zero");
    return exp_[(q_ - 1) - log_[a]];
  }

  std::uint32_t div(std::uint32_t a, std::uint32_t b) const {
    if (b == 0) throw std::invalid_argument("GF2m: division by zero");
    if (a == 0) return 0;
    return exp_[log_[a] + (q_ - 1) - log_[b]];
  }

  /// alpha^e for any integer exponent (reduced mod 2^m - 1).
  std::uint32_t pow_alpha(std::int64_t e) const {
    std::int64_t r = e % (q_ - 1);
    if (r < 0) r += q_ - 1;
    return exp_[std::size_t(r)];
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::uint64_t le = (std::uint64_t(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[le];
  }

  std::uint32_t log(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("GF2m: log of zero");
    return log_[a];
  }

 private:
  int m_;
  std::uint32_t q_;
  std::uint32_t poly_;
  std::vector<std::uint16_t> exp_;
  std::vector<std::uint16_t> log_;
};

}  // namespace qdl
