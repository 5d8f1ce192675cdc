#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "qdl/gf2m.hpp"

namespace qdl {

/// Reed-Solomon [n, k, n-k+1] over GF(2^m), evaluation encoding: the message
/// symbols are the coefficients of f (msg[i] = coefficient of x^i) and
/// codeword position j carries f(alpha^j), j in index order 0..n-1.
///
/// Decoding runs errors-and-erasures Berlekamp-Massey on the full-length
/// [2^m-1, k] code; a shortened word (n < 2^m-1) is extended with erasures at
/// the truncated positions, which preserves the 2t + e <= n - k budget.
class ReedSolomonCode {
 public:
  static constexpr std::int32_t kErased = -1;

  ReedSolomonCode(int m, int n, int k) : gf_(m), n_(n), k_(k) {
    int full = int(gf_.order()) - 1;
    if (n < 2 || n > full)
      throw std::invalid_argument("ReedSolomonCode: n outside [2, 2^m-1]");
    if (k < 1 || k >= n)
      throw std::invalid_argument("ReedSolomonCode: require 1 <= k < n");
  }

  const GF2m& field() const { return gf_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int min_distance() const { return n_ - k_ + 1; }

  std::vector<std::uint32_t> encode(std::span<const std::uint32_t> msg) const {
    if (msg.size() != std::size_t(k_))
      throw std::invalid_argument("rs_encode: wrong message length");
    for (auto s : msg) gf_.check_element(s);
    std::vector<std::uint32_t> cw(static_cast<std::size_t>(n_));
    for (int j = 0; j < n_; ++j) {
      std::uint32_t xj = gf_.pow_alpha(j);
      std::uint32_t acc = 0;  // Horner, highest coefficient first
      for (int i = k_ - 1; i >= 0; --i) acc = gf_.mul(acc, xj) ^ msg[std::size_t(i)];
      cw[std::size_t(j)] = acc;
    }
    return cw;
  }

  /// word[j] is the received symbol at position j, or kErased.
  /// Returns the message when 2*errors + erasures <= n - k, otherwise (and on
  /// detected miscorrection) nothing.
  std::optional<std::vector<std::uint32_t>> decode(
      std::span<const std::int32_t> word) const {
    if (word.size() != std::size_t(n_))
      throw std::invalid_argument("rs_decode: wrong word length");

    const int full = int(gf_.order()) - 1;  // N
    const int nroots = full - k_;           // syndrome count of the full code

    // Extend to full length; truncated positions are erasures.
    std::vector<std::uint32_t> r(std::size_t(full), 0);
    std::vector<int> eras;
    for (int j = 0; j < full; ++j) {
      if (j >= n_ || word[std::size_t(j)] == kErased) {
        eras.push_back(j);
      } else {
        std::uint32_t v = std::uint32_t(word[std::size_t(j)]);
        gf_.check_element(v);
        r[std::size_t(j)] = v;
      }
    }
    const int e = int(eras.size());
    if (e > nroots) return std::nullopt;

    // Syndromes S_l = r(alpha^l), l = 1..nroots (stored 0-based).
    std::vector<std::uint32_t> synd(std::size_t(nroots), 0);
    bool syn_error = false;
    for (int l = 1; l <= nroots; ++l) {
      std::uint32_t al = gf_.pow_alpha(l);
      std::uint32_t acc = 0;
      for (int j = full - 1; j >= 0; --j) acc = gf_.mul(acc, al) ^ r[std::size_t(j)];
      synd[std::size_t(l - 1)] = acc;
      syn_error |= acc != 0;
    }
    if (!syn_error && e == 0) return extract_message(r);

    // Erasure locator Gamma(x) = prod (1 - X_i x), X_i = alpha^i.
    std::vector<std::uint32_t> lambda(std::size_t(nroots + 1), 0);
    lambda[0] = 1;
    for (int idx : eras) {
      std::uint32_t xi = gf_.pow_alpha(idx);
      for (int d = e; d >= 1; --d)
        lambda[std::size_t(d)] ^= gf_.mul(lambda[std::size_t(d - 1)], xi);
    }

    // Berlekamp-Massey seeded with the erasure locator.
    std::vector<std::uint32_t> b = lambda;
    std::vector<std::uint32_t> t(std::size_t(nroots + 1));
    int el = e;
    for (int rr = e + 1; rr <= nroots; ++rr) {
      std::uint32_t discr = 0;
      for (int i = 0; i <= nroots; ++i) {
        int si = rr - i;  // syndrome index, 1-based
        if (si >= 1 && si <= nroots && lambda[std::size_t(i)] != 0)
          discr ^= gf_.mul(lambda[std::size_t(i)], synd[std::size_t(si - 1)]);
      }
      if (discr == 0) {
        // b <- x * b
        for (int i = nroots; i >= 1; --i) b[std::size_t(i)] = b[std::size_t(i - 1)];
        b[0] = 0;
      } else if (2 * el <= rr + e - 1) {
        for (int i = 0; i <= nroots; ++i) t[std::size_t(i)] = lambda[std::size_t(i)];
        std::uint32_t dinv = gf_.inv(discr);
        for (int i = nroots; i >= 1; --i) {
          lambda[std::size_t(i)] ^= gf_.mul(discr, b[std::size_t(i - 1)]);
          b[std::size_t(i)] = gf_.mul(t[std::size_t(i)], dinv);
        }
        b[0] = gf_.mul(t[0], dinv);
        el = rr + e - el;
      } else {
        for (int i = nroots; i >= 1; --i) {
          lambda[std::size_t(i)] ^= gf_.mul(discr, b[std::size_t(i - 1)]);
          b[std::size_t(i)] = b[std::size_t(i - 1)];
        }
        b[0] = 0;
      }
    }

    int deg_lambda = 0;
    for (int i = nroots; i >= 0; --i)
      if (lambda[std::size_t(i)] != 0) {
        deg_lambda = i;
        break;
      }
    if (lambda[0] == 0) return std::nullopt;  // degenerate locator
    if (2 * (deg_lambda - e) + e > nroots) return std::nullopt;

    // Chien search over x = alpha^{-j}: root at j means errata at position j.
    std::vector<int> pos;
    for (int j = 0; j < full; ++j) {
      std::uint32_t x = gf_.pow_alpha(-j);
      std::uint32_t acc = 0;
      for (int i = deg_lambda; i >= 0; --i)
        acc = gf_.mul(acc, x) ^ lambda[std::size_t(i)];
      if (acc == 0) pos.push_back(j);
    }
    if (int(pos.size()) != deg_lambda) return std::nullopt;

    // Omega(x) = S(x) Lambda(x) mod x^nroots, S(x) = sum S_l x^{l-1}.
    std::vector<std::uint32_t> omega(std::size_t(nroots), 0);
    for (int i = 0; i < nroots; ++i) {
      if (synd[std::size_t(i)] == 0) continue;
      for (int jd = 0; jd <= deg_lambda && i + jd < nroots; ++jd)
        omega[std::size_t(i + jd)] ^=
            gf_.mul(synd[std::size_t(i)], lambda[std::size_t(jd)]);
    }

    // Forney (first consecutive root = 1): e_j = Omega(X^-1) / Lambda'(X^-1).
    for (int j : pos) {
      std::uint32_t xinv = gf_.pow_alpha(-j);
      std::uint32_t num = 0;
      for (int i = nroots - 1; i >= 0; --i)
        num = gf_.mul(num, xinv) ^ omega[std::size_t(i)];
      std::uint32_t den = 0;
      std::uint32_t xp = 1;  // xinv^(l-1) over odd l
      for (int l = 1; l <= deg_lambda; l += 2) {
        den ^= gf_.mul(lambda[std::size_t(l)], xp);
        xp = gf_.mul(xp, gf_.mul(xinv, xinv));
      }
      if (den == 0) return std::nullopt;
      r[std::size_t(j)] ^= gf_.div(num, den);
    }

    // Full re-check: corrected word must be a codeword.
    for (int l = 1; l <= nroots; ++l) {
      std::uint32_t al = gf_.pow_alpha(l);
      std::uint32_t acc = 0;
      for (int j = full - 1; j >= 0; --j) acc = gf_.mul(acc, al) ^ r[std::size_t(j)];
      if (acc != 0) return std::nullopt;
    }
    return extract_message(r);
  }

 private:
  // Inverse DFT over the full evaluation word: coefficient i of f is
  // sum_j r_j alpha^{-ij} (2^m - 1 is odd, so the 1/N factor is 1).
  std::vector<std::uint32_t> extract_message(
      const std::vector<std::uint32_t>& r) const {
    std::vector<std::uint32_t> msg(std::size_t(k_), 0);
    int full = int(gf_.order()) - 1;
    for (int i = 0; i < k_; ++i) {
      std::uint32_t x = gf_.pow_alpha(-i);
      std::uint32_t acc = 0;
      for (int j = full - 1; j >= 0; --j) acc = gf_.mul(acc, x) ^ r[std::size_t(j)];
      msg[std::size_t(i)] = acc;
    }
    return msg;
  }

  GF2m gf_;
  int n_;
  int k_;
};

}  // namespace qdl
