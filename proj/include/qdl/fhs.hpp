#pragma once

#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdl/bitstring.hpp"
#include "qdl/concatenated.hpp"
#include "qdl/permutation.hpp"
#include "qdl/rng.hpp"
#include "qdl/types.hpp"

namespace qdl {

/// Session security parameters: leakage bound epsilon and the number of
/// qubits the key is charged for.
struct SecurityParams {
  double epsilon;
  std::uint64_t n_qubits;

  void validate() const {
    if (!(epsilon > 0.0 && epsilon < 1.0))
      throw std::invalid_argument("SecurityParams: epsilon outside (0,1)");
    if (n_qubits < 1)
      throw std::invalid_argument("SecurityParams: n_qubits must be >= 1");
  }
};

/// Key cost of the basis-choice stage: ceil(log2(2/eps^2)) bits.
inline std::uint64_t basis_key_bits(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("basis_key_bits: epsilon outside (0,1)");
  long double x = 1.0L - 2.0L * std::log2((long double)epsilon);
  return (std::uint64_t)std::ceil(x);
}

/// Total accounted key length r(n, eps) =
/// ceil(log2(2/eps^2)) + ceil(40000 log2(24 n^2 / eps)).
inline std::uint64_t fhs_key_length(std::uint64_t n, double epsilon) {
  if (n < 1) throw std::invalid_argument("fhs_key_length: n must be >= 1");
  return basis_key_bits(epsilon) + perm_key_bits(n, epsilon);
}

/// Structured secret key: basis-seed segment plus permutation-seed segment.
/// r() reports the accounted lengths, which follow the session formula rather
/// than the stored bit counts.
struct LockingKey {
  BitString basis_seed;   // stored length == accounted basis length
  PermutationSeed perm_seed;
  double epsilon = 0.0;
  std::uint64_t n_qubits = 0;

  std::uint64_t r() const {
    return basis_seed.size() + perm_seed.accounted_length;
  }

  static LockingKey generate(RngStream& rng, const SecurityParams& sp) {
    sp.validate();
    LockingKey key;
    key.epsilon = sp.epsilon;
    key.n_qubits = sp.n_qubits;
    key.basis_seed = draw_bits(rng, basis_key_bits(sp.epsilon));
    key.perm_seed = PermutationSeed::make(draw_bits(rng, 256), sp.n_qubits,
                                          sp.epsilon);
    return key;
  }

  // Key file: magic "QDLKEY01", epsilon as little-endian IEEE-754 double,
  // n_qubits as 8-byte little-endian, then the two seeds as length-prefixed
  // bit strings.
  void save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("LockingKey::save: cannot open " + path);
    f.write("QDLKEY01", 8);
    std::uint64_t eps_bits;
    static_assert(sizeof(double) == 8);
    std::memcpy(&eps_bits, &epsilon, 8);
    write_u64(f, eps_bits);
    write_u64(f, n_qubits);
    basis_seed.write(f);
    perm_seed.bits.write(f);
    if (!f) throw std::runtime_error("LockingKey::save: write failed");
  }

  static LockingKey load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("LockingKey::load: cannot open " + path);
    char magic[8];
    f.read(magic, 8);
    if (f.gcount() != 8 || std::string(magic, 8) != "QDLKEY01")
      throw std::runtime_error("LockingKey::load: bad magic");
    LockingKey key;
    std::uint64_t eps_bits = read_u64(f);
    std::memcpy(&key.epsilon, &eps_bits, 8);
    key.n_qubits = read_u64(f);
    key.basis_seed = BitString::read(f);
    key.perm_seed.bits = BitString::read(f);
    SecurityParams sp{key.epsilon, key.n_qubits};
    sp.validate();
    key.perm_seed.accounted_length = perm_key_bits(key.n_qubits, key.epsilon);
    if (key.basis_seed.size() != basis_key_bits(key.epsilon))
      throw std::runtime_error("LockingKey::load: basis seed length mismatch");
    return key;
  }

 private:
  static void write_u64(std::ostream& os, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) os.put(char((v >> (8 * i)) & 0xff));
  }
  static std::uint64_t read_u64(std::istream& is) {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      int c = is.get();
      if (c == EOF) throw std::runtime_error("LockingKey::load: truncated");
      v |= std::uint64_t(std::uint8_t(c)) << (8 * i);
    }
    return v;
  }
};

/// Expand the basis seed into n basis choices (Z for 0, Y for 1). `block`
/// selects the per-block substream of a multi-block session.
inline std::vector<Basis> derive_bases(const BitString& basis_seed, std::size_t n,
                                       std::uint64_t block = 0) {
  if (n < 1) throw std::invalid_argument("derive_bases: n must be >= 1");
  RngStream rng =
      RngStream::from_bits(basis_seed, stream_tag::kBasisDerive).substream(block);
  std::vector<Basis> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = rng.next_bit() ? Basis::Y : Basis::Z;
  return out;
}

/// One locked block: qubit symbols plus the parameters needed to invert it.
struct FhsCiphertext {
  std::vector<QubitSymbol> symbols;
  struct Meta {
    int gf_m;
    int n_rs;
    int k_rs;
    std::uint64_t n_qubits;
    double epsilon;
    std::uint64_t block_index;
  } meta;
};

/// Two-stage locking of one code block: concatenated encode, keyed
/// permutation of the codeword bits, then key-derived basis assignment.
inline FhsCiphertext fhs_encode(const BitString& msg, const LockingKey& key,
                                const ConcatenatedCode& code,
                                std::uint64_t block = 0) {
  if (msg.size() != code.message_bits())
    throw std::invalid_argument("fhs_encode: wrong message length");
  BitString cw = code.encode(msg);
  Permutation perm = derive_permutation(key.perm_seed, cw.size(), block);
  BitString shuffled = apply_permutation(perm, cw);
  std::vector<Basis> bases = derive_bases(key.basis_seed, cw.size(), block);
  FhsCiphertext ct;
  ct.symbols.resize(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i)
    ct.symbols[i] = QubitSymbol{bases[i], std::uint8_t(shuffled.get(i) ? 1 : 0)};
  ct.meta = {code.outer().field().m(), code.outer().n(), code.outer().k(),
             key.n_qubits, key.epsilon, block};
  return ct;
}

/// Time-reversal of fhs_encode on already-collapsed trits: un-permute with
/// erasures travelling along, then decode.
inline std::optional<BitString> fhs_decode_trits(std::span<const Trit> trits,
                                                 const LockingKey& key,
                                                 const ConcatenatedCode& code,
                                                 std::uint64_t block = 0) {
  if (trits.size() != code.codeword_bits())
    throw std::invalid_argument("fhs_decode: wrong word length");
  Permutation perm = derive_permutation(key.perm_seed, trits.size(), block);
  Permutation inv = invert_permutation(perm);
  std::vector<Trit> unshuffled = apply_permutation(inv, trits);
  return code.decode(unshuffled);
}

/// Time-reversal of fhs_encode: outcomes (measured in the derived bases) are
/// mapped to trits, un-permuted with erasures travelling along, then decoded.
inline std::optional<BitString> fhs_decode(std::span<const ChannelOutcome> outcomes,
                                           const LockingKey& key,
                                           const ConcatenatedCode& code,
                                           std::uint64_t block = 0) {
  if (outcomes.size() != code.codeword_bits())
    throw std::invalid_argument("fhs_decode: wrong outcome length");
  std::vector<Trit> trits(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) trits[i] = outcomes[i].to_trit();
  return fhs_decode_trits(trits, key, code, block);
}

}  // namespace qdl
