#pragma once

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdl {

/// Packed bit sequence. Bit 0 is the first transmitted bit; within each
/// storage byte bits are packed most-significant-bit first, so the in-memory
/// bytes equal the serialized form.
class BitString {
 public:
  BitString() = default;

  explicit BitString(std::size_t nbits)
      : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

  static BitString from_string(std::string_view s) {
    BitString b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1')
        throw std::invalid_argument("BitString::from_string: bad digit");
      b.set(i, s[i] == '1');
    }
    return b;
  }

  /// Interpret `bytes` MSB-first, keeping the first `nbits` bits.
  static BitString from_bytes(std::span<const std::uint8_t> bytes,
                              std::size_t nbits) {
    if (nbits > bytes.size() * 8)
      throw std::invalid_argument("BitString::from_bytes: not enough bytes");
    BitString b(nbits);
    std::size_t nbytes = (nbits + 7) / 8;
    for (std::size_t i = 0; i < nbytes; ++i) b.bytes_[i] = bytes[i];
    b.mask_tail();
    return b;
  }

  std::size_t size() const { return nbits_; }
  bool empty() const { return nbits_ == 0; }

  bool get(std::size_t i) const {
    check_index(i);
    return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u;
  }

  void set(std::size_t i, bool v) {
    check_index(i);
    std::uint8_t mask = std::uint8_t(1u << (7 - (i & 7)));
    if (v)
      bytes_[i >> 3] |= mask;
    else
      bytes_[i >> 3] &= std::uint8_t(~mask);
  }

  void push_back(bool v) {
    ++nbits_;
    if (bytes_.size() * 8 < nbits_) bytes_.push_back(0);
    set(nbits_ - 1, v);
  }

  void append(const BitString& other) {
    for (std::size_t i = 0; i < other.size(); ++i) push_back(other.get(i));
  }

  BitString slice(std::size_t pos, std::size_t len) const {
    if (pos + len > nbits_)
      throw std::out_of_range("BitString::slice: out of range");
    BitString out(len);
    for (std::size_t i = 0; i < len; ++i) out.set(i, get(pos + i));
    return out;
  }

  /// Pack bits [pos, pos+len) into an integer, bit `pos` most significant.
  std::uint64_t to_uint(std::size_t pos, std::size_t len) const {
    if (len > 64) throw std::invalid_argument("BitString::to_uint: len > 64");
    if (pos + len > nbits_)
      throw std::out_of_range("BitString::to_uint: out of range");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < len; ++i) v = (v << 1) | (get(pos + i) ? 1 : 0);
    return v;
  }

  void set_uint(std::size_t pos, std::size_t len, std::uint64_t v) {
    if (len > 64) throw std::invalid_argument("BitString::set_uint: len > 64");
    if (pos + len > nbits_)
      throw std::out_of_range("BitString::set_uint: out of range");
    for (std::size_t i = 0; i < len; ++i)
      set(pos + i, (v >> (len - 1 - i)) & 1u);
  }

  std::size_t count_ones() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < nbits_; ++i) n += get(i);
    return n;
  }

  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  std::string to_string() const {
    std::string s(nbits_, '0');
    for (std::size_t i = 0; i < nbits_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  friend BitString operator^(const BitString& a, const BitString& b) {
    if (a.nbits_ != b.nbits_)
      throw std::invalid_argument("BitString xor: length mismatch");
    BitString out(a.nbits_);
    for (std::size_t i = 0; i < a.bytes_.size(); ++i)
      out.bytes_[i] = std::uint8_t(a.bytes_[i] ^ b.bytes_[i]);
    return out;
  }

  friend bool operator==(const BitString& a, const BitString& b) {
    return a.nbits_ == b.nbits_ && a.bytes_ == b.bytes_;
  }

  /// File form: 8-byte little-endian length in bits, then the raw MSB-first
  /// bytes. The header is needed because lengths are not byte multiples.
  void write(std::ostream& os) const {
    std::uint64_t n = nbits_;
    for (int i = 0; i < 8; ++i) {
      char c = char((n >> (8 * i)) & 0xff);
      os.put(c);
    }
    os.write(reinterpret_cast<const char*>(bytes_.data()),
             std::streamsize(bytes_.size()));
  }

  static BitString read(std::istream& is) {
    std::uint64_t n = 0;
    for (int i = 0; i < 8; ++i) {
      int c = is.get();
      if (c == EOF) throw std::runtime_error("BitString::read: truncated header");
      n |= std::uint64_t(std::uint8_t(c)) << (8 * i);
    }
    BitString b;
    b.nbits_ = n;
    b.bytes_.resize((n + 7) / 8);
    is.read(reinterpret_cast<char*>(b.bytes_.data()),
            std::streamsize(b.bytes_.size()));
    if (std::size_t(is.gcount()) != b.bytes_.size())
      throw std::runtime_error("BitString::read: truncated payload");
    b.mask_tail();
    return b;
  }

  void save(const std::string& path) const {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("BitString::save: cannot open " + path);
    write(f);
  }

  static BitString load(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("BitString::load: cannot open " + path);
    return read(f);
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= nbits_) throw std::out_of_range("BitString: index out of range");
  }

  // Unused tail bits of the last byte stay zero so equality and file output
  // are canonical.
  void mask_tail() {
    std::size_t tail = nbits_ & 7;
    if (tail != 0 && !bytes_.empty())
      bytes_.back() &= std::uint8_t(0xff << (8 - tail));
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

}  // namespace qdl
