#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qdl/concatenated.hpp"
#include "qdl/rng.hpp"

using qdl::BitString;
using qdl::ConcatenatedCode;
using qdl::HadamardCode;
using qdl::ReedSolomonCode;
using qdl::Trit;

namespace {

ConcatenatedCode tiny() {
  return ConcatenatedCode(ReedSolomonCode(3, 7, 3), HadamardCode(3));
}

std::vector<Trit> to_trits(const BitString& b) {
  std::vector<Trit> out(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = qdl::trit_of(b.get(i));
  return out;
}

}  // namespace

TEST_CASE("inner message size must equal outer symbol size") {
  CHECK_THROWS_AS(ConcatenatedCode(ReedSolomonCode(3, 7, 3), HadamardCode(4)),
                  std::invalid_argument);
}

TEST_CASE("production code has rate 252/4032 = 1/16") {
  auto code = ConcatenatedCode::production();
  CHECK(code.message_bits() == 252);
  CHECK(code.codeword_bits() == 4032);
  CHECK(code.rate() == Catch::Approx(1.0 / 16.0));
  CHECK(code.min_distance() == 22 * 32);
}

TEST_CASE("frozen tiny codeword") {
  auto code = tiny();
  BitString msg = BitString::from_string("101011110");  // symbols 5, 3, 6
  CHECK(code.encode(msg).to_string() ==
        "00000000001111000000000001100110011001100011110001011010");
}

TEST_CASE("all-zero message gives the all-zero codeword") {
  auto code = tiny();
  CHECK(code.encode(BitString(9)) == BitString(56));
}

TEST_CASE("wrong message length is a contract error") {
  auto code = tiny();
  CHECK_THROWS_AS(code.encode(BitString(8)), std::invalid_argument);
  std::vector<Trit> short_word(55, Trit::Zero);
  CHECK_THROWS_AS(code.decode(short_word), std::invalid_argument);
}

TEST_CASE("exhaustive min distance of RS[7,3] o Hadamard[8,3] is 20") {
  auto code = tiny();
  std::vector<BitString> words;
  for (std::uint32_t a = 0; a < 512; ++a) {
    BitString msg(9);
    msg.set_uint(0, 9, a);
    words.push_back(code.encode(msg));
  }
  std::size_t dmin = 100;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      dmin = std::min(dmin, (words[i] ^ words[j]).count_ones());
  CHECK(dmin == 20);
  CHECK(dmin == code.min_distance());
}

TEST_CASE("linearity of the concatenated encoder") {
  auto code = tiny();
  auto rng = qdl::RngStream::from_u64(31, 0);
  for (int t = 0; t < 100; ++t) {
    BitString a = qdl::draw_bits(rng, 9);
    BitString b = qdl::draw_bits(rng, 9);
    CHECK(code.encode(a ^ b) == (code.encode(a) ^ code.encode(b)));
  }
}

TEST_CASE("noiseless roundtrip, tiny and production") {
  auto rng = qdl::RngStream::from_u64(32, 1);
  auto t = tiny();
  for (int i = 0; i < 800; ++i) {
    BitString msg = qdl::draw_bits(rng, t.message_bits());
    auto dec = t.decode(to_trits(t.encode(msg)));
    REQUIRE(dec.has_value());
    REQUIRE(*dec == msg);
  }
  auto p = ConcatenatedCode::production();
  for (int i = 0; i < 200; ++i) {
    BitString msg = qdl::draw_bits(rng, p.message_bits());
    auto dec = p.decode(to_trits(p.encode(msg)));
    REQUIRE(dec.has_value());
    REQUIRE(*dec == msg);
  }
}

TEST_CASE("all-erased word fails to decode") {
  auto code = tiny();
  std::vector<Trit> word(code.codeword_bits(), Trit::Erased);
  CHECK_FALSE(code.decode(word).has_value());
}

TEST_CASE("30% bit erasures on the production code: recovery rate >= 0.99") {
  auto code = ConcatenatedCode::production();
  auto rng = qdl::RngStream::from_u64(33, 2);
  int ok = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    BitString msg = qdl::draw_bits(rng, code.message_bits());
    auto word = to_trits(code.encode(msg));
    for (auto& tr : word)
      if (rng.next_bernoulli(0.30)) tr = Trit::Erased;
    auto dec = code.decode(word);
    if (dec && *dec == msg) ++ok;
  }
  INFO("measured recovery rate " << ok << "/" << trials);
  CHECK(ok >= 99);
}
