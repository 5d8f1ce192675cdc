// Acceptance harness. Runs every acceptance criterion at its stated
// tolerance, printing one pass/fail line per criterion; most criteria drive
// the CLI binary and read back manifests and CSV files.
//
// usage: qdl_acceptance <cli-binary> <work-dir> [criterion-number]

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qdl/analysis.hpp"
#include "qdl/channel.hpp"
#include "qdl/concatenated.hpp"
#include "qdl/fec.hpp"
#include "qdl/fhs.hpp"
#include "qdl/manifest.hpp"
#include "qdl/rng.hpp"

namespace fs = std::filesystem;
using namespace qdl;

namespace {

std::string g_cli;
std::string g_work;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

int run_cli(const std::string& args) {
  std::string cmd = "\"" + g_cli + "\" " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  if (status < 0) return -1;
  return WEXITSTATUS(status);
}

std::string wdir(const std::string& sub) {
  std::string d = g_work + "/" + sub;
  fs::create_directories(d);
  return d;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  double at(std::size_t row, const std::string& col) const {
    for (std::size_t c = 0; c < header.size(); ++c)
      if (header[c] == col) return rows[row][c];
    throw std::runtime_error("csv: no column " + col);
  }
};

Csv read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  Csv csv;
  std::string line;
  bool first = true;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream is(line);
    std::string cell;
    while (std::getline(is, cell, ',')) cells.push_back(cell);
    if (first) {
      csv.header = cells;
      first = false;
    } else {
      std::vector<double> row;
      for (auto& c : cells) row.push_back(std::stod(c));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// --------------------------------------------------------------------------

bool criterion_1() {
  // reference operating points: (eta, e_b, window on I/n, window on measured e_b)
  struct Row {
    double eta, eb, i_center, i_tol;
    int key_bit;
  };
  bool ok = true;
  for (const Row& r : {Row{0.552, 0.004, 0.531, 0.005, 0},
                       Row{0.566, 0.003, 0.549, 0.015, 1}}) {
    std::string d = wdir(r.key_bit == 0 ? "c1_z" : "c1_y");
    std::ostringstream args;
    args << "dhlst --eta " << r.eta << " --eb " << r.eb
         << " --n-bits 8000000 --key-bit " << r.key_bit
         << " --seed 42 --out " << d;
    auto t0 = std::chrono::steady_clock::now();
    if (run_cli(args.str()) != 0) {
      note("cmd_dhlst exited nonzero");
      return false;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto m = RunManifest::load(d + "/manifest.txt");
    double plugin = m.get_d("i_ab_plugin_per_bit");
    double ebm = m.get_d("eb_measured");
    note("key=" + std::to_string(r.key_bit) + " I/n=" + fmt(plugin) +
         " eb_meas=" + fmt(ebm) + " wall=" + fmt(secs) + "s");
    ok &= std::abs(plugin - r.i_center) <= r.i_tol;
    ok &= std::abs(ebm - r.eb) <= 0.0005;
    ok &= secs < 60.0;
  }
  return ok;
}

bool criterion_2() {
  auto rng = RngStream::from_u64(777, 0);
  bool ok = true;
  for (int i = 0; i < 20; ++i) {
    double eta = 0.2 + 0.75 * rng.next_double();
    double eb = 0.001 + 0.099 * rng.next_double();
    std::string d = wdir("c2_" + std::to_string(i));
    std::ostringstream args;
    args << "dhlst --eta " << eta << " --eb " << eb
         << " --n-bits 1000000 --eve-blocks 0 --seed " << (1000 + i)
         << " --out " << d;
    if (run_cli(args.str()) != 0) {
      note("run " + std::to_string(i) + " failed");
      return false;
    }
    auto m = RunManifest::load(d + "/manifest.txt");
    double diff = std::abs(m.get_d("i_ab_plugin_per_bit") -
                           m.get_d("i_ab_analytic_per_bit"));
    double window = 3.0 * m.get_d("i_ab_plugin_sigma");
    if (diff > window) {
      note("pair " + std::to_string(i) + ": |plugin-analytic|=" + fmt(diff) +
           " > 3sigma=" + fmt(window));
      ok = false;
    }
  }
  return ok;
}

bool criterion_3() {
  bool ok = true;
  for (int key_bit : {0, 1}) {
    double eta = key_bit == 0 ? 0.552 : 0.566;
    double eb = key_bit == 0 ? 0.004 : 0.003;
    std::string d = wdir("c3_" + std::to_string(key_bit));
    std::ostringstream args;
    args << "dhlst --eta " << eta << " --eb " << eb
         << " --n-bits 4000000 --key-bit " << key_bit << " --seed 7 --out " << d;
    if (run_cli(args.str()) != 0) return false;
    auto m = RunManifest::load(d + "/manifest.txt");
    double unlocked = m.get_d("i_ab_plugin_per_bit");
    double eve = m.get_d("eve_i_per_bit");
    double eve_sigma = m.get_d("eve_i_sigma");
    note("key=" + std::to_string(key_bit) + " unlocked/n=" + fmt(unlocked) +
         " eve/n=" + fmt(eve) + "+-" + fmt(eve_sigma));
    ok &= unlocked > 0.5;
    ok &= m.get_d("i_ab_analytic_per_bit") > 0.5;
    ok &= eve <= 0.5 + 3.0 * eve_sigma;
  }
  return ok;
}

bool criterion_4() {
  bool ok = true;
  for (double eps : {1e-6, 1e-9, 1e-12}) {
    std::uint64_t basis = oracle::basis_key_bits_oracle(eps);
    for (double e10 = 3.0; e10 <= 9.0; e10 += 0.5) {
      std::uint64_t n = std::uint64_t(std::pow(10.0, e10));
      std::uint64_t want = basis + oracle::perm_key_bits_oracle(n, eps);
      std::uint64_t got = fhs_key_length(n, eps);
      if (got != want) {
        note("r(" + std::to_string(n) + ", " + fmt(eps) + ") = " +
             std::to_string(got) + " oracle " + std::to_string(want));
        ok = false;
      }
    }
  }
  // the CLI's r_bits column must carry the same ledger values
  std::string d = wdir("c4_cli");
  if (run_cli("fhs --eta 0.5 --epsilon 1e-9 --sweep 1e6:5e6:1e6 --out " + d) != 0)
    return false;
  auto csv = read_csv(d + "/kappa_sweep.csv");
  std::uint64_t basis9 = oracle::basis_key_bits_oracle(1e-9);
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    std::uint64_t n = std::uint64_t(csv.at(i, "n_bits"));
    std::uint64_t want = basis9 + oracle::perm_key_bits_oracle(n, 1e-9);
    if (std::uint64_t(csv.at(i, "r_bits")) != want) {
      note("CLI r_bits mismatch at n=" + std::to_string(n));
      ok = false;
    }
  }
  return ok;
}

bool criterion_5() {
  bool ok = true;
  for (std::uint64_t n = 10'000'000; n <= 640'000'000; n += 10'000'000)
    ok &= fhs_locked_bound(n, 1e-9, 16.12) <= 1.0;
  double end = fhs_locked_bound(640'000'000, 1e-9, 16.12);
  note("bound at n=6.4e8: " + fmt(end));
  ok &= end <= 1.0;
  return ok;
}

std::uint64_t kappa_crossing(double eta) {
  std::uint64_t lo = 1'000'000, hi = 10'000'000'000ull;
  auto kappa = [&](std::uint64_t n) {
    return make_info_report(n, eta, 0.004, 1e-9, 16.12).kappa;
  };
  while (lo + 1 < hi) {
    std::uint64_t mid = lo + (hi - lo) / 2;
    if (kappa(mid) >= 1.0)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

bool criterion_6() {
  bool ok = true;
  std::map<double, Csv> sweeps;
  for (double eta : {0.54, 0.41, 0.33}) {
    std::string d = wdir("c6_" + std::to_string(int(eta * 100)));
    std::ostringstream args;
    args << "fhs --eta " << eta
         << " --eb 0.004 --epsilon 1e-9 --rexp 16.12"
            " --sweep 64e6:640e6:64e6 --seed 11 --out " << d;
    if (run_cli(args.str()) != 0) return false;
    sweeps[eta] = read_csv(d + "/kappa_sweep.csv");
    if (sweeps[eta].rows.size() != 10) {
      note("expected 10 sweep rows");
      ok = false;
    }
  }
  for (auto& [eta, csv] : sweeps) {
    for (std::size_t i = 0; i + 1 < csv.rows.size(); ++i)
      if (!(csv.at(i, "kappa") < csv.at(i + 1, "kappa"))) {
        note("kappa not strictly increasing at eta=" + fmt(eta));
        ok = false;
      }
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
      // every row must satisfy kappa = (i_ab - i_ae - r)/r as printed
      double r = csv.at(i, "r_bits");
      double recomputed =
          (csv.at(i, "i_ab_bits") - csv.at(i, "i_ae_bound_bits") - r) / r;
      if (std::abs(recomputed - csv.at(i, "kappa")) >
          1e-9 * std::max(1.0, std::abs(recomputed))) {
        note("kappa row fails the ledger identity at eta=" + fmt(eta));
        ok = false;
      }
    }
  }
  for (std::size_t i = 0; i < 10; ++i) {
    bool ordered = sweeps[0.54].at(i, "kappa") > sweeps[0.41].at(i, "kappa") &&
                   sweeps[0.41].at(i, "kappa") > sweeps[0.33].at(i, "kappa");
    if (!ordered) {
      note("pointwise eta ordering broken at row " + std::to_string(i));
      ok = false;
    }
  }
  // regression anchors for the kappa = 1 crossing sizes, frozen from this
  // implementation's accounting formulas
  const std::map<double, std::uint64_t> anchors{
      {0.54, 223215587ull}, {0.41, 296674151ull}, {0.33, 371221689ull}};
  std::uint64_t prev = 0;
  for (double eta : {0.54, 0.41, 0.33}) {
    std::uint64_t n1 = kappa_crossing(eta);
    note("kappa=1 at eta=" + fmt(eta) + ": n=" + std::to_string(n1));
    std::uint64_t anchor = anchors.at(eta);
    ok &= n1 + 2 >= anchor && n1 <= anchor + 2;
    ok &= n1 > prev;  // crossing grows as eta shrinks
    prev = n1;
  }
  return ok;
}

bool criterion_7() {
  bool ok = true;

  // exhaustive minimum distance of RS[7,3] o Hadamard[8,3]
  ConcatenatedCode tiny(ReedSolomonCode(3, 7, 3), HadamardCode(3));
  std::vector<BitString> words;
  for (std::uint32_t a = 0; a < 512; ++a) {
    BitString msg(9);
    msg.set_uint(0, 9, a);
    words.push_back(tiny.encode(msg));
  }
  std::size_t dmin = 100;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      dmin = std::min(dmin, (words[i] ^ words[j]).count_ones());
  note("concat min distance = " + std::to_string(dmin));
  ok &= dmin == 20;

  // RS erasure recovery against the Lagrange oracle
  ReedSolomonCode rs(3, 7, 3);
  auto rng = RngStream::from_u64(4242, 0);
  for (int t = 0; t < 10 && ok; ++t) {
    std::vector<std::uint32_t> msg(3);
    for (auto& s : msg) s = std::uint32_t(rng.next_below(8));
    auto cw = rs.encode(msg);
    for (int mask = 0; mask < 128; ++mask) {
      if (__builtin_popcount(unsigned(mask)) != 4) continue;
      std::vector<std::int32_t> word(cw.begin(), cw.end());
      for (int j = 0; j < 7; ++j)
        if (mask & (1 << j)) word[std::size_t(j)] = ReedSolomonCode::kErased;
      auto got = rs.decode(word);
      auto ref = oracle::lagrange_rs_decode(rs.field(), 7, 3, word);
      if (!got || !ref || *got != msg || *ref != msg) {
        note("erasure recovery mismatch, mask " + std::to_string(mask));
        ok = false;
        break;
      }
    }
  }

  // inner ML decoder vs exhaustive nearest-codeword search
  for (int k = 1; k <= 6 && ok; ++k) {
    HadamardCode had(k);
    for (int t = 0; t < 300; ++t) {
      std::vector<Trit> word(had.n());
      for (auto& w : word) {
        std::uint64_t v = rng.next_below(4);
        w = v == 3 ? Trit::Erased : (v == 1 ? Trit::One : Trit::Zero);
      }
      auto got = had.decode(word);
      auto want = oracle::naive_hadamard_search(k, word);
      if (got.msg != want.msg || got.confidence != want.confidence) {
        note("inner ML mismatch at k=" + std::to_string(k));
        ok = false;
        break;
      }
    }
  }
  return ok;
}

bool criterion_8() {
  bool ok = true;
  auto code = ConcatenatedCode::production();
  auto key_rng = RngStream::from_u64(5150, stream_tag::kKeyGen);
  LockingKey key = LockingKey::generate(key_rng, {1e-9, 1000 * code.codeword_bits()});
  auto msg_rng = RngStream::from_u64(5150, stream_tag::kMessage);
  auto ch_rng = RngStream::from_u64(5150, stream_tag::kChannel);

  // lossless noiseless roundtrip over 1000 random blocks
  int exact = 0;
  for (std::uint64_t b = 0; b < 1000; ++b) {
    BitString msg = draw_bits(msg_rng, code.message_bits());
    auto ct = fhs_encode(msg, key, code, b);
    auto bases = derive_bases(key.basis_seed, ct.symbols.size(), b);
    auto out = transmit_block(ct.symbols, bases, {1.0, 0.0}, ch_rng);
    auto dec = fhs_decode(out, key, code, b);
    if (dec && *dec == msg) ++exact;
  }
  note("lossless roundtrips exact: " + std::to_string(exact) + "/1000");
  ok &= exact == 1000;

  // wrong-key bit agreement over >= 1e5 bits
  auto wrong_rng = RngStream::from_u64(5151, stream_tag::kKeyGen);
  LockingKey wrong = LockingKey::generate(wrong_rng, {1e-9, 1000 * code.codeword_bits()});
  std::uint64_t agree = 0, total = 0;
  const int m = code.outer().field().m();
  for (std::uint64_t b = 0; total < 100'000; ++b) {
    BitString msg = draw_bits(msg_rng, code.message_bits());
    auto ct = fhs_encode(msg, key, code, b);
    auto bob_bases = derive_bases(wrong.basis_seed, ct.symbols.size(), b);
    auto out = transmit_block(ct.symbols, bob_bases, {1.0, 0.0}, ch_rng);
    std::vector<Trit> trits(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) trits[i] = out[i].to_trit();
    auto perm = derive_permutation(wrong.perm_seed, out.size(), b);
    auto unshuffled =
        apply_permutation(invert_permutation(perm), std::span<const Trit>(trits));
    std::vector<std::uint32_t> msg_syms(std::size_t(code.outer().k()));
    for (int s = 0; s < code.outer().k(); ++s)
      msg_syms[std::size_t(s)] =
          std::uint32_t(msg.to_uint(std::size_t(s) * std::size_t(m), std::size_t(m)));
    auto cw_syms = code.outer().encode(msg_syms);
    for (int blk = 0; blk < code.outer().n(); ++blk) {
      auto span = std::span<const Trit>(unshuffled)
                      .subspan(std::size_t(blk) * code.inner().n(), code.inner().n());
      std::uint32_t got = code.inner().decode(span).msg;
      std::uint32_t want = cw_syms[std::size_t(blk)];
      for (int i = 0; i < m; ++i) {
        ++total;
        if (((got >> i) & 1) == ((want >> i) & 1)) ++agree;
      }
    }
  }
  double frac = double(agree) / double(total);
  note("wrong-key agreement " + fmt(frac) + " over " + std::to_string(total) + " bits");
  ok &= std::abs(frac - 0.5) <= 0.01;
  return ok;
}

bool criterion_9() {
  bool ok = true;
  std::string d = wdir("c9");

  // deterministic pseudorandom payload, 100 KiB
  std::string payload = d + "/payload.bin";
  {
    auto rng = RngStream::from_u64(2209, 0);
    std::vector<std::uint8_t> bytes(102400);
    for (auto& b : bytes) b = std::uint8_t(rng.next_below(256));
    std::ofstream f(payload, std::ios::binary);
    f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  }
  for (const char* stale : {"key.bin", "wrong_key.bin"})
    fs::remove(d + "/" + stale);

  // repetition bound in the log domain: 152 log(1-0.33) <= -50
  double log_fail = 152.0 * std::log1p(-0.33);
  ok &= log_fail <= -50.0;
  ok &= repetition_factor(0.33) == 152;
  ok &= recovery_probability(0.33, 152) >= -std::expm1(-50.0);
  note("repetition: m=152, log(1-p_rec)=" + fmt(log_fail));

  // FEC on, correct key: bit-exact
  std::ostringstream on;
  on << "send-file --in " << payload << " --out " << d << "/fec_on.bin"
     << " --key-file " << d << "/key.bin --eta 0.33 --eb 0.004 --epsilon 1e-9"
     << " --fec on --seed 91 --manifest " << d << "/fec_on.manifest.txt";
  if (run_cli(on.str()) != 0) {
    note("send-file (fec on) exited nonzero");
    return false;
  }
  auto mon = RunManifest::load(d + "/fec_on.manifest.txt");
  bool exact = mon.get("in_fnv") == mon.get("out_fnv") &&
               mon.get_d("bit_agreement") == 1.0;
  ok &= exact;
  ok &= mon.get_u("fec_factor") == 152;
  // leakage ledger inflates the keyless bound by exactly m
  ok &= std::abs(mon.get_d("i_ae_bound_effective") -
                 152.0 * mon.get_d("i_ae_bound_base")) <
        1e-12 * std::max(1.0, mon.get_d("i_ae_bound_effective"));
  note(std::string("fec on: bit-exact=") + (exact ? "yes" : "no") +
       " blocks=" + mon.get("blocks"));

  // FEC off: the criterion expects at least one failed block at eta = 0.33.
  // The production RS[63,42]+Hadamard[64,6] pipeline absorbs 67% erasure with
  // failure probability around 1e-30 per block, so this clause cannot pass;
  // it is asserted as stated and reported honestly.
  std::ostringstream off;
  off << "send-file --in " << payload << " --out " << d << "/fec_off.bin"
      << " --key-file " << d << "/key.bin --eta 0.33 --eb 0.004 --epsilon 1e-9"
      << " --fec off --seed 92 --manifest " << d << "/fec_off.manifest.txt";
  if (run_cli(off.str()) != 0) {
    note("send-file (fec off) exited nonzero");
    return false;
  }
  auto moff = RunManifest::load(d + "/fec_off.manifest.txt");
  std::uint64_t failed = moff.get_u("blocks_failed");
  note("fec off: blocks_failed=" + std::to_string(failed) + " of " +
       moff.get("blocks") + " (criterion expects >= 1)");
  ok &= failed >= 1;

  // wrong key: agreement 0.5 +/- 3 sigma
  std::ostringstream wrong;
  wrong << "send-file --in " << payload << " --out " << d << "/wrong_key.bin"
        << " --key-file " << d << "/key.bin --decode-key-file " << d
        << "/wrong_key_file.bin --eta 0.33 --eb 0.004 --epsilon 1e-9"
        << " --fec on --seed 93 --manifest " << d << "/wrong.manifest.txt";
  if (run_cli(wrong.str()) != 0) {
    note("send-file (wrong key) exited nonzero");
    return false;
  }
  auto mw = RunManifest::load(d + "/wrong.manifest.txt");
  double agreement = mw.get_d("bit_agreement");
  double sigma = 0.5 / std::sqrt(double(mw.get_u("msg_bits")));
  note("wrong key: agreement=" + fmt(agreement) + " (3sigma=" + fmt(3 * sigma) + ")");
  ok &= std::abs(agreement - 0.5) <= 3.0 * sigma;
  return ok;
}

bool criterion_10() {
  std::string d = wdir("c10");
  if (run_cli("rates --p-grid 0.01:0.49:0.02 --out " + d) != 0) return false;
  auto csv = read_csv(d + "/capacity.csv");
  bool ok = csv.rows.size() == 25;
  for (std::size_t i = 0; i < csv.rows.size(); ++i) {
    double p = csv.at(i, "p");
    ok &= std::abs(csv.at(i, "classical") - (1.0 - p)) <= 1e-11;
    ok &= std::abs(csv.at(i, "private") - (1.0 - 2.0 * p)) <= 1e-11;
    ok &= csv.at(i, "dl_rate") > csv.at(i, "private");
    ok &= csv.at(i, "qkd_otp_rate") <= csv.at(i, "dl_rate") / 2.0 + 1e-12;
  }
  note("rows=" + std::to_string(csv.rows.size()));
  return ok;
}

bool criterion_11() {
  bool ok = true;

  // same seed twice: byte-identical manifests except timestamps
  std::string a = wdir("c11_a"), b = wdir("c11_b");
  std::string flags = "dhlst --eta 0.5 --eb 0.01 --n-bits 200000 --seed 5 --out ";
  if (run_cli(flags + a) != 0 || run_cli(flags + b) != 0) return false;
  auto ma = RunManifest::load(a + "/manifest.txt");
  auto mb = RunManifest::load(b + "/manifest.txt");
  ok &= RunManifest::equal_except_timestamps(ma, mb);

  // manifest replay across subcommands
  std::string fd = wdir("c11_fhs");
  if (run_cli("fhs --eta 0.41 --eb 0.004 --sweep 64e6:320e6:64e6 --simulate "
              "--max-blocks 40 --seed 6 --out " + fd) != 0)
    return false;
  std::string fr = wdir("c11_fhs_replay");
  if (run_cli("replay --manifest " + fd + "/manifest.txt --out " + fr) != 0)
    return false;
  auto mf = RunManifest::load(fd + "/manifest.txt");
  auto mfr = RunManifest::load(fr + "/manifest.txt");
  ok &= RunManifest::equal_except_timestamps(mf, mfr);
  note("fhs replay csv_fnv " + mf.get("csv_fnv") + " -> " + mfr.get("csv_fnv"));

  std::string rd = wdir("c11_rates");
  if (run_cli("rates --p-grid 0.05:0.45:0.05 --out " + rd) != 0) return false;
  std::string rr = wdir("c11_rates_replay");
  if (run_cli("replay --manifest " + rd + "/manifest.txt --out " + rr) != 0)
    return false;
  ok &= RunManifest::equal_except_timestamps(RunManifest::load(rd + "/manifest.txt"),
                                             RunManifest::load(rr + "/manifest.txt"));

  std::string dd = wdir("c11_dhlst");
  if (run_cli("dhlst --eta 0.552 --eb 0.004 --n-bits 500000 --seed 13 --out " + dd) != 0)
    return false;
  std::string dr = wdir("c11_dhlst_replay");
  if (run_cli("replay --manifest " + dd + "/manifest.txt --out " + dr) != 0)
    return false;
  ok &= RunManifest::equal_except_timestamps(RunManifest::load(dd + "/manifest.txt"),
                                             RunManifest::load(dr + "/manifest.txt"));
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {1, "reference operating points reproduced via cmd_dhlst", criterion_1},
    {2, "plug-in I(A:B) matches eta(1-H(e_b)) within 3 sigma, 20 pairs", criterion_2},
    {3, "locking violation: unlocked > n/2 bound, fixed-basis Eve <= 1/2", criterion_3},
    {4, "FHS key ledger equals the ceiling formula on the (n, eps) grid", criterion_4},
    {5, "leakage bound <= 1 up to n = 6.4e8 at eps = 1e-9", criterion_5},
    {6, "kappa sweep: increasing, eta-ordered, crossings at the recorded anchors", criterion_6},
    {7, "code oracles: distance 20, Lagrange erasure recovery, exhaustive ML", criterion_7},
    {8, "FHS roundtrip exactness and wrong-key coin-flip agreement", criterion_8},
    {9, "FEC demo: bit-exact with FEC, failed blocks without, random with wrong key", criterion_9},
    {10, "capacity ordering on the erasure grid", criterion_10},
    {11, "manifest replay determinism", criterion_11},
};

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: qdl_acceptance <cli-binary> <work-dir> [criterion]\n";
    return 2;
  }
  g_cli = argv[1];
  g_work = argv[2];
  fs::create_directories(g_work);
  int only = argc > 3 ? std::atoi(argv[3]) : 0;

  int failures = 0;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    g_notes.clear();
    bool ok = false;
    try {
      ok = c.fn();
    } catch (const std::exception& e) {
      note(std::string("exception: ") + e.what());
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": "
              << c.title << "\n";
    for (const auto& n : g_notes) std::cout << "       - " << n << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
