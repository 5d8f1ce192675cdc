// Command-line driver: DHLST and FHS locking runs over the simulated lossy
// channel, the repetition-coded file-transfer demo, and the capacity-curve
// tables. Every run writes a manifest that reproduces it bit-exactly.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qdl/analysis.hpp"
#include "qdl/channel.hpp"
#include "qdl/dhlst.hpp"
#include "qdl/fec.hpp"
#include "qdl/fhs.hpp"
#include "qdl/manifest.hpp"
#include "qdl/version.hpp"

namespace fs = std::filesystem;
using namespace qdl;

namespace {

struct KeyFileError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RunManifest new_manifest(const std::string& scheme) {
  RunManifest m;
  m.set_i("manifest_version", 1);
  m.set("artifact", std::string("qdl ") + kVersion);
  m.set("scheme", scheme);
  m.set("created_at", iso8601_now());
  return m;
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir);
}

std::uint64_t write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f << text;
  if (!f) throw IoError("write failed: " + path);
  return fnv1a64_str(text);
}

std::vector<std::uint8_t> read_binary(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                                  std::istreambuf_iterator<char>());
  return bytes;
}

void write_binary(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open " + path);
  f.write(reinterpret_cast<const char*>(bytes.data()), std::streamsize(bytes.size()));
  if (!f) throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------------------
// dhlst subcommand
// ---------------------------------------------------------------------------

struct DhlstConfig {
  double eta = 0.552;
  double e_b = 0.0;
  std::uint64_t n_bits = 10'000'000;
  int key_bit = 0;
  std::uint64_t seed = 1;
  int eve_blocks = 16;
  std::string out = ".";
};

// Delta-method 1-sigma window for the plug-in estimate of eta(1 - H(e_b)).
double plugin_sigma(double eta, double e_b, double n) {
  double di_deta = 1.0 - binary_entropy(e_b);
  double var = di_deta * di_deta * eta * (1.0 - eta) / n;
  if (e_b > 0.0 && e_b < 1.0 && eta > 0.0) {
    double di_de = eta * std::log2((1.0 - e_b) / e_b);
    var += di_de * di_de * e_b * (1.0 - e_b) / (n * eta);
  }
  return std::sqrt(var);
}

RunManifest run_dhlst(const DhlstConfig& cfg) {
  ChannelParams params{cfg.eta, cfg.e_b};
  params.validate();
  if (cfg.n_bits < 1) throw std::invalid_argument("n-bits must be >= 1");
  if (cfg.key_bit != 0 && cfg.key_bit != 1)
    throw std::invalid_argument("key-bit must be 0 or 1");
  ensure_dir(cfg.out);

  RunManifest m = new_manifest("dhlst");
  m.set_u("seed", cfg.seed);
  m.set_d("eta", cfg.eta);
  m.set_d("e_b", cfg.e_b);
  m.set_u("n_bits", cfg.n_bits);
  m.set_i("key_bit", cfg.key_bit);
  m.set_i("eve_blocks", cfg.eve_blocks);

  DhlstKey key{std::uint8_t(cfg.key_bit)};
  auto msg_rng = RngStream::from_u64(cfg.seed, stream_tag::kMessage);
  auto ch_rng = RngStream::from_u64(cfg.seed, stream_tag::kChannel);

  BitString msg = draw_bits(msg_rng, cfg.n_bits);
  auto symbols = dhlst_encode(msg, key);
  std::vector<Basis> bases(symbols.size(), key.basis());
  auto outcomes = transmit_block(symbols, bases, params, ch_rng);

  std::uint64_t detected = 0, errors = 0;
  JointCounts jc;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    int sent = msg.get(i) ? 1 : 0;
    jc.add(sent, outcomes[i].to_trit());
    if (!outcomes[i].detected) continue;
    ++detected;
    if (outcomes[i].bit != sent) ++errors;
  }
  double eta_hat = double(detected) / double(cfg.n_bits);
  double eb_hat = detected ? double(errors) / double(detected) : 0.0;
  double analytic = mutual_info_rate(cfg.eta, cfg.e_b);
  double plugin = jc.mutual_information();
  double sigma = plugin_sigma(cfg.eta, cfg.e_b, double(cfg.n_bits));

  // Counterfactual eavesdropper: fresh traffic with a random key per block,
  // all of it measured in Z. Correct-basis blocks leak fully, the rest leak
  // nothing; the per-bit average must stay at or below the n/2 line.
  double eve_mean = 0.0, eve_sigma = 0.0;
  if (cfg.eve_blocks > 0) {
    auto eve_root = RngStream::from_u64(cfg.seed, stream_tag::kEve);
    auto key_rng = RngStream::from_u64(cfg.seed, stream_tag::kDhlstBlockKeys);
    std::uint64_t block_bits = std::max<std::uint64_t>(1, cfg.n_bits / std::uint64_t(cfg.eve_blocks));
    std::vector<double> per_block;
    for (int b = 0; b < cfg.eve_blocks; ++b) {
      auto bmsg_rng = eve_root.substream(2 * std::uint64_t(b));
      auto bch_rng = eve_root.substream(2 * std::uint64_t(b) + 1);
      DhlstKey bkey{std::uint8_t(key_rng.next_bit() ? 1 : 0)};
      BitString bmsg = draw_bits(bmsg_rng, block_bits);
      auto bsym = dhlst_encode(bmsg, bkey);
      std::vector<Basis> eve_bases(bsym.size(), Basis::Z);
      auto bout = transmit_block(bsym, eve_bases, params, bch_rng);
      JointCounts bj;
      for (std::size_t i = 0; i < bout.size(); ++i)
        bj.add(bmsg.get(i) ? 1 : 0, bout[i].to_trit());
      per_block.push_back(bj.mutual_information());
    }
    for (double v : per_block) eve_mean += v;
    eve_mean /= double(per_block.size());
    double ss = 0.0;
    for (double v : per_block) ss += (v - eve_mean) * (v - eve_mean);
    if (per_block.size() > 1)
      eve_sigma = std::sqrt(ss / double(per_block.size() - 1)) /
                  std::sqrt(double(per_block.size()));
  }

  m.set_d("eta_measured", eta_hat);
  m.set_d("eb_measured", eb_hat);
  m.set_d("i_ab_analytic_per_bit", analytic);
  m.set_d("i_ab_plugin_per_bit", plugin);
  m.set_d("i_ab_plugin_sigma", sigma);
  m.set_d("i_ab_bits", analytic * double(cfg.n_bits));
  m.set_d("locked_bound_bits", dhlst_locked_bound(cfg.n_bits));
  m.set_d("eve_i_per_bit", eve_mean);
  m.set_d("eve_i_sigma", eve_sigma);
  m.set_i("key_bits", 1);

  std::ostringstream csv;
  csv << "eta,e_b,n_bits,key_bit,eta_measured,eb_measured,"
         "i_ab_analytic_per_bit,i_ab_plugin_per_bit,eve_i_per_bit\n"
      << fmt12(cfg.eta) << ',' << fmt12(cfg.e_b) << ',' << cfg.n_bits << ','
      << cfg.key_bit << ',' << fmt12(eta_hat) << ',' << fmt12(eb_hat) << ','
      << fmt12(analytic) << ',' << fmt12(plugin) << ',' << fmt12(eve_mean)
      << '\n';
  std::uint64_t digest = write_text_file(cfg.out + "/dhlst.csv", csv.str());
  m.set_hex("csv_fnv", digest);
  m.save(cfg.out + "/manifest.txt");
  return m;
}

// ---------------------------------------------------------------------------
// fhs subcommand
// ---------------------------------------------------------------------------

struct FhsConfig {
  double eta = 0.54;
  double e_b = 0.0;
  double epsilon = 1e-9;
  double r_exp = 16.12;
  std::uint64_t n_bits = 0;      // single point when nonzero
  std::string sweep;             // "start:stop:step"
  bool simulate = false;
  std::uint64_t max_blocks = 2481;
  std::uint64_t seed = 1;
  std::string out = ".";
};

std::vector<std::uint64_t> parse_sweep(const std::string& spec) {
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0 || start <= 0 || stop < start)
    throw std::invalid_argument("bad --sweep, want start:stop:step");
  std::vector<std::uint64_t> ns;
  for (double v = start; v <= stop + step / 2; v += step)
    ns.push_back(std::uint64_t(std::llround(v)));
  return ns;
}

RunManifest run_fhs(const FhsConfig& cfg) {
  ChannelParams params{cfg.eta, cfg.e_b};
  params.validate();
  SecurityParams sp{cfg.epsilon, 1};
  sp.validate();
  if (cfg.n_bits == 0 && cfg.sweep.empty())
    throw std::invalid_argument("need --n-bits or --sweep");
  ensure_dir(cfg.out);

  std::vector<std::uint64_t> ns =
      cfg.sweep.empty() ? std::vector<std::uint64_t>{cfg.n_bits}
                        : parse_sweep(cfg.sweep);

  auto code = ConcatenatedCode::production();

  RunManifest m = new_manifest("fhs");
  m.set_u("seed", cfg.seed);
  m.set_d("eta", cfg.eta);
  m.set_d("e_b", cfg.e_b);
  m.set_d("epsilon", cfg.epsilon);
  m.set_d("r_exp", cfg.r_exp);
  m.set_u("n_bits", cfg.n_bits);
  m.set("sweep", cfg.sweep.empty() ? "-" : cfg.sweep);
  m.set("simulate", cfg.simulate ? "on" : "off");
  m.set_u("max_blocks", cfg.max_blocks);
  m.set_i("code_m", code.outer().field().m());
  m.set_i("code_n_rs", code.outer().n());
  m.set_i("code_k_rs", code.outer().k());
  m.set_d("code_rate", code.rate());

  std::vector<KappaRow> rows;
  for (std::uint64_t n : ns) {
    InfoReport rep = make_info_report(n, cfg.eta, cfg.e_b, cfg.epsilon, cfg.r_exp);
    rows.push_back({cfg.eta, cfg.e_b, cfg.epsilon, rep.n, rep.r, rep.i_ab,
                    rep.i_ae_bound, rep.kappa});
  }
  std::ostringstream csv;
  write_kappa_csv(csv, rows);
  std::uint64_t digest = write_text_file(cfg.out + "/kappa_sweep.csv", csv.str());
  m.set_hex("csv_fnv", digest);
  m.set_u("points", rows.size());
  m.set_d("kappa_first", rows.front().kappa);
  m.set_d("kappa_last", rows.back().kappa);

  if (cfg.simulate) {
    std::uint64_t n = ns.back();
    std::uint64_t blocks =
        std::min<std::uint64_t>(cfg.max_blocks,
                                std::max<std::uint64_t>(1, n / code.codeword_bits()));
    auto key_rng = RngStream::from_u64(cfg.seed, stream_tag::kKeyGen);
    LockingKey key = LockingKey::generate(key_rng, SecurityParams{cfg.epsilon, n});
    auto msg_root = RngStream::from_u64(cfg.seed, stream_tag::kMessage);
    auto ch_root = RngStream::from_u64(cfg.seed, stream_tag::kChannel);
    std::uint64_t recovered = 0, qubits = 0, detected = 0;
    for (std::uint64_t b = 0; b < blocks; ++b) {
      auto msg_rng = msg_root.substream(b);
      auto ch_rng = ch_root.substream(b);
      BitString msg = draw_bits(msg_rng, code.message_bits());
      auto ct = fhs_encode(msg, key, code, b);
      auto bob_bases = derive_bases(key.basis_seed, ct.symbols.size(), b);
      auto outcomes = transmit_block(ct.symbols, bob_bases, params, ch_rng);
      for (const auto& oc : outcomes) {
        ++qubits;
        if (oc.detected) ++detected;
      }
      auto dec = fhs_decode(outcomes, key, code, b);
      if (dec && *dec == msg) ++recovered;
    }
    m.set_u("sim_n", n);
    m.set_u("sim_blocks", blocks);
    m.set_u("sim_recovered", recovered);
    m.set_d("sim_recovery_rate", double(recovered) / double(blocks));
    m.set_d("sim_eta_measured", double(detected) / double(qubits));
    m.set_u("sim_key_r_bits", key.r());
  }

  m.save(cfg.out + "/manifest.txt");
  return m;
}

// ---------------------------------------------------------------------------
// send-file subcommand
// ---------------------------------------------------------------------------

struct SendFileConfig {
  std::string in;
  std::string out;
  std::string key_file;
  std::string decode_key_file;  // empty: decode with key_file
  std::string manifest;         // empty: <out>.manifest.txt
  double eta = 0.33;
  double e_b = 0.0;
  double epsilon = 1e-9;
  double r_exp = 16.12;
  std::string fec = "on";
  std::uint64_t seed = 1;
};

LockingKey load_or_create_key(const std::string& path, double epsilon,
                              std::uint64_t n_qubits, std::uint64_t seed) {
  if (fs::exists(path)) {
    try {
      return LockingKey::load(path);
    } catch (const std::exception& e) {
      throw KeyFileError(std::string("key file unusable: ") + e.what());
    }
  }
  auto key_rng = RngStream::from_u64(seed, stream_tag::kKeyGen);
  LockingKey key = LockingKey::generate(key_rng, SecurityParams{epsilon, n_qubits});
  try {
    key.save(path);
  } catch (const std::exception& e) {
    throw KeyFileError(std::string("cannot write key file: ") + e.what());
  }
  return key;
}

RunManifest run_send_file(const SendFileConfig& cfg) {
  ChannelParams params{cfg.eta, cfg.e_b};
  params.validate();
  if (cfg.fec != "on" && cfg.fec != "off")
    throw std::invalid_argument("--fec must be on or off");
  if (cfg.in.empty() || cfg.out.empty() || cfg.key_file.empty())
    throw std::invalid_argument("--in, --out and --key-file are required");

  auto in_bytes = read_binary(cfg.in);
  const std::uint64_t msg_bits = std::uint64_t(in_bytes.size()) * 8;
  if (msg_bits == 0) throw IoError("input file is empty: " + cfg.in);
  BitString input = BitString::from_bytes(in_bytes, msg_bits);

  auto code = ConcatenatedCode::production();
  const std::uint64_t k_bits = code.message_bits();
  const std::uint64_t blocks = (msg_bits + k_bits - 1) / k_bits;
  const std::uint64_t pad_bits = blocks * k_bits - msg_bits;
  const std::uint64_t n_qubits = blocks * code.codeword_bits();

  LockingKey key = load_or_create_key(cfg.key_file, cfg.epsilon, n_qubits, cfg.seed);
  LockingKey decode_key = cfg.decode_key_file.empty()
                              ? key
                              : load_or_create_key(cfg.decode_key_file, cfg.epsilon,
                                                   n_qubits, cfg.seed + 1);

  const std::uint64_t fec_m = cfg.fec == "on" ? repetition_factor(cfg.eta) : 1;

  auto ch_root = RngStream::from_u64(cfg.seed, stream_tag::kChannel);
  BitString output(blocks * k_bits);
  std::vector<std::uint64_t> failed;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    BitString block_msg(k_bits);
    for (std::uint64_t i = 0; i < k_bits; ++i) {
      std::uint64_t src = b * k_bits + i;
      if (src < msg_bits) block_msg.set(i, input.get(src));
    }
    auto ct = fhs_encode(block_msg, key, code, b);
    auto bob_bases = derive_bases(decode_key.basis_seed, ct.symbols.size(), b);
    auto ch_rng = ch_root.substream(b);

    std::vector<Trit> trits;
    if (fec_m > 1) {
      // Fused expand/transmit/collapse: draws happen in the same order as the
      // staged pipeline, so outcomes are identical, without materialising the
      // m-times-expanded block.
      trits.resize(ct.symbols.size());
      for (std::size_t i = 0; i < ct.symbols.size(); ++i) {
        std::uint64_t ones = 0, zeros = 0;
        for (std::uint64_t r = 0; r < fec_m; ++r) {
          auto oc = transmit_and_measure(ct.symbols[i], bob_bases[i], params, ch_rng);
          if (!oc.detected) continue;
          if (oc.bit)
            ++ones;
          else
            ++zeros;
        }
        trits[i] = ones == zeros ? Trit::Erased
                                 : (ones > zeros ? Trit::One : Trit::Zero);
      }
    } else {
      auto outcomes = transmit_block(ct.symbols, bob_bases, params, ch_rng);
      trits.resize(outcomes.size());
      for (std::size_t i = 0; i < outcomes.size(); ++i) trits[i] = outcomes[i].to_trit();
    }

    auto dec = fhs_decode_trits(trits, decode_key, code, b);
    if (dec) {
      for (std::uint64_t i = 0; i < k_bits; ++i)
        output.set(b * k_bits + i, dec->get(i));
    } else {
      failed.push_back(b);  // zero-filled block
    }
  }

  std::uint64_t agree = 0;
  for (std::uint64_t i = 0; i < msg_bits; ++i)
    if (output.get(i) == input.get(i)) ++agree;

  std::vector<std::uint8_t> out_bytes(in_bytes.size(), 0);
  for (std::uint64_t i = 0; i < msg_bits; ++i)
    if (output.get(i)) out_bytes[i >> 3] |= std::uint8_t(0x80 >> (i & 7));
  write_binary(cfg.out, out_bytes);

  RunManifest m = new_manifest("send-file");
  m.set("in", cfg.in);
  m.set("out", cfg.out);
  m.set("key_file", cfg.key_file);
  m.set("decode_key_file",
        cfg.decode_key_file.empty() ? cfg.key_file : cfg.decode_key_file);
  m.set_u("seed", cfg.seed);
  m.set_d("eta", cfg.eta);
  m.set_d("e_b", cfg.e_b);
  m.set_d("epsilon", cfg.epsilon);
  m.set_d("r_exp", cfg.r_exp);
  m.set("fec", cfg.fec);
  m.set_u("fec_factor", fec_m);
  m.set_i("code_m", code.outer().field().m());
  m.set_i("code_n_rs", code.outer().n());
  m.set_i("code_k_rs", code.outer().k());
  m.set_u("msg_bits", msg_bits);
  m.set_u("blocks", blocks);
  m.set_u("pad_bits", pad_bits);
  m.set_u("n_qubits", n_qubits);
  m.set_u("key_r_bits", key.r());
  double base_bound = fhs_locked_bound(n_qubits, cfg.epsilon, cfg.r_exp);
  m.set_d("i_ae_bound_base", base_bound);
  m.set_d("i_ae_bound_effective", fec_inflated_bound(base_bound, fec_m));
  m.set_u("blocks_failed", failed.size());
  std::ostringstream fl;
  for (std::size_t i = 0; i < failed.size() && i < 32; ++i) {
    if (i) fl << ' ';
    fl << failed[i];
  }
  m.set("failed_blocks", failed.empty() ? "-" : fl.str());
  m.set_d("bit_agreement", double(agree) / double(msg_bits));
  m.set_hex("in_fnv", fnv1a64(in_bytes));
  m.set_hex("out_fnv", fnv1a64(out_bytes));

  std::string manifest_path =
      cfg.manifest.empty() ? cfg.out + ".manifest.txt" : cfg.manifest;
  m.save(manifest_path);
  return m;
}

// ---------------------------------------------------------------------------
// rates subcommand
// ---------------------------------------------------------------------------

struct RatesConfig {
  std::string p_grid = "0.01:0.49:0.02";
  double e_b = 0.0;
  double qkd_factor = 0.5;
  std::string exp_points;  // optional file of "p rate" lines
  std::string out = ".";
};

RunManifest run_rates(const RatesConfig& cfg) {
  double start = 0, stop = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(cfg.p_grid);
  if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
      step <= 0 || start < 0 || stop > 1 || stop < start)
    throw std::invalid_argument("bad --p-grid, want start:stop:step");
  std::vector<double> grid;
  for (double p = start; p <= stop + step / 2; p += step) grid.push_back(p);

  std::vector<std::pair<double, double>> pts;
  if (!cfg.exp_points.empty()) {
    std::ifstream f(cfg.exp_points);
    if (!f) throw IoError("cannot open " + cfg.exp_points);
    std::string line;
    while (std::getline(f, line)) {
      if (line.empty() || line[0] == '#') continue;
      for (auto& ch : line)
        if (ch == ',') ch = ' ';
      std::istringstream ls(line);
      double p, r;
      if (ls >> p >> r) pts.emplace_back(p, r);
    }
    std::sort(pts.begin(), pts.end());
  }

  ensure_dir(cfg.out);
  auto rows = capacity_curve(grid, cfg.e_b, cfg.qkd_factor, pts);
  std::ostringstream csv;
  write_capacity_csv(csv, rows);
  std::uint64_t digest = write_text_file(cfg.out + "/capacity.csv", csv.str());

  RunManifest m = new_manifest("rates");
  m.set("p_grid", cfg.p_grid);
  m.set_d("e_b", cfg.e_b);
  m.set_d("qkd_factor", cfg.qkd_factor);
  m.set("exp_points", cfg.exp_points.empty() ? "-" : cfg.exp_points);
  m.set_u("points", rows.size());
  m.set_hex("csv_fnv", digest);
  m.save(cfg.out + "/manifest.txt");
  return m;
}

// ---------------------------------------------------------------------------
// replay subcommand
// ---------------------------------------------------------------------------

RunManifest run_replay(const std::string& manifest_path, const std::string& out) {
  RunManifest src = RunManifest::load(manifest_path);
  const std::string scheme = src.get("scheme");
  RunManifest fresh;
  if (scheme == "dhlst") {
    DhlstConfig c;
    c.eta = src.get_d("eta");
    c.e_b = src.get_d("e_b");
    c.n_bits = src.get_u("n_bits");
    c.key_bit = int(src.get_u("key_bit"));
    c.seed = src.get_u("seed");
    c.eve_blocks = int(src.get_u("eve_blocks"));
    c.out = out;
    fresh = run_dhlst(c);
  } else if (scheme == "fhs") {
    FhsConfig c;
    c.eta = src.get_d("eta");
    c.e_b = src.get_d("e_b");
    c.epsilon = src.get_d("epsilon");
    c.r_exp = src.get_d("r_exp");
    c.n_bits = src.get_u("n_bits");
    c.sweep = src.get("sweep") == "-" ? "" : src.get("sweep");
    c.simulate = src.get("simulate") == "on";
    c.max_blocks = src.get_u("max_blocks");
    c.seed = src.get_u("seed");
    c.out = out;
    fresh = run_fhs(c);
  } else if (scheme == "send-file") {
    SendFileConfig c;
    c.in = src.get("in");
    c.out = out + "/replay_output.bin";
    ensure_dir(out);
    c.key_file = src.get("key_file");
    std::string dk = src.get("decode_key_file");
    if (dk != c.key_file) c.decode_key_file = dk;
    c.manifest = out + "/manifest.txt";
    c.eta = src.get_d("eta");
    c.e_b = src.get_d("e_b");
    c.epsilon = src.get_d("epsilon");
    c.r_exp = src.get_d("r_exp");
    c.fec = src.get("fec");
    c.seed = src.get_u("seed");
    fresh = run_send_file(c);
  } else if (scheme == "rates") {
    RatesConfig c;
    c.p_grid = src.get("p_grid");
    c.e_b = src.get_d("e_b");
    c.qkd_factor = src.get_d("qkd_factor");
    c.exp_points = src.get("exp_points") == "-" ? "" : src.get("exp_points");
    c.out = out;
    fresh = run_rates(c);
  } else {
    throw std::invalid_argument("replay: unknown scheme " + scheme);
  }
  fresh.set("replayed_from", manifest_path);
  fresh.save(out + "/manifest.txt");
  return fresh;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum data locking simulator"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "config file, one key=value per line (e.g. dhlst.eta=0.5); "
                 "flags override config values");

  DhlstConfig dc;
  auto* dhlst = app.add_subcommand("dhlst", "one-bit-key locking run");
  dhlst->add_option("--eta", dc.eta, "single photon transmittance");
  dhlst->add_option("--eb", dc.e_b, "bit error rate");
  dhlst->add_option("--n-bits", dc.n_bits, "message bits to send");
  dhlst->add_option("--key-bit", dc.key_bit, "locking key bit (0=Z, 1=Y)");
  dhlst->add_option("--seed", dc.seed, "run seed");
  dhlst->add_option("--eve-blocks", dc.eve_blocks, "eavesdropper traffic blocks");
  dhlst->add_option("--out", dc.out, "output directory");

  FhsConfig fc;
  auto* fhs = app.add_subcommand("fhs", "loss-tolerant locking efficiency sweep");
  fhs->add_option("--eta", fc.eta, "single photon transmittance");
  fhs->add_option("--eb", fc.e_b, "bit error rate");
  fhs->add_option("--epsilon", fc.epsilon, "leakage bound");
  fhs->add_option("--rexp", fc.r_exp, "effective code expansion");
  fhs->add_option("--n-bits", fc.n_bits, "qubits for a single point");
  fhs->add_option("--sweep", fc.sweep, "qubit sweep start:stop:step");
  fhs->add_flag("--simulate", fc.simulate, "run the encode/channel/decode pipeline");
  fhs->add_option("--max-blocks", fc.max_blocks, "simulation block budget");
  fhs->add_option("--seed", fc.seed, "run seed");
  fhs->add_option("--out", fc.out, "output directory");

  SendFileConfig sc;
  auto* sf = app.add_subcommand("send-file", "locked file transfer with repetition FEC");
  sf->add_option("--in", sc.in, "input file");
  sf->add_option("--out", sc.out, "output file");
  sf->add_option("--key-file", sc.key_file, "key file (created when absent)");
  sf->add_option("--decode-key-file", sc.decode_key_file,
                 "decode with this key instead (wrong-key demo)");
  sf->add_option("--manifest", sc.manifest, "manifest path");
  sf->add_option("--eta", sc.eta, "single photon transmittance");
  sf->add_option("--eb", sc.e_b, "bit error rate");
  sf->add_option("--epsilon", sc.epsilon, "leakage bound");
  sf->add_option("--rexp", sc.r_exp, "effective code expansion");
  sf->add_option("--fec", sc.fec, "repetition FEC on|off");
  sf->add_option("--seed", sc.seed, "run seed");

  RatesConfig rc;
  auto* rates = app.add_subcommand("rates", "erasure-channel capacity comparison");
  rates->add_option("--p-grid", rc.p_grid, "erasure grid start:stop:step");
  rates->add_option("--eb", rc.e_b, "bit error rate for the rate models");
  rates->add_option("--qkd-factor", rc.qkd_factor, "QKD+OTP rate factor");
  rates->add_option("--exp-points", rc.exp_points, "measured (p, rate) file");
  rates->add_option("--out", rc.out, "output directory");

  std::string replay_manifest, replay_out = ".";
  auto* replay = app.add_subcommand("replay", "re-run a manifest bit-exactly");
  replay->add_option("--manifest", replay_manifest, "manifest to replay")->required();
  replay->add_option("--out", replay_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (*dhlst) run_dhlst(dc);
    else if (*fhs) run_fhs(fc);
    else if (*sf) run_send_file(sc);
    else if (*rates) run_rates(rc);
    else if (*replay) run_replay(replay_manifest, replay_out);
    return 0;
  } catch (const KeyFileError& e) {
    std::cerr << "key file error: " << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
