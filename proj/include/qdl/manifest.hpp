#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdl {

/// FNV-1a 64-bit content digest used for manifest bookkeeping.
inline std::uint64_t fnv1a64(std::span<const std::uint8_t> bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint8_t b : bytes) h = (h ^ b) * 0x100000001b3ull;
  return h;
}

inline std::uint64_t fnv1a64_str(const std::string& s) {
  return fnv1a64(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(s.data()), s.size()));
}

/// Ordered key-value run record. A manifest echoes every effective parameter
/// plus the run seed, so a run can be reproduced bit-exactly from the file
/// alone; field order is insertion order and stays fixed per subcommand.
class RunManifest {
 public:
  void set(const std::string& key, const std::string& value) {
    for (auto& kv : fields_)
      if (kv.first == key) {
        kv.second = value;
        return;
      }
    fields_.emplace_back(key, value);
  }

  void set_i(const std::string& key, std::int64_t v) { set(key, std::to_string(v)); }
  void set_u(const std::string& key, std::uint64_t v) { set(key, std::to_string(v)); }

  // %.17g round-trips doubles exactly; replays must reproduce these bytes.
  void set_d(const std::string& key, double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    set(key, buf);
  }

  void set_hex(const std::string& key, std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx", (unsigned long long)v);
    set(key, buf);
  }

  bool has(const std::string& key) const {
    for (const auto& kv : fields_)
      if (kv.first == key) return true;
    return false;
  }

  const std::string& get(const std::string& key) const {
    for (const auto& kv : fields_)
      if (kv.first == key) return kv.second;
    throw std::out_of_range("RunManifest: missing field " + key);
  }

  double get_d(const std::string& key) const { return std::stod(get(key)); }
  std::uint64_t get_u(const std::string& key) const { return std::stoull(get(key)); }

  const std::vector<std::pair<std::string, std::string>>& fields() const {
    return fields_;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (const auto& kv : fields_) os << kv.first << " = " << kv.second << "\n";
    return os.str();
  }

  void save(const std::string& path) const {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("RunManifest::save: cannot open " + path);
    f << to_string();
  }

  static RunManifest parse(std::istream& is) {
    RunManifest m;
    std::string line;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      auto eq = line.find(" = ");
      if (eq == std::string::npos)
        throw std::runtime_error("RunManifest: malformed line: " + line);
      m.fields_.emplace_back(line.substr(0, eq), line.substr(eq + 3));
    }
    return m;
  }

  static RunManifest load(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("RunManifest::load: cannot open " + path);
    return parse(f);
  }

  /// Timestamps change between runs; everything else must replay bit-exactly.
  static bool equal_except_timestamps(const RunManifest& a, const RunManifest& b) {
    auto keep = [](const std::pair<std::string, std::string>& kv) {
      return kv.first != "created_at" && kv.first != "replayed_from";
    };
    std::vector<std::pair<std::string, std::string>> fa, fb;
    for (const auto& kv : a.fields_)
      if (keep(kv)) fa.push_back(kv);
    for (const auto& kv : b.fields_)
      if (keep(kv)) fb.push_back(kv);
    return fa == fb;
  }

 private:
  std::vector<std::pair<std::string, std::string>> fields_;
};

inline std::string iso8601_now() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

}  // namespace qdl
