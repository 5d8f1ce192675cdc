#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <utility>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdl/fhs.hpp"

namespace qdl {

/// Binary Shannon entropy in bits, with the limit value 0 at p in {0,1}.
/// The (1-p) term goes through log1p so tiny p (1e-12 and below) keeps full
/// relative accuracy.
inline double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("binary_entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  constexpr double inv_ln2 = 1.4426950408889634074;
  return -p * std::log2(p) - (1.0 - p) * std::log1p(-p) * inv_ln2;
}

/// Unlocked mutual information per sent bit: eta * (1 - H(e_b)).
inline double mutual_info_rate(double eta, double e_b) {
  ChannelParams{eta, e_b}.validate();
  return eta * (1.0 - binary_entropy(e_b));
}

/// Bob's unlocked information for n sent qubits under effective code
/// expansion R_exp: eta * n / R_exp * (1 - H(e_b)).
inline double fhs_unlocked_info(std::uint64_t n, double eta, double e_b,
                                double r_exp) {
  if (n < 1) throw std::invalid_argument("fhs_unlocked_info: n must be >= 1");
  if (!(r_exp > 0.0))
    throw std::invalid_argument("fhs_unlocked_info: R_exp must be positive");
  return eta * double(n) / r_exp * (1.0 - binary_entropy(e_b));
}

/// Keyless leakage bound: 6 eps n / R_exp + H(eps).
inline double fhs_locked_bound(std::uint64_t n, double epsilon, double r_exp) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0))
    throw std::invalid_argument("fhs_locked_bound: epsilon outside [0,1]");
  if (!(r_exp > 0.0))
    throw std::invalid_argument("fhs_locked_bound: R_exp must be positive");
  return 6.0 * epsilon * double(n) / r_exp + binary_entropy(epsilon);
}

/// Locking efficiency: (I_acc(A:B) - I_acc(A:E) - r) / r. Parity with the
/// one-time pad is kappa = 1.
inline double locking_efficiency(double i_ab, double i_ae, double r) {
  if (!(r > 0.0))
    throw std::invalid_argument("locking_efficiency: key length must be positive");
  return (i_ab - i_ae - r) / r;
}

/// Accounting record for one locked session.
struct InfoReport {
  std::uint64_t n = 0;      // qubits sent
  std::uint64_t r = 0;      // key bits charged
  double i_ab = 0.0;        // unlocked mutual information, bits
  double i_ae_bound = 0.0;  // keyless leakage bound, bits
  double kappa = 0.0;

  bool kappa_consistent(double tol = 1e-9) const {
    if (r == 0) return false;
    double want = (i_ab - i_ae_bound - double(r)) / double(r);
    return std::abs(kappa - want) <= tol * std::max(1.0, std::abs(want));
  }
};

inline InfoReport make_info_report(std::uint64_t n, double eta, double e_b,
                                   double epsilon, double r_exp) {
  InfoReport rep;
  rep.n = n;
  rep.r = fhs_key_length(n, epsilon);
  rep.i_ab = fhs_unlocked_info(n, eta, e_b, r_exp);
  rep.i_ae_bound = fhs_locked_bound(n, epsilon, r_exp);
  rep.kappa = locking_efficiency(rep.i_ab, rep.i_ae_bound, double(rep.r));
  return rep;
}

/// One row of the erasure-channel rate comparison.
struct CapacityPoint {
  double p;             // erasure probability
  double classical;     // 1 - p
  double priv;          // max(0, 1 - 2p)
  double dl_rate;       // locked-communication rate
  double dhlst_rate;    // (1-p)(1-H(e_b)), one key bit amortised to zero
  double qkd_otp_rate;  // (1-p) * qkd_factor
};

/// Rate curves over an erasure-probability grid. dl_rate is linearly
/// interpolated from measured (p, rate) points where they bracket p and
/// falls back to the same (1-p)(1-H(e_b)) model as the DHLST line (the key
/// charge vanishes per use in the session limit).
inline std::vector<CapacityPoint> capacity_curve(
    std::span<const double> p_grid, double e_b = 0.0, double qkd_factor = 0.5,
    std::span<const std::pair<double, double>> exp_points = {}) {
  std::vector<CapacityPoint> out;
  out.reserve(p_grid.size());
  double rate_model = 1.0 - binary_entropy(e_b);
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("capacity_curve: p outside [0,1]");
    CapacityPoint cp;
    cp.p = p;
    cp.classical = 1.0 - p;
    cp.priv = std::max(0.0, 1.0 - 2.0 * p);
    cp.dhlst_rate = (1.0 - p) * rate_model;
    cp.qkd_otp_rate = (1.0 - p) * qkd_factor;
    cp.dl_rate = cp.dhlst_rate;
    for (std::size_t i = 0; i + 1 < exp_points.size(); ++i) {
      double p0 = exp_points[i].first, p1 = exp_points[i + 1].first;
      if (p >= p0 && p <= p1 && p1 > p0) {
        double w = (p - p0) / (p1 - p0);
        cp.dl_rate = exp_points[i].second +
                     w * (exp_points[i + 1].second - exp_points[i].second);
        break;
      }
    }
    out.push_back(cp);
  }
  return out;
}

/// Plug-in mutual information between the sent bit and the received ternary
/// symbol, from empirical joint counts. No bias correction.
class JointCounts {
 public:
  void add(int sent_bit, Trit received) {
    counts_[std::size_t(sent_bit)][std::size_t(received)] += 1;
    ++total_;
  }

  std::uint64_t total() const { return total_; }

  double mutual_information() const {
    if (total_ == 0) return 0.0;
    double n = double(total_);
    std::array<double, 2> pa{};
    std::array<double, 3> py{};
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 3; ++y) {
        pa[std::size_t(a)] += double(counts_[std::size_t(a)][std::size_t(y)]);
        py[std::size_t(y)] += double(counts_[std::size_t(a)][std::size_t(y)]);
      }
    double info = 0.0;
    for (int a = 0; a < 2; ++a)
      for (int y = 0; y < 3; ++y) {
        double c = double(counts_[std::size_t(a)][std::size_t(y)]);
        if (c == 0.0) continue;
        info += (c / n) * std::log2(c * n / (pa[std::size_t(a)] * py[std::size_t(y)]));
      }
    return info;
  }

 private:
  std::uint64_t counts_[2][3] = {{0, 0, 0}, {0, 0, 0}};
  std::uint64_t total_ = 0;
};

/// Floating-point formatting used by every CSV: 12 significant digits.
inline std::string fmt12(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

struct KappaRow {
  double eta;
  double e_b;
  double epsilon;
  std::uint64_t n_bits;
  std::uint64_t r_bits;
  double i_ab_bits;
  double i_ae_bound_bits;
  double kappa;
};

inline void write_kappa_csv(std::ostream& os, std::span<const KappaRow> rows) {
  os << "eta,e_b,epsilon,n_bits,r_bits,i_ab_bits,i_ae_bound_bits,kappa\n";
  for (const auto& r : rows) {
    os << fmt12(r.eta) << ',' << fmt12(r.e_b) << ',' << fmt12(r.epsilon) << ','
       << r.n_bits << ',' << r.r_bits << ',' << fmt12(r.i_ab_bits) << ','
       << fmt12(r.i_ae_bound_bits) << ',' << fmt12(r.kappa) << '\n';
  }
}

inline void write_capacity_csv(std::ostream& os,
                               std::span<const CapacityPoint> rows) {
  os << "p,classical,private,dl_rate,dhlst_rate,qkd_otp_rate\n";
  for (const auto& r : rows) {
    os << fmt12(r.p) << ',' << fmt12(r.classical) << ',' << fmt12(r.priv) << ','
       << fmt12(r.dl_rate) << ',' << fmt12(r.dhlst_rate) << ','
       << fmt12(r.qkd_otp_rate) << '\n';
  }
}

}  // namespace qdl
