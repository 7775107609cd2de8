#include "qwline/rw.hpp"

#include <cmath>

#include "qwline/transfer.hpp"

namespace qw {

HoppingSequence::HoppingSequence(Topology topology, std::vector<double> p)
    : topology_(topology), p_(std::move(p)) {
  if (static_cast<int>(p_.size()) != topology_.size())
    throw std::invalid_argument("hopping probability count does not match " +
                                topology_.describe());
  for (double value : p_)
    if (!(value >= 0.0 && value <= 1.0))
      throw std::invalid_argument("hopping probabilities must lie in [0, 1]");
}

HoppingSequence HoppingSequence::periodic(Topology topology, const std::vector<double>& pattern) {
  if (pattern.empty()) throw std::invalid_argument("pattern must be nonempty");
  int k = static_cast<int>(pattern.size());
  if (topology.is_cycle() && topology.size() % k != 0)
    throw std::invalid_argument("pattern length must divide the cycle size");
  std::vector<double> p(topology.size());
  for (int i = 0; i < topology.size(); ++i) {
    int site = topology.site_of(i);
    p[i] = pattern[((site % k) + k) % k];
  }
  return HoppingSequence(topology, std::move(p));
}

double HoppingSequence::left_probability(int site) const {
  return p_[topology_.index_of(site)];
}

Measure rw_step(const Measure& mu, const HoppingSequence& hop) {
  if (mu.topology() != hop.topology())
    throw std::invalid_argument("measure and hopping topologies differ");
  const Topology& topo = mu.topology();
  std::vector<double> out(topo.size(), 0.0);

  if (topo.is_cycle()) {
    int m = topo.size();
    for (int x = 0; x < m; ++x) {
      int xp = (x + 1) % m;
      int xm = (x - 1 + m) % m;
      out[x] = hop.left_probability(xp) * mu.values()[xp] +
               hop.right_probability(xm) * mu.values()[xm];
    }
  } else {
    int l = topo.half_width();
    for (int x = -l; x <= l; ++x) {
      double acc = 0.0;
      if (x + 1 <= l) acc += hop.left_probability(x + 1) * mu.at(x + 1);
      if (x - 1 >= -l) acc += hop.right_probability(x - 1) * mu.at(x - 1);
      out[topo.index_of(x)] = acc;
    }
  }
  return Measure(topo, std::move(out));
}

StationarityWitness uniform_stationarity_witness(const HoppingSequence& hop,
                                                 double tolerance) {
  const Topology& topo = hop.topology();
  if (topo.is_cycle()) {
    int m = topo.size();
    for (int x = 0; x < m; ++x) {
      double left = hop.left_probability(x - 1);
      double right = hop.left_probability(x + 1);
      if (std::abs(left - right) > tolerance) return {false, x};
    }
    return {true, std::nullopt};
  }
  int l = topo.half_width();
  for (int x = -l + 1; x <= l - 1; ++x) {
    if (std::abs(hop.left_probability(x - 1) - hop.left_probability(x + 1)) > tolerance)
      return {false, x};
  }
  return {true, std::nullopt};
}

namespace {

// Thresholds the witness verification is pinned to.
constexpr int kWitnessWindow = 50;
constexpr double kWitnessResidualTol = 1e-10;
constexpr double kWitnessDefectTol = 1e-10;
constexpr int kAperiodicScanMax = 1000;
constexpr double kPeriodTol = 1e-9;

DichotomyRow qw_witness_row(std::optional<int> period, double phi, double theta,
                            double omega0) {
  CPhiParams params(theta, phi, omega0);
  CoinSequence seq = CoinSequence::cphi(Topology::line(kWitnessWindow + 1), params);

  std::optional<int> detected;
  if (period) {
    detected = detect_period(seq, *period);
  } else {
    detected = detect_period(seq, kAperiodicScanMax, 4 * kAperiodicScanMax, kPeriodTol);
  }

  SpinorField psi = build_eigenstate(seq, params.lambda(), Vec2(1.0, 0.0), kWitnessWindow);
  double residual = eigen_residual(psi, seq, params.lambda());
  double defect = uniformity_defect(gamma_measure(psi));

  bool period_ok = period ? (detected == period) : !detected.has_value();
  bool verified = period_ok && residual <= kWitnessResidualTol && defect <= kWitnessDefectTol;
  return DichotomyRow{period, period.has_value() && *period <= 2, verified,
                      phi, detected, residual, defect};
}

}  // namespace

std::vector<DichotomyRow> dichotomy_table(int max_period, double theta, double omega0) {
  if (max_period < 2) throw std::invalid_argument("max_period must be >= 2");
  std::vector<DichotomyRow> rows;
  for (int n = 1; n <= max_period; ++n)
    rows.push_back(qw_witness_row(n, kPi / n, theta, omega0));
  // Aperiodic row: an irrational multiple of pi never closes the phase orbit.
  rows.push_back(qw_witness_row(std::nullopt, kPi * (std::sqrt(2.0) - 1.0), theta, omega0));
  return rows;
}

}  // namespace qw
