#pragma once

#include <optional>
#include <vector>

#include "qwline/state.hpp"

namespace qw {

/// Classical nearest-neighbor walk data: p_x is the probability of moving
/// left from site x, q_x = 1 - p_x the probability of moving right.
class HoppingSequence {
 public:
  HoppingSequence(Topology topology, std::vector<double> p);

  /// Tile a pattern over the topology. On cycles the pattern length must
  /// divide m so the tiled sequence really has the pattern's period.
  static HoppingSequence periodic(Topology topology, const std::vector<double>& pattern);

  double left_probability(int site) const;
  double right_probability(int site) const { return 1.0 - left_probability(site); }
  const std::vector<double>& p() const { return p_; }
  const Topology& topology() const { return topology_; }

 private:
  Topology topology_;
  std::vector<double> p_;
};

/// mu'(x) = p_{x+1} mu(x+1) + q_{x-1} mu(x-1). Cycles wrap; line windows
/// treat out-of-window terms as zero.
Measure rw_step(const Measure& mu, const HoppingSequence& hop);

struct StationarityWitness {
  bool is_uniform_stationary;
  std::optional<int> violating_site;
};

/// The uniform measure is a fixed point of rw_step iff p_{x-1} = p_{x+1} at
/// every applicable site; reports the smallest violating site otherwise.
/// That equality forces period 1 or 2 (full constancy on odd cycles).
StationarityWitness uniform_stationarity_witness(const HoppingSequence& hop,
                                                 double tolerance = 1e-12);

/// One row of the periodicity comparison: can a coin/hopping sequence of
/// this exact period carry the uniform measure as a stationary measure?
/// period == nullopt is the aperiodic row. The QW column is backed by a
/// constructed phase-gradient witness, verified at build time.
struct DichotomyRow {
  std::optional<int> period;
  bool rw_admits_uniform;
  bool qw_admits_uniform;
  double qw_phi;
  std::optional<int> qw_detected_period;
  double qw_eigen_residual;
  double qw_uniformity_defect;
};

/// Rows for periods 1..max_period (max_period >= 2) plus the aperiodic row.
/// RW admits the uniform stationary measure exactly for periods 1 and 2; the
/// QW witness for period n is the phase-gradient family with phi = pi/n
/// (phi = pi*(sqrt 2 - 1) for the aperiodic row), checked by period
/// detection, eigen residual <= 1e-10 and uniformity defect <= 1e-10 on a
/// window of 50 sites each side.
std::vector<DichotomyRow> dichotomy_table(int max_period,
                                          double theta = kPi / 4,
                                          double omega0 = 0.0);

}  // namespace qw
