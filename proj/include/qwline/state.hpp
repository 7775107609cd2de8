#pragma once

#include <vector>

#include "qwline/types.hpp"

namespace qw {

/// Two-component complex amplitudes over a line window or cycle. Immutable
/// after construction; evolution and scaling return new fields.
///
/// boundary_depth counts how many truncated line steps have touched the
/// field: after n steps only sites with |x| <= L - n are exact, the rest are
/// contaminated by the zero padding outside the window.
class SpinorField {
 public:
  SpinorField(Topology topology, std::vector<Vec2> amplitudes, int boundary_depth = 0);

  static SpinorField zero(Topology topology);
  /// Field that is `amplitude` at `site` and zero elsewhere.
  static SpinorField point(Topology topology, int site, const Vec2& amplitude);

  const Vec2& at(int site) const;
  const std::vector<Vec2>& amplitudes() const { return amplitudes_; }
  const Topology& topology() const { return topology_; }
  int boundary_depth() const { return boundary_depth_; }

  bool is_zero() const;

 private:
  Topology topology_;
  std::vector<Vec2> amplitudes_;
  int boundary_depth_;
};

/// Per-site nonnegative weights over a line window or cycle.
class Measure {
 public:
  Measure(Topology topology, std::vector<double> values);

  double at(int site) const;
  const std::vector<double>& values() const { return values_; }
  const Topology& topology() const { return topology_; }
  double total() const;

 private:
  Topology topology_;
  std::vector<double> values_;
};

/// mu(x) = |psi_L(x)|^2 + |psi_R(x)|^2.
Measure gamma_measure(const SpinorField& psi);

/// Max over the region of |mu(x) - mu(x0)| where x0 is the smallest site in
/// the region; zero iff mu is constant there. The region must be nonempty.
double uniformity_defect(const Measure& mu, const std::vector<int>& region);

/// uniformity_defect over the whole topology.
double uniformity_defect(const Measure& mu);

/// Multiply every amplitude by z; the measure scales by |z|^2.
SpinorField scale(const SpinorField& psi, Complex z);

/// Sites unaffected by window truncation: |x| <= L - boundary_depth on
/// lines (possibly empty), every site on cycles.
std::vector<int> interior_sites(const SpinorField& psi);

}  // namespace qw
