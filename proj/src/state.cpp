#include "qwline/state.hpp"

#include <algorithm>
#include <cmath>

namespace qw {

SpinorField::SpinorField(Topology topology, std::vector<Vec2> amplitudes, int boundary_depth)
    : topology_(topology), amplitudes_(std::move(amplitudes)), boundary_depth_(boundary_depth) {
  if (static_cast<int>(amplitudes_.size()) != topology_.size())
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match " + topology_.describe());
  if (boundary_depth_ < 0) throw std::invalid_argument("boundary depth must be >= 0");
}

SpinorField SpinorField::zero(Topology topology) {
  return SpinorField(topology, std::vector<Vec2>(topology.size(), Vec2::Zero()));
}

SpinorField SpinorField::point(Topology topology, int site, const Vec2& amplitude) {
  std::vector<Vec2> amps(topology.size(), Vec2::Zero());
  amps[topology.index_of(site)] = amplitude;
  return SpinorField(topology, std::move(amps));
}

const Vec2& SpinorField::at(int site) const {
  return amplitudes_[topology_.index_of(site)];
}

bool SpinorField::is_zero() const {
  return std::all_of(amplitudes_.begin(), amplitudes_.end(),
                     [](const Vec2& v) { return v.isZero(0.0); });
}

Measure::Measure(Topology topology, std::vector<double> values)
    : topology_(topology), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != topology_.size())
    throw std::invalid_argument("value count does not match " + topology_.describe());
  for (double v : values_)
    if (v < 0.0 || std::isnan(v)) throw std::invalid_argument("measure values must be >= 0");
}

double Measure::at(int site) const { return values_[topology_.index_of(site)]; }

double Measure::total() const {
  double sum = 0.0;
  for (double v : values_) sum += v;
  return sum;
}

Measure gamma_measure(const SpinorField& psi) {
  std::vector<double> values(psi.amplitudes().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Vec2& v = psi.amplitudes()[i];
    values[i] = std::norm(v(0)) + std::norm(v(1));
  }
  return Measure(psi.topology(), std::move(values));
}

double uniformity_defect(const Measure& mu, const std::vector<int>& region) {
  if (region.empty()) throw std::invalid_argument("uniformity region must be nonempty");
  int reference_site = *std::min_element(region.begin(), region.end());
  double reference = mu.at(reference_site);
  double defect = 0.0;
  for (int site : region) defect = std::max(defect, std::abs(mu.at(site) - reference));
  return defect;
}

double uniformity_defect(const Measure& mu) {
  return uniformity_defect(mu, mu.topology().all_sites());
}

SpinorField scale(const SpinorField& psi, Complex z) {
  std::vector<Vec2> amps(psi.amplitudes().size());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = z * psi.amplitudes()[i];
  return SpinorField(psi.topology(), std::move(amps), psi.boundary_depth());
}

std::vector<int> interior_sites(const SpinorField& psi) {
  if (psi.topology().is_cycle()) return psi.topology().all_sites();
  int reach = psi.topology().half_width() - psi.boundary_depth();
  std::vector<int> sites;
  for (int x = -reach; x <= reach; ++x) sites.push_back(x);
  return sites;
}

}  // namespace qw
