#include "qwline/types.hpp"

#include <cmath>

namespace qw {

double mod_2pi(double angle) {
  double r = std::fmod(angle, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

double angular_distance(double a, double b) {
  double d = mod_2pi(a - b);
  return std::min(d, kTwoPi - d);
}

Topology Topology::line(int half_width) {
  if (half_width < 0) throw std::invalid_argument("line window half-width must be >= 0");
  return Topology(Kind::line, 2 * half_width + 1);
}

Topology Topology::cycle(int sites) {
  if (sites < 2) throw std::invalid_argument("cycle needs at least 2 sites");
  return Topology(Kind::cycle, sites);
}

int Topology::half_width() const {
  if (!is_line()) throw std::logic_error("half_width is defined for line windows only");
  return (size_ - 1) / 2;
}

bool Topology::contains(int site) const {
  if (is_cycle()) return true;  // labels wrap
  int l = half_width();
  return site >= -l && site <= l;
}

int Topology::index_of(int site) const {
  if (is_cycle()) {
    int m = size_;
    return ((site % m) + m) % m;
  }
  int l = half_width();
  if (site < -l || site > l)
    throw std::out_of_range("site " + std::to_string(site) + " outside window [-" +
                            std::to_string(l) + ", " + std::to_string(l) + "]");
  return site + l;
}

int Topology::site_of(int index) const {
  if (index < 0 || index >= size_) throw std::out_of_range("bad storage index");
  return is_cycle() ? index : index - half_width();
}

std::vector<int> Topology::all_sites() const {
  std::vector<int> sites(size_);
  for (int i = 0; i < size_; ++i) sites[i] = site_of(i);
  return sites;
}

std::string Topology::describe() const {
  if (is_line()) return "line[-" + std::to_string(half_width()) + ", " + std::to_string(half_width()) + "]";
  return "cycle(" + std::to_string(size_) + ")";
}

Complex unit_lambda(Complex lambda) {
  double mag = std::abs(lambda);
  if (std::abs(mag - 1.0) > tol::lambda_unit)
    throw std::invalid_argument("lambda must lie on the unit circle (|lambda| = " +
                                std::to_string(mag) + ")");
  return lambda / mag;
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

bool is_unitary(const Mat2& u, double tolerance) {
  return max_abs_diff(u.adjoint() * u, Mat2::Identity()) <= tolerance;
}

}  // namespace qw
