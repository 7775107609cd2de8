#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qw {

using Complex = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Default numeric tolerances shared across the library.
namespace tol {
inline constexpr double unitarity = 1e-12;
inline constexpr double entry_zero = 1e-12;   // singular coin entry guard
inline constexpr double theta_excluded = 1e-12;
inline constexpr double lambda_unit = 1e-9;   // renormalization band around |lambda| = 1
inline constexpr double period = 1e-9;        // entrywise coin-match tolerance
inline constexpr double condition_warn = 1e-6;
}  // namespace tol

/// Reduce an angle to [0, 2*pi).
double mod_2pi(double angle);

/// Distance between two angles on the circle, in [0, pi].
double angular_distance(double a, double b);

/// Sites of either a symmetric line window [-L, L] or a cycle of m >= 2 sites
/// labelled 0..m-1. Cycle site labels are interpreted mod m throughout.
class Topology {
 public:
  static Topology line(int half_width);
  static Topology cycle(int sites);

  bool is_line() const { return kind_ == Kind::line; }
  bool is_cycle() const { return kind_ == Kind::cycle; }

  /// L for line windows; throws for cycles.
  int half_width() const;
  /// Number of stored sites: 2L+1 or m.
  int size() const { return size_; }

  bool contains(int site) const;
  /// Storage index of a site label. Lines reject out-of-window sites,
  /// cycles wrap mod m.
  int index_of(int site) const;
  /// Site label of a storage index.
  int site_of(int index) const;
  std::vector<int> all_sites() const;

  bool operator==(const Topology& other) const = default;

  std::string describe() const;

 private:
  enum class Kind { line, cycle };
  Topology(Kind kind, int size) : kind_(kind), size_(size) {}
  Kind kind_;
  int size_;
};

/// Renormalize lambda to the unit circle when within tol::lambda_unit of it;
/// reject anything farther out.
Complex unit_lambda(Complex lambda);

/// Entrywise max |A - B|.
double max_abs_diff(const Mat2& a, const Mat2& b);

bool is_unitary(const Mat2& u, double tolerance = tol::unitarity);

}  // namespace qw
