#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "qwline/types.hpp"

namespace qw {

/// A 2x2 unitary acting on the chirality pair at one site, stored row-major.
struct Coin {
  Complex a, b, c, d;

  Mat2 matrix() const;
  static Coin from_matrix(const Mat2& m);
};

bool is_unitary(const Coin& coin, double tolerance = tol::unitarity);

/// One-parameter coin [[cos t, e^{iw} sin t], [e^{-iw} sin t, -cos t]].
/// theta must lie in (0, 2*pi); omega is reduced mod 2*pi. The result is
/// unitary and Hermitian. theta = pi/2 and 3*pi/2 are allowed here; only
/// transfer-matrix construction rejects them.
Coin build_coin(double theta, double omega);

/// Split U into the left-routing part P = [[a, b], [0, 0]] and the
/// right-routing part Q = [[0, 0], [c, d]], with P + Q = U exactly.
std::pair<Mat2, Mat2> split_coin(const Coin& coin);

/// Parameters of the phase-gradient coin family: site x carries the angle
/// pair (theta, omega_x) with omega_x = omega0 + 2*phi*x reduced mod 2*pi,
/// so consecutive phases differ by exactly 2*phi on the circle.
struct CPhiParams {
  double theta;
  double phi;
  double omega0;

  /// Validates theta in (0, 2*pi) excluding pi/2 and 3*pi/2 (within 1e-12);
  /// phi and omega0 are reduced to [0, 2*pi).
  CPhiParams(double theta, double phi, double omega0);

  /// omega_x, evaluated in closed form to avoid accumulation error.
  double omega_at(int site) const;
  /// alpha_x = phi + omega_{x-1} mod 2*pi.
  double alpha_at(int site) const;
  /// e^{i*phi}, the eigenvalue the family's transfer construction uses.
  Complex lambda() const;
};

Coin cphi_coin_at(const CPhiParams& params, int site);

/// An indexed family of coins over a line window or a cycle. Sources are
/// either an explicit list (validated unitary) or a CPhiParams generator
/// evaluated lazily; generators on a line can be sampled at any site.
class CoinSequence {
 public:
  static CoinSequence cphi(Topology topology, CPhiParams params);
  static CoinSequence from_coins(Topology topology, std::vector<Coin> coins);

  Coin at(int site) const;
  const Topology& topology() const { return topology_; }
  /// Non-null when this sequence is generator-backed.
  const CPhiParams* cphi_params() const;

 private:
  CoinSequence(Topology topology, std::variant<CPhiParams, std::vector<Coin>> source);
  Topology topology_;
  std::variant<CPhiParams, std::vector<Coin>> source_;
};

/// Smallest N <= max_period with max entrywise |U_{x+N} - U_x| <= tolerance
/// for every x in the scan window [-scan_width, scan_width]; empty when no
/// candidate matches. Line sequences only; scan_width must be at least
/// 2*max_period. Explicit lists additionally need a window covering at least
/// [-max_period, max_period]; their scan is clamped to the window.
std::optional<int> detect_period(const CoinSequence& seq, int max_period,
                                 int scan_width, double tolerance = tol::period);

/// detect_period with the default scan width 4*max_period.
std::optional<int> detect_period(const CoinSequence& seq, int max_period);

}  // namespace qw
