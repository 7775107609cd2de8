#include "qwline/coin.hpp"

#include <cmath>

namespace qw {

Mat2 Coin::matrix() const {
  Mat2 m;
  m << a, b, c, d;
  return m;
}

Coin Coin::from_matrix(const Mat2& m) {
  return Coin{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

bool is_unitary(const Coin& coin, double tolerance) {
  return is_unitary(coin.matrix(), tolerance);
}

Coin build_coin(double theta, double omega) {
  if (!(theta > 0.0 && theta < kTwoPi))
    throw std::invalid_argument("theta must lie in (0, 2*pi)");
  double w = mod_2pi(omega);
  double ct = std::cos(theta);
  double st = std::sin(theta);
  Complex phase = std::polar(1.0, w);
  return Coin{ct, phase * st, std::conj(phase) * st, -ct};
}

std::pair<Mat2, Mat2> split_coin(const Coin& coin) {
  Mat2 p = Mat2::Zero();
  Mat2 q = Mat2::Zero();
  p(0, 0) = coin.a;
  p(0, 1) = coin.b;
  q(1, 0) = coin.c;
  q(1, 1) = coin.d;
  return {p, q};
}

CPhiParams::CPhiParams(double theta_in, double phi_in, double omega0_in)
    : theta(theta_in), phi(mod_2pi(phi_in)), omega0(mod_2pi(omega0_in)) {
  if (!(theta > 0.0 && theta < kTwoPi))
    throw std::invalid_argument("theta must lie in (0, 2*pi)");
  if (std::abs(theta - kPi / 2) <= tol::theta_excluded ||
      std::abs(theta - 3 * kPi / 2) <= tol::theta_excluded)
    throw std::invalid_argument("theta = pi/2 and 3*pi/2 make cos(theta) vanish and are excluded");
}

namespace {

// base + scale * site reduced mod 2*pi, carried in double-double precision:
// the plain product loses ~|scale*site|*eps, which at |site| in the
// thousands already eats the 1e-12 phase guarantees.
double reduced_phase(double base, double scale, int site) {
  constexpr double two_pi_hi = 6.283185307179586;
  constexpr double two_pi_lo = 2.4492935982947064e-16;  // 2*pi - two_pi_hi
  double x = static_cast<double>(site);
  double product = scale * x;
  double product_err = std::fma(scale, x, -product);
  double sum = base + product;
  double swapped = sum - base;
  double sum_err = (base - (sum - swapped)) + (product - swapped);
  double turns = std::nearbyint(sum / two_pi_hi);
  double whole = turns * two_pi_hi;
  double whole_err = std::fma(turns, two_pi_hi, -whole);
  double reduced = (sum - whole) - whole_err - turns * two_pi_lo + (product_err + sum_err);
  return mod_2pi(reduced);
}

}  // namespace

double CPhiParams::omega_at(int site) const {
  // Closed form, not iterated addition: exact increment relation by construction.
  return reduced_phase(omega0, 2.0 * phi, site);
}

double CPhiParams::alpha_at(int site) const {
  return mod_2pi(phi + omega_at(site - 1));
}

Complex CPhiParams::lambda() const { return std::polar(1.0, phi); }

Coin cphi_coin_at(const CPhiParams& params, int site) {
  return build_coin(params.theta, params.omega_at(site));
}

CoinSequence::CoinSequence(Topology topology, std::variant<CPhiParams, std::vector<Coin>> source)
    : topology_(topology), source_(std::move(source)) {}

CoinSequence CoinSequence::cphi(Topology topology, CPhiParams params) {
  if (topology.is_cycle()) {
    // The generator must be single-valued mod m: m * 2*phi has to be a
    // multiple of 2*pi, otherwise omega is ill-defined on the cycle.
    double wrap = angular_distance(topology.size() * 2.0 * params.phi, 0.0);
    if (wrap > tol::lambda_unit)
      throw std::invalid_argument("phase increment does not close around the cycle: "
                                  "m * 2*phi must be a multiple of 2*pi");
  }
  return CoinSequence(topology, std::move(params));
}

CoinSequence CoinSequence::from_coins(Topology topology, std::vector<Coin> coins) {
  if (static_cast<int>(coins.size()) != topology.size())
    throw std::invalid_argument("coin list size " + std::to_string(coins.size()) +
                                " does not match " + topology.describe());
  for (std::size_t i = 0; i < coins.size(); ++i)
    if (!is_unitary(coins[i]))
      throw std::invalid_argument("coin at storage index " + std::to_string(i) +
                                  " is not unitary within 1e-12");
  return CoinSequence(topology, std::move(coins));
}

Coin CoinSequence::at(int site) const {
  if (const auto* params = std::get_if<CPhiParams>(&source_)) {
    if (topology_.is_cycle()) return cphi_coin_at(*params, topology_.index_of(site));
    return cphi_coin_at(*params, site);
  }
  const auto& list = std::get<std::vector<Coin>>(source_);
  return list[topology_.index_of(site)];
}

const CPhiParams* CoinSequence::cphi_params() const {
  return std::get_if<CPhiParams>(&source_);
}

std::optional<int> detect_period(const CoinSequence& seq, int max_period,
                                 int scan_width, double tolerance) {
  if (!seq.topology().is_line())
    throw std::invalid_argument("period detection is defined on line sequences");
  if (max_period < 1) throw std::invalid_argument("max_period must be positive");
  if (scan_width < 2 * max_period)
    throw std::invalid_argument("scan_width must be at least 2*max_period");

  int scan = scan_width;
  if (!seq.cphi_params()) {
    // Explicit lists can only be compared inside their window.
    int l = seq.topology().half_width();
    if (l < max_period)
      throw std::invalid_argument("window too small to scan periods up to " +
                                  std::to_string(max_period));
    scan = std::min(scan, l);
  }

  // Cache the coins once; the candidate loop then only diffs matrices.
  std::vector<Mat2> cache(2 * scan + max_period + 1);
  auto cached = [&](int site) -> const Mat2& { return cache[site + scan]; };
  int hi = seq.cphi_params() ? scan + max_period
                             : std::min(scan + max_period, seq.topology().half_width());
  for (int x = -scan; x <= hi; ++x) cache[x + scan] = seq.at(x).matrix();

  for (int candidate = 1; candidate <= max_period; ++candidate) {
    bool match = true;
    for (int x = -scan; x + candidate <= hi && x <= scan; ++x) {
      if (max_abs_diff(cached(x + candidate), cached(x)) > tolerance) {
        match = false;
        break;
      }
    }
    if (match) return candidate;
  }
  return std::nullopt;
}

std::optional<int> detect_period(const CoinSequence& seq, int max_period) {
  if (max_period < 1) throw std::invalid_argument("max_period must be positive");
  return detect_period(seq, max_period, 4 * max_period);
}

}  // namespace qw
