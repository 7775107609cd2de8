#include "qwline/transfer.hpp"

#include <cmath>
#include <iostream>

namespace qw {

namespace {

// `first` orders the scan so the denominator entry gets named when several
// entries vanish at once (cos(theta) = 0 kills both a and d).
void require_nonsingular(const Coin& coin, const char* which, int site, char first) {
  struct Entry {
    char name;
    Complex value;
  } entries[] = {{'a', coin.a}, {'b', coin.b}, {'c', coin.c}, {'d', coin.d}};
  auto check = [&](const Entry& entry) {
    if (std::abs(entry.value) <= tol::entry_zero)
      throw std::domain_error(std::string("coin entry ") + entry.name + " of " + which +
                              " (transfer site " + std::to_string(site) +
                              ") is zero; transfer matrices need all coin entries nonzero");
  };
  for (const auto& entry : entries)
    if (entry.name == first) check(entry);
  for (const auto& entry : entries) check(entry);
}

void warn_if_ill_conditioned(Complex denominator, const char* name, int site) {
  if (std::abs(denominator) < tol::condition_warn)
    std::cerr << "qwline: warning: |" << name << "| = " << std::abs(denominator)
              << " at transfer site " << site << "; transfer matrix is ill-conditioned\n";
}

}  // namespace

TransferMatrix transfer_plus(const Coin& coin_x, const Coin& coin_prev,
                             Complex lambda, int site) {
  Complex lam = unit_lambda(lambda);
  require_nonsingular(coin_x, "U_x", site, 'a');
  require_nonsingular(coin_prev, "U_{x-1}", site, 'a');
  warn_if_ill_conditioned(coin_x.a, "a_x", site);

  Mat2 d;
  d(0, 0) = (lam * lam - coin_x.b * coin_prev.c) / (lam * coin_x.a);
  d(0, 1) = -(coin_x.b * coin_prev.d) / (lam * coin_x.a);
  d(1, 0) = coin_prev.c / lam;
  d(1, 1) = coin_prev.d / lam;
  return TransferMatrix{d, lam, Side::plus, site};
}

TransferMatrix transfer_minus(const Coin& coin_next, const Coin& coin_x,
                              Complex lambda, int site) {
  Complex lam = unit_lambda(lambda);
  require_nonsingular(coin_x, "U_x", site, 'd');
  require_nonsingular(coin_next, "U_{x+1}", site, 'd');
  warn_if_ill_conditioned(coin_x.d, "d_x", site);

  Mat2 d;
  d(0, 0) = coin_next.a / lam;
  d(0, 1) = coin_next.b / lam;
  d(1, 0) = -(coin_next.a * coin_x.c) / (lam * coin_x.d);
  d(1, 1) = (lam * lam - coin_next.b * coin_x.c) / (lam * coin_x.d);
  return TransferMatrix{d, lam, Side::minus, site};
}

TransferMatrix transfer_plus_at(const CoinSequence& coins, int site, Complex lambda) {
  return transfer_plus(coins.at(site), coins.at(site - 1), lambda, site);
}

TransferMatrix transfer_minus_at(const CoinSequence& coins, int site, Complex lambda) {
  return transfer_minus(coins.at(site + 1), coins.at(site), lambda, site);
}

TransferMatrix cphi_transfer_plus(const CPhiParams& params, int site) {
  double ct = std::cos(params.theta);
  double st = std::sin(params.theta);
  Complex phase = params.lambda();
  Complex alpha = std::polar(1.0, params.alpha_at(site));

  Mat2 d;
  d(0, 0) = phase * ct;
  d(0, 1) = alpha * st;
  d(1, 0) = std::conj(alpha) * st;
  d(1, 1) = -std::conj(phase) * ct;
  return TransferMatrix{d, phase, Side::plus, site};
}

TransferMatrix cphi_transfer_minus(const CPhiParams& params, int site) {
  double ct = std::cos(params.theta);
  double st = std::sin(params.theta);
  Complex phase = params.lambda();
  Complex alpha = std::polar(1.0, params.alpha_at(site + 1));

  Mat2 d;
  d(0, 0) = std::conj(phase) * ct;
  d(0, 1) = alpha * st;
  d(1, 0) = std::conj(alpha) * st;
  d(1, 1) = -phase * ct;
  return TransferMatrix{d, phase, Side::minus, site};
}

SpinorField build_eigenstate(const CoinSequence& coins, Complex lambda,
                             const Vec2& psi0, int half_width) {
  if (!coins.topology().is_line())
    throw std::invalid_argument("line eigenstate construction needs a line coin sequence");
  if (half_width < 0) throw std::invalid_argument("window half-width must be >= 0");
  if (psi0.isZero(0.0)) throw std::invalid_argument("psi0 must be nonzero");
  Complex lam = unit_lambda(lambda);

  Topology window = Topology::line(half_width);
  std::vector<Vec2> amps(window.size());
  amps[window.index_of(0)] = psi0;

  Vec2 current = psi0;
  for (int x = 1; x <= half_width; ++x) {
    current = transfer_plus_at(coins, x, lam).entries * current;
    amps[window.index_of(x)] = current;
  }
  current = psi0;
  for (int x = -1; x >= -half_width; --x) {
    current = transfer_minus_at(coins, x, lam).entries * current;
    amps[window.index_of(x)] = current;
  }
  return SpinorField(window, std::move(amps));
}

SpinorField build_cycle_eigenstate(const CoinSequence& coins, Complex lambda,
                                   const Vec2& psi0) {
  if (!coins.topology().is_cycle())
    throw std::invalid_argument("cycle eigenstate construction needs a cycle coin sequence");
  if (psi0.isZero(0.0)) throw std::invalid_argument("psi0 must be nonzero");
  Complex lam = unit_lambda(lambda);

  const Topology& topo = coins.topology();
  std::vector<Vec2> amps(topo.size());
  amps[0] = psi0;
  for (int x = 1; x < topo.size(); ++x)
    amps[x] = transfer_plus_at(coins, x, lam).entries * amps[x - 1];
  return SpinorField(topo, std::move(amps));
}

double eigen_residual(const SpinorField& psi, const CoinSequence& coins,
                      Complex lambda, const std::vector<int>& sites) {
  // The coins only have to cover the field: a wider line window (or a lazy
  // generator) is fine, a cycle must have the same size.
  if (psi.topology().is_cycle() != coins.topology().is_cycle() ||
      (psi.topology().is_cycle() && psi.topology().size() != coins.topology().size()))
    throw std::invalid_argument("state and coin topologies are incompatible");
  Complex lam = unit_lambda(lambda);
  const Topology& topo = psi.topology();

  double worst = 0.0;
  for (int x : sites) {
    if (topo.is_line()) {
      int l = topo.half_width();
      if (x - 1 < -l || x + 1 > l)
        throw std::out_of_range("site " + std::to_string(x) +
                                " has no in-window neighbors to check");
    }
    auto [p_next, q_next] = split_coin(coins.at(x + 1));
    auto [p_prev, q_prev] = split_coin(coins.at(x - 1));
    Vec2 r = p_next * psi.at(x + 1) + q_prev * psi.at(x - 1) - lam * psi.at(x);
    worst = std::max(worst, r.norm());
  }
  return worst;
}

double eigen_residual(const SpinorField& psi, const CoinSequence& coins, Complex lambda) {
  const Topology& topo = psi.topology();
  std::vector<int> sites;
  if (topo.is_cycle()) {
    sites = topo.all_sites();
  } else {
    int l = topo.half_width();
    for (int x = -l + 1; x <= l - 1; ++x) sites.push_back(x);
    if (sites.empty()) return 0.0;  // a window too small to check anywhere
  }
  return eigen_residual(psi, coins, lambda, sites);
}

Mat2 cycle_product(const CoinSequence& coins, Complex lambda) {
  if (!coins.topology().is_cycle())
    throw std::invalid_argument("cycle product needs a cycle coin sequence");
  Complex lam = unit_lambda(lambda);
  int m = coins.topology().size();
  Mat2 product = Mat2::Identity();
  for (int x = 1; x <= m; ++x) product = transfer_plus_at(coins, x, lam).entries * product;
  return product;
}

}  // namespace qw
