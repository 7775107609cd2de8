#pragma once

#include <vector>

#include "qwline/coin.hpp"
#include "qwline/state.hpp"

namespace qw {

enum class Side { plus, minus };

/// 2x2 matrix propagating a generalized eigenvector of the split-step
/// operator between adjacent sites at a fixed unit eigenvalue lambda:
/// plus-side matrices map psi(x-1) -> psi(x), minus-side map psi(x+1) -> psi(x).
struct TransferMatrix {
  Mat2 entries;
  Complex lambda;
  Side side;
  int site;
};

/// Rightward transfer matrix at site x from the coin at x and the coin at
/// x-1:
///
///   [[ (lambda^2 - b_x c_{x-1}) / (lambda a_x),  -b_x d_{x-1} / (lambda a_x) ],
///    [  c_{x-1} / lambda,                          d_{x-1} / lambda          ]]
///
/// Every entry of both coins must be nonzero (within tol::entry_zero);
/// a zero entry throws std::domain_error naming it. |a_x| below
/// tol::condition_warn emits an ill-conditioning warning on stderr.
TransferMatrix transfer_plus(const Coin& coin_x, const Coin& coin_prev,
                             Complex lambda, int site = 0);

/// Leftward transfer matrix at site x from the coin at x+1 and the coin at x:
///
///   [[  a_{x+1} / lambda,                        b_{x+1} / lambda                       ],
///    [ -a_{x+1} c_x / (lambda d_x),  (lambda^2 - b_{x+1} c_x) / (lambda d_x) ]]
TransferMatrix transfer_minus(const Coin& coin_next, const Coin& coin_x,
                              Complex lambda, int site = 0);

/// transfer_plus built from a coin sequence, fetching U_x and U_{x-1}.
TransferMatrix transfer_plus_at(const CoinSequence& coins, int site, Complex lambda);
TransferMatrix transfer_minus_at(const CoinSequence& coins, int site, Complex lambda);

/// Closed form of the rightward transfer matrix for the phase-gradient
/// family at lambda = e^{i phi}:
///
///   [[ e^{i phi} cos t,        e^{i alpha_x} sin t ],
///    [ e^{-i alpha_x} sin t,  -e^{-i phi} cos t    ]]
///
/// with alpha_x = phi + omega_{x-1}. Unitary, determinant -1. Agrees with
/// transfer_plus on the same coins; the two routes are kept separate so
/// tests can compare them.
TransferMatrix cphi_transfer_plus(const CPhiParams& params, int site);

/// Closed-form leftward mate of cphi_transfer_plus (alpha at x+1, phases
/// conjugated).
TransferMatrix cphi_transfer_minus(const CPhiParams& params, int site);

/// Generalized eigenvector on the window [-L, L] grown from psi(0) = psi0 by
/// transfer products: rightward psi(x) = D+_x ... D+_1 psi0 (site-1 matrix
/// applied first), leftward psi(x) = D-_x ... D-_{-1} psi0. psi0 must be
/// nonzero; the coins must cover the window.
SpinorField build_eigenstate(const CoinSequence& coins, Complex lambda,
                             const Vec2& psi0, int half_width);

/// Transfer-product field on a cycle: psi(0) = psi0, psi(x) = D+_x psi(x-1)
/// for x = 1..m-1 with mod-m coin indexing. A genuine eigenvector of the
/// cycle operator iff the full product cycle_product(coins, lambda) fixes
/// psi0 (identity product fixes every psi0).
SpinorField build_cycle_eigenstate(const CoinSequence& coins, Complex lambda,
                                   const Vec2& psi0);

/// Max over checkable sites of ||P_{x+1} psi(x+1) + Q_{x-1} psi(x-1)
/// - lambda psi(x)||_2. Lines check x in [-L+1, L-1], cycles every site.
double eigen_residual(const SpinorField& psi, const CoinSequence& coins,
                      Complex lambda);

/// eigen_residual restricted to the given sites (each must have both
/// neighbors inside the window).
double eigen_residual(const SpinorField& psi, const CoinSequence& coins,
                      Complex lambda, const std::vector<int>& sites);

/// Ordered product D+_m ... D+_2 D+_1 around a cycle of m sites (site-1
/// matrix applied first, indices mod m). Identity iff the transfer
/// construction closes into a valid cycle eigenvector for every psi0.
Mat2 cycle_product(const CoinSequence& coins, Complex lambda);

}  // namespace qw
