#pragma once

#include <vector>

#include "qwline/coin.hpp"
#include "qwline/state.hpp"

namespace qw {

/// Split-step evolution: psi'(x) = P_{x+1} psi(x+1) + Q_{x-1} psi(x-1).
/// Precomputes the P/Q split of every stored coin.
class EvolutionOperator {
 public:
  explicit EvolutionOperator(CoinSequence coins);

  const Topology& topology() const { return coins_.topology(); }
  const CoinSequence& coins() const { return coins_; }
  /// P_x, routing amplitude leftward through site x.
  const Mat2& left_mover(int site) const;
  /// Q_x, routing amplitude rightward through site x.
  const Mat2& right_mover(int site) const;

 private:
  CoinSequence coins_;
  std::vector<Mat2> left_;
  std::vector<Mat2> right_;
};

/// One application of the recurrence. Cycles wrap mod m; on line windows
/// out-of-window neighbors contribute zero amplitude and the result's
/// boundary_depth grows by one.
SpinorField step(const SpinorField& psi, const EvolutionOperator& op);

/// n >= 0 applications of step; n = 0 returns the input.
SpinorField iterate(const SpinorField& psi, const EvolutionOperator& op, int steps);

/// Dense 2m x 2m matrix acting on the flattened vector
/// [psi_L(0), psi_R(0), ..., psi_L(m-1), psi_R(m-1)] exactly as step does.
/// Cycle sequences only, 2 <= m <= 512; the builder verifies unitarity
/// within tol::unitarity. Intended as a spectral oracle, not a fast path.
Eigen::MatrixXcd dense_cycle_operator(const CoinSequence& coins);

/// Eigenvalues of a dense operator, sorted by argument for determinism.
std::vector<Complex> spectrum(const Eigen::MatrixXcd& op);

/// min_k |spectrum_k - lambda|.
double spectral_distance(const Eigen::MatrixXcd& op, Complex lambda);

}  // namespace qw
