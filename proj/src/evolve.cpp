#include "qwline/evolve.hpp"

#include <algorithm>
#include <complex>

namespace qw {

EvolutionOperator::EvolutionOperator(CoinSequence coins) : coins_(std::move(coins)) {
  const Topology& topo = coins_.topology();
  left_.resize(topo.size());
  right_.resize(topo.size());
  for (int i = 0; i < topo.size(); ++i) {
    auto [p, q] = split_coin(coins_.at(topo.site_of(i)));
    left_[i] = p;
    right_[i] = q;
  }
}

const Mat2& EvolutionOperator::left_mover(int site) const {
  return left_[topology().index_of(site)];
}

const Mat2& EvolutionOperator::right_mover(int site) const {
  return right_[topology().index_of(site)];
}

SpinorField step(const SpinorField& psi, const EvolutionOperator& op) {
  if (psi.topology() != op.topology())
    throw std::invalid_argument("state and operator topologies differ: " +
                                psi.topology().describe() + " vs " + op.topology().describe());
  const Topology& topo = psi.topology();
  std::vector<Vec2> out(topo.size(), Vec2::Zero());

  if (topo.is_cycle()) {
    int m = topo.size();
    for (int x = 0; x < m; ++x) {
      int xp = (x + 1) % m;
      int xm = (x - 1 + m) % m;
      out[x] = op.left_mover(xp) * psi.amplitudes()[xp] +
               op.right_mover(xm) * psi.amplitudes()[xm];
    }
    return SpinorField(topo, std::move(out));
  }

  int l = topo.half_width();
  for (int x = -l; x <= l; ++x) {
    Vec2 acc = Vec2::Zero();
    if (x + 1 <= l) acc += op.left_mover(x + 1) * psi.at(x + 1);
    if (x - 1 >= -l) acc += op.right_mover(x - 1) * psi.at(x - 1);
    out[topo.index_of(x)] = acc;
  }
  return SpinorField(topo, std::move(out), psi.boundary_depth() + 1);
}

SpinorField iterate(const SpinorField& psi, const EvolutionOperator& op, int steps) {
  if (steps < 0) throw std::invalid_argument("step count must be >= 0");
  SpinorField current = psi;
  for (int n = 0; n < steps; ++n) current = step(current, op);
  return current;
}

Eigen::MatrixXcd dense_cycle_operator(const CoinSequence& coins) {
  const Topology& topo = coins.topology();
  if (!topo.is_cycle()) throw std::invalid_argument("dense operator is defined on cycles");
  int m = topo.size();
  if (m > 512) throw std::invalid_argument("dense oracle path is reserved for m <= 512");

  Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(2 * m, 2 * m);
  for (int x = 0; x < m; ++x) {
    int xp = (x + 1) % m;
    int xm = (x - 1 + m) % m;
    auto [p_next, q_next] = split_coin(coins.at(xp));
    auto [p_prev, q_prev] = split_coin(coins.at(xm));
    op.block<2, 2>(2 * x, 2 * xp) += p_next;
    op.block<2, 2>(2 * x, 2 * xm) += q_prev;
  }

  double defect = (op.adjoint() * op - Eigen::MatrixXcd::Identity(2 * m, 2 * m))
                      .cwiseAbs()
                      .maxCoeff();
  if (defect > tol::unitarity)
    throw std::runtime_error("dense cycle operator failed its unitarity check (defect " +
                             std::to_string(defect) + ")");
  return op;
}

std::vector<Complex> spectrum(const Eigen::MatrixXcd& op) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalue computation failed");
  std::vector<Complex> values(solver.eigenvalues().data(),
                              solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(values.begin(), values.end(), [](Complex lhs, Complex rhs) {
    double la = std::arg(lhs), ra = std::arg(rhs);
    if (la != ra) return la < ra;
    return std::abs(lhs) < std::abs(rhs);
  });
  return values;
}

double spectral_distance(const Eigen::MatrixXcd& op, Complex lambda) {
  double best = std::numeric_limits<double>::infinity();
  for (Complex value : spectrum(op)) best = std::min(best, std::abs(value - lambda));
  return best;
}

}  // namespace qw
