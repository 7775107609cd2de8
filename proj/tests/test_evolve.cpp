#include <doctest.h>

#include "qwline/evolve.hpp"
#include "qwline/transfer.hpp"
#include "test_support.hpp"

using namespace qw;

namespace {

CoinSequence hadamard_line(int half_width) {
  return CoinSequence::cphi(Topology::line(half_width), CPhiParams(kPi / 4, kPi, 0.0));
}

CoinSequence random_unitary_cycle(int m, std::mt19937& rng) {
  std::vector<Coin> coins;
  for (int i = 0; i < m; ++i) coins.push_back(qwtest::random_unitary_coin(rng));
  return CoinSequence::from_coins(Topology::cycle(m), coins);
}

SpinorField random_field(const Topology& topo, std::mt19937& rng) {
  std::vector<Vec2> amps;
  for (int i = 0; i < topo.size(); ++i) amps.push_back(qwtest::random_spinor(rng));
  return SpinorField(topo, amps);
}

}  // namespace

TEST_CASE("one step moves a point state one site each way") {
  // Hand-applied recurrence: the left component of P U psi0 lands at -1, the
  // right component of Q psi0 lands at +1.
  CoinSequence coins = hadamard_line(3);
  EvolutionOperator op(coins);
  SpinorField psi = SpinorField::point(Topology::line(3), 0, Vec2(1.0, 0.0));
  SpinorField next = step(psi, op);

  const double s = 0.7071067811865476;
  CHECK((next.at(-1) - Vec2(Complex(s, 0), Complex(0, 0))).norm() <= 1e-15);
  CHECK((next.at(1) - Vec2(Complex(0, 0), Complex(s, 0))).norm() <= 1e-15);
  CHECK(next.at(0).norm() == 0.0);
  CHECK(next.at(2).norm() == 0.0);
  CHECK(next.boundary_depth() == 1);
}

TEST_CASE("zero fields stay zero and topology mismatches throw") {
  CoinSequence coins = hadamard_line(3);
  EvolutionOperator op(coins);
  CHECK(step(SpinorField::zero(Topology::line(3)), op).is_zero());
  CHECK_THROWS_AS(step(SpinorField::zero(Topology::line(4)), op), std::invalid_argument);
  CHECK_THROWS_AS(step(SpinorField::zero(Topology::cycle(7)), op), std::invalid_argument);
}

TEST_CASE("a cycle eigenstate advances by its eigenvalue each step") {
  CPhiParams params(kPi / 5, kPi / 3, 0.3);
  CoinSequence coins = CoinSequence::cphi(Topology::cycle(6), params);
  SpinorField psi = build_cycle_eigenstate(coins, params.lambda(), Vec2(1.0, 0.0));
  SpinorField next = step(psi, EvolutionOperator(coins));
  for (int x = 0; x < 6; ++x)
    CHECK((next.at(x) - params.lambda() * psi.at(x)).norm() <= 1e-10);
}

TEST_CASE("iterate preserves the measure of an eigenstate for 100 steps") {
  CPhiParams params(kPi / 5, kPi / 3, 0.3);
  CoinSequence coins = CoinSequence::cphi(Topology::cycle(6), params);
  SpinorField psi = build_cycle_eigenstate(coins, params.lambda(), Vec2(1.0, 0.0));
  EvolutionOperator op(coins);
  Measure mu0 = gamma_measure(psi);

  SpinorField same = iterate(psi, op, 0);
  for (int x = 0; x < 6; ++x) CHECK((same.at(x) - psi.at(x)).norm() == 0.0);

  SpinorField current = psi;
  for (int n = 1; n <= 100; ++n) {
    current = step(current, op);
    Measure mu = gamma_measure(current);
    for (int x = 0; x < 6; ++x) CHECK(std::abs(mu.at(x) - mu0.at(x)) <= 1e-9);
  }
  CHECK_THROWS_AS(iterate(psi, op, -1), std::invalid_argument);
}

TEST_CASE("unitary evolution conserves total mass on cycles") {
  auto rng = qwtest::make_rng(11);
  for (int m : {2, 5, 8}) {
    CoinSequence coins = random_unitary_cycle(m, rng);
    EvolutionOperator op(coins);
    SpinorField psi = random_field(Topology::cycle(m), rng);
    double mass0 = gamma_measure(psi).total();
    SpinorField current = psi;
    for (int n = 0; n < 100; ++n) current = step(current, op);
    CHECK(std::abs(gamma_measure(current).total() - mass0) <= 1e-10);
  }
}

TEST_CASE("step is linear") {
  auto rng = qwtest::make_rng(12);
  CoinSequence coins = random_unitary_cycle(6, rng);
  EvolutionOperator op(coins);
  SpinorField psi1 = random_field(Topology::cycle(6), rng);
  SpinorField psi2 = random_field(Topology::cycle(6), rng);
  Complex alpha(0.3, -1.1), beta(-0.7, 0.2);

  std::vector<Vec2> mixed(6);
  for (int x = 0; x < 6; ++x) mixed[x] = alpha * psi1.at(x) + beta * psi2.at(x);
  SpinorField lhs = step(SpinorField(Topology::cycle(6), mixed), op);
  SpinorField s1 = step(psi1, op);
  SpinorField s2 = step(psi2, op);
  for (int x = 0; x < 6; ++x)
    CHECK((lhs.at(x) - alpha * s1.at(x) - beta * s2.at(x)).norm() <= 1e-12);
}

TEST_CASE("light cone: n-step images agree exactly where cones agree") {
  auto rng = qwtest::make_rng(13);
  const int l = 12, n = 4, x0 = 2;
  CoinSequence coins =
      CoinSequence::cphi(Topology::line(l), CPhiParams(0.9, kPi / 5, 0.1));
  EvolutionOperator op(coins);

  SpinorField a = random_field(Topology::line(l), rng);
  std::vector<Vec2> other = a.amplitudes();
  for (int x = -l; x <= l; ++x)
    if (x < x0 - n || x > x0 + n) other[Topology::line(l).index_of(x)] = qwtest::random_spinor(rng);
  SpinorField b(Topology::line(l), other);

  SpinorField an = iterate(a, op, n);
  SpinorField bn = iterate(b, op, n);
  CHECK(an.at(x0) == bn.at(x0));  // bitwise equality: same ops, same inputs
}

TEST_CASE("dense cycle operator matches step and is unitary") {
  auto rng = qwtest::make_rng(14);
  for (int m : {2, 4, 6, 8, 12}) {
    // m = 2 is the homogeneous balanced-coin case; larger even cycles mix
    // phase-gradient and generic unitary sequences.
    CoinSequence coins = (m == 2) ? CoinSequence::cphi(Topology::cycle(2),
                                                       CPhiParams(kPi / 4, kPi, 0.0))
                   : (m % 4 == 0) ? random_unitary_cycle(m, rng)
                                  : CoinSequence::cphi(Topology::cycle(m),
                                                       CPhiParams(0.7, kPi / (m / 2), 0.2));
    Eigen::MatrixXcd dense = dense_cycle_operator(coins);
    CHECK((dense.adjoint() * dense - Eigen::MatrixXcd::Identity(2 * m, 2 * m))
              .cwiseAbs()
              .maxCoeff() <= 1e-12);

    EvolutionOperator op(coins);
    for (int trial = 0; trial < 10; ++trial) {
      SpinorField psi = random_field(Topology::cycle(m), rng);
      Eigen::VectorXcd flat(2 * m);
      for (int x = 0; x < m; ++x) flat.segment<2>(2 * x) = psi.at(x);
      Eigen::VectorXcd mapped = dense * flat;
      SpinorField stepped = step(psi, op);
      double diff = 0.0;
      for (int x = 0; x < m; ++x)
        diff = std::max(diff, (mapped.segment<2>(2 * x) - stepped.at(x)).norm());
      CHECK(diff <= 1e-13);
    }
  }
}

TEST_CASE("dense operator exposes the predicted eigenvalue") {
  CPhiParams params(kPi / 5, kPi / 3, 0.3);
  CoinSequence coins = CoinSequence::cphi(Topology::cycle(6), params);
  Eigen::MatrixXcd dense = dense_cycle_operator(coins);
  CHECK(spectral_distance(dense, params.lambda()) <= 1e-9);
  CHECK(spectrum(dense).size() == 12);
}

TEST_CASE("dense path validates its domain") {
  CHECK_THROWS_AS(dense_cycle_operator(hadamard_line(3)), std::invalid_argument);
  CHECK_THROWS_AS(Topology::cycle(1), std::invalid_argument);
  CHECK_THROWS_AS(
      dense_cycle_operator(CoinSequence::cphi(Topology::cycle(514), CPhiParams(1.0, kPi, 0.0))),
      std::invalid_argument);
}
