#include <doctest.h>

#include "qwline/evolve.hpp"
#include "qwline/transfer.hpp"
#include "test_support.hpp"

using namespace qw;

TEST_CASE("homogeneous balanced coin gives transfer matrices equal to the coin") {
  Coin coin = build_coin(kPi / 4, 0.0);
  TransferMatrix plus = transfer_plus(coin, coin, Complex(1.0, 0.0));
  CHECK(max_abs_diff(plus.entries, coin.matrix()) <= 1e-15);
  TransferMatrix minus = transfer_minus(coin, coin, Complex(1.0, 0.0));
  CHECK(max_abs_diff(minus.entries, coin.matrix()) <= 1e-15);
  CHECK(plus.side == Side::plus);
  CHECK(minus.side == Side::minus);
}

TEST_CASE("singular coin entries are rejected by name") {
  Coin ok = build_coin(kPi / 4, 0.3);
  Coin no_diagonal = build_coin(kPi / 2, 0.3);  // cos = 0: a and d vanish
  Coin no_offdiag{1.0, 0.0, 0.0, -1.0};         // sin = 0: b and c vanish

  CHECK_THROWS_WITH_AS(transfer_plus(no_diagonal, ok, 1.0),
                       doctest::Contains("coin entry a"), std::domain_error);
  CHECK_THROWS_AS(transfer_plus(ok, no_offdiag, 1.0), std::domain_error);
  CHECK_THROWS_WITH_AS(transfer_minus(ok, build_coin(3 * kPi / 2, 0.1), 1.0),
                       doctest::Contains("coin entry d"), std::domain_error);
  CHECK_THROWS_AS(transfer_minus(no_offdiag, ok, 1.0), std::domain_error);

  // theta near (not at) the excluded value is allowed but ill-conditioned; it
  // warns on stderr and still produces a matrix.
  Coin nearly_flat = build_coin(kPi / 2 + 2e-7, 0.3);
  CHECK_NOTHROW(transfer_plus(nearly_flat, ok, 1.0));
}

TEST_CASE("lambda is renormalized inside the unit band and rejected outside") {
  Coin coin = build_coin(kPi / 4, 0.3);
  Complex nearly(1.0 - 5e-10, 0.0);
  TransferMatrix d = transfer_plus(coin, coin, nearly);
  CHECK(std::abs(std::abs(d.lambda) - 1.0) <= 1e-15);
  CHECK_THROWS_AS(transfer_plus(coin, coin, Complex(0.9, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(transfer_plus(coin, coin, Complex(0.0, 0.0)), std::invalid_argument);
}

TEST_CASE("closed form matches the general formula across the family") {
  auto rng = qwtest::make_rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    CPhiParams params(qwtest::random_safe_theta(rng, 1e-3), qwtest::random_angle(rng),
                      qwtest::random_angle(rng));
    CoinSequence seq = CoinSequence::cphi(Topology::line(64), params);
    int x = std::uniform_int_distribution<int>(-50, 50)(rng);

    TransferMatrix general = transfer_plus_at(seq, x, params.lambda());
    TransferMatrix closed = cphi_transfer_plus(params, x);
    CHECK(max_abs_diff(general.entries, closed.entries) <= 1e-12);

    TransferMatrix general_minus = transfer_minus_at(seq, x, params.lambda());
    TransferMatrix closed_minus = cphi_transfer_minus(params, x);
    CHECK(max_abs_diff(general_minus.entries, closed_minus.entries) <= 1e-12);

    CHECK(is_unitary(closed.entries, 1e-12));
    CHECK(is_unitary(closed_minus.entries, 1e-12));
    CHECK(std::abs(closed.entries.determinant() - Complex(-1.0, 0.0)) <= 1e-12);
  }
}

TEST_CASE("closed form reduces to the coin when phi is zero") {
  CPhiParams params(0.9, 0.0, 0.4);
  for (int x = -3; x <= 3; ++x)
    CHECK(max_abs_diff(cphi_transfer_plus(params, x).entries,
                       cphi_coin_at(params, x).matrix()) <= 1e-14);
}

TEST_CASE("closed form at the worked example site") {
  CPhiParams params(kPi / 4, kPi / 3, 0.0);
  Mat2 d = cphi_transfer_plus(params, 1).entries;
  Complex expected(0.3535533905932738, 0.6123724356957945);  // e^{i pi/3} / sqrt 2
  CHECK(std::abs(d(0, 0) - expected) <= 1e-14);
  CHECK(std::abs(d(0, 1) - expected) <= 1e-14);
  CHECK(std::abs(d(1, 0) - std::conj(expected)) <= 1e-14);
  CHECK(std::abs(d(1, 1) + std::conj(expected)) <= 1e-14);
  CHECK(std::abs(d.determinant() + 1.0) <= 1e-14);
}

TEST_CASE("opposite-side transfer matrices invert each other") {
  auto rng = qwtest::make_rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    CPhiParams params(qwtest::random_safe_theta(rng), qwtest::random_angle(rng),
                      qwtest::random_angle(rng));
    CoinSequence seq = CoinSequence::cphi(Topology::line(16), params);
    int x = std::uniform_int_distribution<int>(-8, 8)(rng);
    Mat2 back_and_forth = transfer_minus_at(seq, x, params.lambda()).entries *
                          transfer_plus_at(seq, x + 1, params.lambda()).entries;
    CHECK(max_abs_diff(back_and_forth, Mat2::Identity()) <= 1e-12);
  }
}

TEST_CASE("alpha recursion steps by 2*phi") {
  auto rng = qwtest::make_rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    CPhiParams params(qwtest::random_safe_theta(rng), qwtest::random_angle(rng),
                      qwtest::random_angle(rng));
    int x = std::uniform_int_distribution<int>(-100, 100)(rng);
    double stepped = mod_2pi(params.alpha_at(x + 1) - params.alpha_at(x));
    CHECK(angular_distance(stepped, mod_2pi(2 * params.phi)) <= 1e-12);
    // Same relation, re-centered: alpha_{x+1} - phi = alpha_x + phi.
    CHECK(angular_distance(mod_2pi(params.alpha_at(x + 1) - params.phi),
                           mod_2pi(params.alpha_at(x) + params.phi)) <= 1e-12);
  }
}

TEST_CASE("eigenstates built per window") {
  CPhiParams params(1.1, kPi / 4, 0.2);
  CoinSequence seq = CoinSequence::cphi(Topology::line(64), params);

  SpinorField tiny = build_eigenstate(seq, params.lambda(), Vec2(0.6, Complex(0, -0.8)), 0);
  CHECK(tiny.topology().size() == 1);
  CHECK((tiny.at(0) - Vec2(0.6, Complex(0, -0.8))).norm() == 0.0);

  SpinorField psi = build_eigenstate(seq, params.lambda(), Vec2(0.6, Complex(0, -0.8)), 50);
  double norm0 = psi.at(0).norm();
  for (int x = -50; x <= 50; ++x) CHECK(std::abs(psi.at(x).norm() - norm0) <= 1e-10);

  CHECK_THROWS_AS(build_eigenstate(seq, params.lambda(), Vec2(0.0, 0.0), 10),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_eigenstate(seq, Complex(0.5, 0.0), Vec2(1.0, 0.0), 10),
                  std::invalid_argument);
}

TEST_CASE("general coins still solve the eigen relation, without uniformity") {
  auto rng = qwtest::make_rng(34);
  const int window = 21, build = 20;
  double worst_defect = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Coin> coins;
    for (int x = -window; x <= window; ++x) coins.push_back(build_coin(0.3, qwtest::random_angle(rng)));
    CoinSequence seq = CoinSequence::from_coins(Topology::line(window), coins);
    SpinorField psi = build_eigenstate(seq, Complex(1.0, 0.0), Vec2(1.0, 0.0), build);
    CHECK(eigen_residual(psi, seq, Complex(1.0, 0.0)) <= 1e-9);
    worst_defect = std::max(worst_defect, uniformity_defect(gamma_measure(psi)));
  }
  CHECK(worst_defect > 1e-3);  // generic phases break uniformity
}

TEST_CASE("eigen_residual separates eigenvectors from ordinary fields") {
  CPhiParams params(kPi / 4, kPi / 3, 0.0);
  CoinSequence seq = CoinSequence::cphi(Topology::line(40), params);
  SpinorField psi = build_eigenstate(seq, params.lambda(), Vec2(1.0, 0.0), 30);
  CHECK(eigen_residual(psi, seq, params.lambda()) <= 1e-10);

  // Constant field under the homogeneous balanced coin: residual is the same
  // at every site, fixed by (a-1, c) with a = c = sqrt(1/2).
  CoinSequence flat = CoinSequence::cphi(Topology::line(5), CPhiParams(kPi / 4, kPi, 0.0));
  SpinorField uniform(Topology::line(5), std::vector<Vec2>(11, Vec2(1.0, 0.0)));
  double expected = std::sqrt((1.0 - 0.7071067811865476) * (1.0 - 0.7071067811865476) + 0.5);
  CHECK(eigen_residual(uniform, flat, Complex(1.0, 0.0)) ==
        doctest::Approx(0.7653668647301797).epsilon(1e-12));
  CHECK(eigen_residual(uniform, flat, Complex(1.0, 0.0)) ==
        doctest::Approx(expected).epsilon(1e-12));

  // Residual is 1-homogeneous in the field.
  SpinorField bigger = scale(uniform, Complex(0.0, 2.5));
  CHECK(eigen_residual(bigger, flat, Complex(1.0, 0.0)) ==
        doctest::Approx(2.5 * 0.7653668647301797).epsilon(1e-12));
}

TEST_CASE("eigen_residual restricted to chosen sites") {
  CPhiParams params(1.0, kPi / 5, 0.0);
  CoinSequence seq = CoinSequence::cphi(Topology::line(10), params);
  SpinorField psi = build_eigenstate(seq, params.lambda(), Vec2(1.0, 0.0), 10);
  CHECK(eigen_residual(psi, seq, params.lambda(), {0, 1, -4}) <= 1e-12);
  CHECK_THROWS_AS(eigen_residual(psi, seq, params.lambda(), {10}), std::out_of_range);
}

TEST_CASE("cycle products close for the matched phase gradient") {
  // 2-site cycle, homogeneous coins: the two-step product is already the
  // identity.
  CoinSequence tiny = CoinSequence::cphi(Topology::cycle(2), CPhiParams(kPi / 4, kPi, 0.0));
  CHECK(max_abs_diff(cycle_product(tiny, Complex(-1.0, 0.0)), Mat2::Identity()) <= 1e-12);

  CPhiParams params(kPi / 5, kPi / 3, 0.3);
  CoinSequence seq = CoinSequence::cphi(Topology::cycle(6), params);
  CHECK(max_abs_diff(cycle_product(seq, params.lambda()), Mat2::Identity()) <= 1e-10);

  // Consecutive pairs compose to diag(e^{2 pi i / N}, e^{-2 pi i / N}).
  Mat2 diag = Mat2::Zero();
  diag(0, 0) = std::polar(1.0, 2 * kPi / 3);
  diag(1, 1) = std::polar(1.0, -2 * kPi / 3);
  for (int x = 0; x < 6; ++x) {
    Mat2 pair = transfer_plus_at(seq, x + 1, params.lambda()).entries *
                transfer_plus_at(seq, x, params.lambda()).entries;
    CHECK(max_abs_diff(pair, diag) <= 1e-12);
  }
}

TEST_CASE("dense-oracle eigenvectors satisfy the transfer recursion") {
  auto rng = qwtest::make_rng(35);
  for (int m : {4, 6}) {
    CoinSequence seq =
        CoinSequence::cphi(Topology::cycle(m), CPhiParams(kPi / 5, kPi / (m / 2), 0.3));
    Eigen::MatrixXcd dense = dense_cycle_operator(seq);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(dense);
    REQUIRE(solver.info() == Eigen::Success);
    for (int k = 0; k < 2 * m; ++k) {
      Complex lambda = solver.eigenvalues()(k);
      Eigen::VectorXcd vec = solver.eigenvectors().col(k);
      for (int x = 1; x < m; ++x) {
        Vec2 propagated = transfer_plus_at(seq, x, lambda).entries * Vec2(vec.segment<2>(2 * (x - 1)));
        CHECK((propagated - Vec2(vec.segment<2>(2 * x))).norm() <= 1e-12);
      }
    }
  }
  (void)rng;
}

TEST_CASE("cycle closure is equivalent to the product being the identity") {
  // Matched gradient (phi = pi/N on 2N sites): product is I, the predicted
  // eigenvalue is in the dense spectrum and the built field is an
  // eigenvector. Halved gradient (phi = pi/(2N)): the product is -I, the
  // construction cannot close, and the eigenvalue is absent.
  for (int n = 1; n <= 8; ++n) {
    int m = 2 * n;
    CPhiParams matched(kPi / 5, kPi / n, 0.3);
    CoinSequence good = CoinSequence::cphi(Topology::cycle(m), matched);
    CHECK(max_abs_diff(cycle_product(good, matched.lambda()), Mat2::Identity()) <= 1e-10);
    SpinorField psi = build_cycle_eigenstate(good, matched.lambda(), Vec2(1.0, 0.0));
    CHECK(eigen_residual(psi, good, matched.lambda()) <= 1e-10);
    CHECK(spectral_distance(dense_cycle_operator(good), matched.lambda()) <= 1e-9);

    CPhiParams halved(kPi / 5, kPi / m, 0.3);
    CoinSequence bad = CoinSequence::cphi(Topology::cycle(m), halved);
    Mat2 product = cycle_product(bad, halved.lambda());
    CHECK(max_abs_diff(product, -Mat2::Identity()) <= 1e-10);
    CHECK(spectral_distance(dense_cycle_operator(bad), halved.lambda()) > 1e-3);
    SpinorField stuck = build_cycle_eigenstate(bad, halved.lambda(), Vec2(1.0, 0.0));
    CHECK(eigen_residual(stuck, bad, halved.lambda()) > 1e-3);
  }
}

TEST_CASE("uniform measure of the constructed eigenstate") {
  auto rng = qwtest::make_rng(36);
  for (int trial = 0; trial < 20; ++trial) {
    CPhiParams params(qwtest::random_safe_theta(rng), qwtest::random_angle(rng),
                      qwtest::random_angle(rng));
    CoinSequence seq = CoinSequence::cphi(Topology::line(40), params);
    SpinorField psi = build_eigenstate(seq, params.lambda(), Vec2(1.0, 0.0), 40);
    CHECK(uniformity_defect(gamma_measure(psi)) <= 1e-10);
  }
}
