#include "helpers.hpp"

#include "qwalk/error.hpp"
#include "qwalk/kspace.hpp"

#include <catch_amalgamated.hpp>

using namespace qwalk;

namespace {

oracle::Mat2 two_step(double k, double t0, double t1, Parity support) {
  const auto first = oracle::mul(oracle::shift(k), oracle::coin(support == Parity::even ? t0 : t1));
  const auto second = oracle::mul(oracle::shift(k), oracle::coin(support == Parity::even ? t1 : t0));
  return oracle::mul(second, first);
}

double diff(const Spinor &s, const std::array<oracle::cd, 2> &v) {
  return std::max(std::abs(s.a - v[0]), std::abs(s.b - v[1]));
}

} // namespace

TEST_CASE("Fourier transforms of the standard initial states") {
  const double r = 1 / std::numbers::sqrt2;
  const auto local = fourier_initial(initial_local(testing::plus_i));
  CHECK(local.parity() == Parity::even);
  for (double k : {-2.0, 0.1, 1.7}) {
    CHECK(std::abs(local(k).a - r) < 1e-15);
    CHECK(std::abs(local(k).b - Complex(0, r)) < 1e-15);
  }
  const auto plus = fourier_initial(initial_nonlocal(+1, testing::plus_i));
  const auto minus = fourier_initial(initial_nonlocal(-1, testing::plus_i));
  CHECK(plus.parity() == Parity::odd);
  for (double k : {-2.0, 0.1, 1.7}) {
    CHECK(std::abs(plus(k).a - std::cos(k)) < 1e-15);
    CHECK(std::abs(plus(k).b - Complex(0, std::cos(k))) < 1e-15);
    CHECK(std::abs(minus(k).a - Complex(0, std::sin(k))) < 1e-15);
    CHECK(std::abs(minus(k).b + std::sin(k)) < 1e-15);
  }
  CHECK_THROWS_AS(fourier_initial(WalkState({{0, {1.0, 0.0}}, {1, {1.0, 0.0}}})), InvalidState);
}

TEST_CASE("degenerate momenta and parameters") {
  const auto init = fourier_initial(initial_local(testing::plus_i));
  CHECK_THROWS_AS(eigen_system(0.0, {0.6, 0.6}, Parity::even, init), DegenerateMomentum);
  CHECK_THROWS_AS(eigen_system(0.3, {pi / 2, pi / 2}, Parity::even, init), DegenerateParameters);
  CHECK_THROWS_AS(eigen_system(0.3, {0.0, pi}, Parity::even, init), DegenerateParameters);
  CHECK(fully_degenerate({pi / 2, -pi / 2}));
  CHECK_FALSE(fully_degenerate({pi / 2, 0.0}));
}

TEST_CASE("eigenvalues match a generic solver") {
  const auto init = fourier_initial(initial_local(testing::plus_i));
  const auto es = eigen_system(pi / 3, {pi / 2, pi / 4}, Parity::even, init);
  const auto ev = oracle::eigenvalues(two_step(pi / 3, pi / 2, pi / 4, Parity::even));
  CHECK(std::abs(es.lambda0 - ev[0]) < 1e-12);
  CHECK(std::abs(es.lambda1 - ev[1]) < 1e-12);
}

TEST_CASE("spectral data reconstructs the two-step operator") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-pi, pi);
  const auto init = fourier_initial(initial_local(testing::plus_i));
  int checked = 0;
  for (int n = 0; n < 1000; ++n) {
    const double k = u(rng), t0 = u(rng), t1 = u(rng);
    const Parity par = n % 2 ? Parity::odd : Parity::even;
    const auto es = try_eigen_system(k, CoinTrig({t0, t1}), par, init(k));
    if (!es)
      continue;
    ++checked;
    REQUIRE(std::abs(std::abs(es->lambda0) - 1) < 1e-12);
    REQUIRE(std::abs(std::abs(es->lambda1) - 1) < 1e-12);
    const std::array<Complex, 2> v0{es->u, es->v + es->w}, v1{es->u, es->v - es->w};
    const auto m = two_step(k, t0, t1, par);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const Complex rec = es->lambda0 * v0[i] * std::conj(v0[j]) / es->n0 +
                            es->lambda1 * v1[i] * std::conj(v1[j]) / es->n1;
        REQUIRE(std::abs(rec - m[i][j]) < 1e-10);
      }
  }
  CHECK(checked > 990);
}

TEST_CASE("spinor propagation matches repeated matrix products") {
  const auto init = fourier_initial(initial_local(testing::plus_i));
  const std::array<oracle::cd, 2> v{init(0.0).a, init(0.0).b};
  CHECK(spinor_at(0.4, 0, {0.3, 0.9}, init) == init(0.4));
  CHECK(diff(spinor_at(1.0, 6, {pi / 4, pi / 4}, init),
             oracle::kspace_power(1.0, pi / 4, pi / 4, 0, 6, v)) < 1e-12);
  CHECK(diff(spinor_at(0.7, 7, {pi / 2, pi / 3}, init),
             oracle::kspace_power(0.7, pi / 2, pi / 3, 0, 7, v)) < 1e-12);

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int n = 0; n < 200; ++n) {
    const int par = n % 2;
    const auto s = fourier_initial(testing::random_state(rng, par));
    const double k = u(rng), t0 = u(rng), t1 = u(rng);
    const long t = n % 23;
    const auto got = try_spinor_at(k, t, CoinTrig({t0, t1}), s);
    if (!got)
      continue;
    REQUIRE(diff(*got, oracle::kspace_power(k, t0, t1, par, t, {s(k).a, s(k).b})) < 1e-11);
  }
}

TEST_CASE("inverse transform") {
  const double r = 1 / std::numbers::sqrt2;
  const MomentumSpinor constant = [&](double) { return std::optional<Spinor>({r, 0.0}); };
  CHECK(std::abs(inverse_fourier(constant, 0).a - r) < 1e-12);
  CHECK(std::abs(inverse_fourier(constant, 3).a) < 1e-12);
}

TEST_CASE("k-space route reproduces the lattice") {
  const auto init = initial_local(testing::plus_i);
  const auto lattice = evolve(init, {pi / 4, pi / 6}, 10);
  const auto psi = propagated({pi / 4, pi / 6}, fourier_initial(init), 10);
  for (long x = -12; x <= 12; ++x) {
    const auto s = inverse_fourier(psi, x);
    REQUIRE(std::abs(s.a - lattice.at(x).a) < 1e-8);
    REQUIRE(std::abs(s.b - lattice.at(x).b) < 1e-8);
  }
}

TEST_CASE("Parseval") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(0.05, pi - 0.05);
  for (int n = 0; n < 10; ++n) {
    const auto s = fourier_initial(testing::random_state(rng, n % 2));
    const CoinPair coins{u(rng), u(rng)};
    const long t = 5 * n + 3;
    const auto psi = propagated(coins, s, t);
    const Complex total = integrate_periodic([&](double k) -> std::optional<Complex> {
      const auto v = psi(k);
      if (!v)
        return std::nullopt;
      return v->norm2();
    });
    REQUIRE(std::abs(total - 1.0) < 1e-8);
  }
}
