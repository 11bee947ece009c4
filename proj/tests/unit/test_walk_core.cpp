#include "helpers.hpp"

#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"
#include "qwalk/walk_state.hpp"

#include <catch_amalgamated.hpp>

using namespace qwalk;
using Catch::Matchers::WithinAbs;

namespace {

void require_spinor(const Spinor &got, Complex a, Complex b, double tol = 1e-15) {
  CHECK(std::abs(got.a - a) < tol);
  CHECK(std::abs(got.b - b) < tol);
}

} // namespace

TEST_CASE("make_coin special angles") {
  const double r = 1 / std::numbers::sqrt2;
  const auto h = make_coin(pi / 4);
  CHECK_THAT(h[0][0], WithinAbs(r, 1e-15));
  CHECK_THAT(h[0][1], WithinAbs(r, 1e-15));
  CHECK_THAT(h[1][1], WithinAbs(-r, 1e-15));
  const auto x = make_coin(pi / 2);
  CHECK_THAT(x[0][0], WithinAbs(0, 1e-15));
  CHECK(x[0][1] == 1.0);
  const auto z = make_coin(0);
  CHECK(z == RealMatrix2{{{1, 0}, {0, -1}}});
}

TEST_CASE("coins are orthogonal") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-2 * pi, 2 * pi);
  for (int n = 0; n < 100; ++n) {
    const auto m = make_coin(angle(rng));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const double dot = m[i][0] * m[j][0] + m[i][1] * m[j][1];
        REQUIRE_THAT(dot, WithinAbs(i == j ? 1.0 : 0.0, 1e-15));
      }
  }
}

TEST_CASE("initial states") {
  const double r = 1 / std::numbers::sqrt2;
  SECTION("local") {
    const auto s = initial_local(testing::plus_i);
    REQUIRE(s.amplitudes().size() == 1);
    require_spinor(s.at(0), r, Complex(0, r));
    CHECK(initial_local({1.0, 0.0}).at(0) == Spinor{1.0, 0.0});
    CHECK(initial_local({0.6, Complex(0, 0.8)}).at(0) == Spinor{0.6, Complex(0, 0.8)});
    CHECK_THROWS_AS(initial_local({1.0, 1.0}), InvalidState);
    CHECK_THROWS_AS(initial_local({0.0, 0.0}), InvalidState);
  }
  SECTION("nonlocal") {
    const auto p = initial_nonlocal(+1, testing::plus_i);
    require_spinor(p.at(-1), 0.5, Complex(0, 0.5));
    require_spinor(p.at(1), 0.5, Complex(0, 0.5));
    const auto m = initial_nonlocal(-1, testing::plus_i);
    require_spinor(m.at(-1), 0.5, Complex(0, 0.5));
    require_spinor(m.at(1), -0.5, Complex(0, -0.5));
    const auto z = initial_nonlocal(+1, {1.0, 0.0});
    require_spinor(z.at(-1), r, 0.0);
    require_spinor(z.at(1), r, 0.0);
    CHECK_THROWS_AS(initial_nonlocal(0, testing::plus_i), std::invalid_argument);
  }
}

TEST_CASE("single steps") {
  const double r = 1 / std::numbers::sqrt2;
  const auto a = step(WalkState({{0, {1.0, 0.0}}}), {0.0, 0.3});
  CHECK(support(a).min == -1);
  CHECK(support(a).max == -1);
  require_spinor(a.at(-1), 1.0, 0.0);
  CHECK(a.step() == 1);

  const auto b = step(WalkState({{0, {0.0, 1.0}}}), {pi / 4, 0.3});
  require_spinor(b.at(-1), r, 0.0);
  require_spinor(b.at(1), 0.0, -r);
}

TEST_CASE("support and parity queries") {
  CHECK(support(WalkState({{0, {1.0, 0.0}}})).min == 0);
  CHECK_THROWS_AS(support(WalkState()), InvalidState);
  CHECK_THROWS_AS(support(WalkState({{3, {0.0, 0.0}}})), InvalidState);
  CHECK(support_parity(WalkState({{1, {1.0, 0.0}}, {3, {0.0, 1.0}}})) == Parity::odd);
  CHECK_FALSE(support_parity(WalkState({{0, {1.0, 0.0}}, {1, {0.0, 1.0}}})).has_value());
  // A site holding an exact zero does not count towards the parity.
  CHECK(support_parity(WalkState({{0, {1.0, 0.0}}, {1, {0.0, 0.0}}})) == Parity::even);
  // Tiny but nonzero probability is below the occupied threshold.
  const auto s = WalkState({{0, {1.0, 0.0}}, {4, {1e-9, 0.0}}});
  CHECK(support(s).max == 0);
}

TEST_CASE("Hadamard walk matches the dense oracle") {
  const auto init = initial_local(testing::plus_i);
  const auto s = evolve(init, {pi / 4, pi / 4}, 20);
  const auto d = oracle::dense_run(pi / 4, pi / 4, testing::to_oracle(init), 20);
  for (long x = -22; x <= 22; ++x) {
    const double p = std::norm(s.at(x).a) + std::norm(s.at(x).b);
    REQUIRE_THAT(p, WithinAbs(d.probability(x), 1e-12));
  }
}

TEST_CASE("random walks match the dense oracle amplitude by amplitude") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0, pi);
  for (int n = 0; n < 20; ++n) {
    const double t0 = angle(rng), t1 = angle(rng);
    const auto init = testing::random_state(rng, n % 2);
    const auto s = evolve(init, {t0, t1}, 60);
    const auto d = oracle::dense_run(t0, t1, testing::to_oracle(init), 60);
    for (long x = -d.radius; x <= d.radius; ++x) {
      REQUIRE(std::abs(s.at(x).a - d.left(x)) < 1e-12);
      REQUIRE(std::abs(s.at(x).b - d.right(x)) < 1e-12);
    }
  }
}

TEST_CASE("norm is conserved") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> angle(0, pi);
  for (int n = 0; n < 4; ++n) {
    const CoinPair coins{angle(rng), angle(rng)};
    WalkState s = initial_local(testing::random_unit_spinor(rng));
    for (long t = 1; t <= 2000; ++t) {
      s = step(s, coins);
      if (t % 250 == 0)
        REQUIRE_THAT(s.norm2(), WithinAbs(1.0, 1e-12));
    }
  }
}

TEST_CASE("occupied sites share the parity of x0 + t") {
  std::mt19937_64 rng(5);
  for (int start : {0, 1}) {
    WalkState s = testing::random_state(rng, start);
    for (long t = 1; t <= 40; ++t) {
      s = step(s, {0.4, 1.1});
      for (const auto &[x, sp] : s.amplitudes())
        if (sp.norm2() > occupied_threshold)
          REQUIRE(parity_of(x) == parity_of(start + t));
    }
  }
}

TEST_CASE("bounded walks stay bounded") {
  const auto bound = [](WalkState s, CoinPair coins) {
    long lo = 0, hi = 0;
    for (long t = 1; t <= 1000; ++t) {
      s = step(s, coins);
      const auto sup = support(s);
      lo = std::min(lo, sup.min);
      hi = std::max(hi, sup.max);
    }
    return std::pair{lo, hi};
  };
  const auto local = initial_local(testing::plus_i);
  const auto nonlocal = initial_nonlocal(+1, testing::plus_i);
  for (double free : {0.3, 1.0, pi / 4}) {
    CHECK(bound(local, {pi / 2, free}) == std::pair{-2L, 2L});
    CHECK(bound(local, {free, pi / 2}) == std::pair{-1L, 1L});
    CHECK(bound(nonlocal, {free, pi / 2}) == std::pair{-3L, 3L});
    // The nonlocal theta0 = pi/2 walk reaches +-2 after odd steps.
    CHECK(bound(nonlocal, {pi / 2, free}) == std::pair{-2L, 2L});
  }
}

TEST_CASE("shifting an angle by pi only flips a global sign") {
  std::mt19937_64 rng(9);
  const auto init = initial_local(testing::random_unit_spinor(rng));
  const auto base = evolve(init, {0.7, 1.3}, 31);
  for (const CoinPair shifted : {CoinPair{0.7 + pi, 1.3}, CoinPair{0.7, 1.3 + pi}}) {
    const auto s = evolve(init, shifted, 31);
    for (const auto &[x, sp] : base.amplitudes())
      REQUIRE_THAT(s.at(x).norm2(), WithinAbs(sp.norm2(), 1e-12));
  }
}
