#include "qwalk/error.hpp"
#include "qwalk/quadrature.hpp"

#include <catch_amalgamated.hpp>

#include <cstring>

using namespace qwalk;

TEST_CASE("trapezoid averages of simple integrands") {
  CHECK(std::abs(integrate_periodic([](double) { return std::optional<Complex>(1.0); }) - 1.0) < 1e-15);
  CHECK(std::abs(integrate_periodic([](double k) {
          return std::optional<Complex>(std::polar(1.0, 2 * k));
        })) < 1e-14);
  CHECK(std::abs(integrate_periodic([](double k) {
          return std::optional<Complex>(std::cos(k) * std::cos(k));
        }) - 0.5) < 1e-15);
}

TEST_CASE("grid layout") {
  CHECK(grid_node(0, 64, false) == -pi);
  CHECK(std::abs(grid_node(0, 64, true) - (-pi + pi / 64)) < 1e-15);
  for (std::size_t j = 0; j < 64; ++j)
    REQUIRE(grid_node(j, 64, true) != 0.0);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS((QuadratureSpec{.nodes = 32}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuadratureSpec{.nodes = 101}.validate()), std::invalid_argument);
  CHECK_THROWS_AS((QuadratureSpec{.refinement = 1}.validate()), std::invalid_argument);
  CHECK_NOTHROW(QuadratureSpec{}.validate());
}

TEST_CASE("isolated flagged nodes are patched, adjacent ones refused") {
  const std::size_t n = 64;
  const double bad = grid_node(10, n, true);
  const NodeFunction one_hole = [&](double k, std::span<Complex> out) {
    out[0] = 1.0;
    return k != bad;
  };
  const auto avg = grid_average_serial(one_hole, 1, n, true);
  CHECK(avg.skipped_nodes == 1);
  CHECK(avg.values[0] == Complex(1.0));

  const double bad2 = grid_node(11, n, true);
  const NodeFunction two_holes = [&](double k, std::span<Complex> out) {
    out[0] = 1.0;
    return k != bad && k != bad2;
  };
  CHECK_THROWS_AS(grid_average_serial(two_holes, 1, n, true), DegenerateParameters);
}

TEST_CASE("non-converging integrands raise") {
  // A mode that aliases differently on every refinement.
  QuadratureSpec spec{.nodes = 64, .max_refinements = 1};
  const auto f = [](double k) { return std::optional<Complex>(std::polar(1.0, 128.0 * k)); };
  CHECK_THROWS_AS(integrate_periodic(f, spec), ConvergenceError);
}

TEST_CASE("parallel and serial grids agree bit for bit") {
  const NodeFunction f = [](double k, std::span<Complex> out) {
    out[0] = std::exp(Complex(std::sin(3 * k), std::cos(k)));
    out[1] = 1.0 / (1.3 + std::cos(k));
    return true;
  };
  for (std::size_t n : {64u, 1000u, 4096u}) {
    const auto p = grid_average_parallel(f, 2, n, true);
    const auto s = grid_average_serial(f, 2, n, true);
    REQUIRE(std::memcmp(p.values.data(), s.values.data(), 2 * sizeof(Complex)) == 0);
  }
}
