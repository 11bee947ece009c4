#include "helpers.hpp"

#include "qwalk/asymptotics.hpp"
#include "qwalk/kspace.hpp"
#include "qwalk/report.hpp"
#include "qwalk/sweep.hpp"

#include <catch_amalgamated.hpp>

#include <sstream>

using namespace qwalk;
using Catch::Matchers::WithinAbs;

TEST_CASE("axis points") {
  const AxisRange r{0.0, pi, 41};
  CHECK(r.at(0) == 0.0);
  CHECK(r.at(40) == pi);
  CHECK_THAT(r.at(20), WithinAbs(pi / 2, 1e-15));
}

TEST_CASE("sweep cells equal pointwise calls") {
  const auto init = initial_local(testing::plus_i);
  const SweepGrid g{{0.2, 1.2, 3}, {0.2, 1.2, 3}};
  const auto rows = sweep(g, init, Parity::odd);
  REQUIRE(rows.size() == 9);
  const auto k = fourier_initial(init);
  for (const auto &row : rows) {
    CHECK(row.error.empty());
    CHECK(row.coins.theta0 == g.theta0.at(row.i));
    CHECK(row.coins.theta1 == g.theta1.at(row.j));
    const auto direct = asymptotic_density(row.coins, k, Parity::odd, {}, Execution::serial);
    CHECK(row.value.entropy == direct.entropy);
    CHECK(row.value.source == Source::quadrature);
  }
  CHECK(rows[1].i == 0);
  CHECK(rows[1].j == 1);
}

TEST_CASE("degenerate cells fall back") {
  const auto init = initial_local(testing::plus_i);
  const auto x = asymptotic_entanglement({pi / 2, pi / 2}, init, Parity::odd);
  CHECK(x.source == Source::closed_form);
  CHECK_THAT(x.entropy, WithinAbs(1.0, 1e-12));
  CHECK(std::abs(x.density.beta) < 1e-12);
  const auto z = asymptotic_entanglement({0.0, 0.0}, init, Parity::even);
  CHECK(z.source == Source::simulation);
  CHECK_THAT(z.entropy, WithinAbs(1.0, 1e-12));
}

TEST_CASE("serial and parallel sweeps write identical CSV") {
  const auto init = initial_nonlocal(+1, testing::plus_i);
  const SweepGrid g{{0.0, pi, 6}, {0.0, pi, 5}};
  std::ostringstream a, b;
  const auto p = sweep(g, init, Parity::even, {}, Execution::parallel);
  const auto s = sweep(g, init, Parity::even, {}, Execution::serial);
  write_sweep_csv(a, p);
  write_sweep_csv(b, s);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("theta0,theta1,parity,s_e,alpha,re_beta,im_beta,source,error\n", 0) == 0);
}

TEST_CASE("sweep refuses mixed parity") {
  const WalkState mixed({{0, {1.0, 0.0}}, {1, {1.0, 0.0}}});
  CHECK_THROWS(sweep({{0.2, 1.0, 2}, {0.2, 1.0, 2}}, mixed, Parity::even));
}

TEST_CASE("number formatting") {
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(0.8112781244591328) == "0.811278124459");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("heatmap output is a complete SVG") {
  const auto init = initial_local(testing::plus_i);
  const auto rows = sweep({{0.2, 1.2, 3}, {0.2, 1.2, 4}}, init, Parity::even);
  std::ostringstream svg;
  write_heatmap_svg(svg, rows, "test");
  const std::string s = svg.str();
  CHECK(s.rfind("<svg", 0) == 0);
  CHECK(s.find("</svg>") != std::string::npos);
  CHECK(s.find("theta0") != std::string::npos);
}
