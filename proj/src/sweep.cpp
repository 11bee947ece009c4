#include "qwalk/sweep.hpp"
#include "qwalk/closed_forms.hpp"
#include "qwalk/error.hpp"

namespace qwalk {

const char *to_string(Source s) {
  switch (s) {
  case Source::quadrature: return "quadrature";
  case Source::closed_form: return "closed_form";
  case Source::simulation: return "simulation";
  }
  return "?";
}

AsymptoticValue asymptotic_entanglement(const CoinPair &coins, const WalkState &init,
                                        Parity step_parity, const QuadratureSpec &spec,
                                        Execution exec, const AverageWindow &fallback) {
  const LaurentSpinor k_init = fourier_initial(init);
  try {
    const AsymptoticResult r = asymptotic_density(coins, k_init, step_parity, spec, exec);
    return {r.density, r.entropy, Source::quadrature, r.residual, r.skipped_nodes};
  } catch (const DegenerateParameters &) {
    // handled below
  }

  AsymptoticValue v;
  if (const auto which = match_bounded_case(coins, init)) {
    v.density = averaged_closed_density(*which, step_parity);
    v.source = Source::closed_form;
  } else {
    AverageWindow w = fallback;
    w.parity = step_parity;
    w.validate(min_verification_steps);
    v.density = time_averaged_density(coins, init, w);
    check_density(v.density);
    v.source = Source::simulation;
  }
  v.entropy = entropy(v.density);
  return v;
}

double AxisRange::at(std::size_t i) const {
  if (points < 2)
    throw std::invalid_argument("sweep axis needs at least 2 points");
  if (i + 1 == points)
    return hi;
  return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(points - 1);
}

std::vector<SweepRow> sweep(const SweepGrid &grid, const WalkState &init, Parity step_parity,
                            const QuadratureSpec &spec, Execution exec) {
  if (grid.theta0.points < 2 || grid.theta1.points < 2)
    throw std::invalid_argument("sweep resolution must be at least 2 per axis");
  spec.validate();
  // Parity problems are global, so report them before touching any cell.
  (void)fourier_initial(init);

  const std::size_t n0 = grid.theta0.points;
  const std::size_t n1 = grid.theta1.points;
  std::vector<SweepRow> rows(n0 * n1);

  const auto cell = [&](std::size_t idx) {
    SweepRow &row = rows[idx];
    row.i = idx / n1;
    row.j = idx % n1;
    row.coins = {grid.theta0.at(row.i), grid.theta1.at(row.j)};
    row.step_parity = step_parity;
    try {
      row.value = asymptotic_entanglement(row.coins, init, step_parity, spec, Execution::serial);
    } catch (const std::exception &e) {
      row.error = e.what();
    }
  };

  if (exec == Execution::parallel) {
    const long n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < n; ++idx)
      cell(static_cast<std::size_t>(idx));
  } else {
    for (std::size_t idx = 0; idx < rows.size(); ++idx)
      cell(idx);
  }
  return rows;
}

} // namespace qwalk
