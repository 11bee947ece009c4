#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/kspace.hpp"
#include "qwalk/quadrature.hpp"

namespace qwalk {

/// Long-time limit of the reduced coin density with the lambda^{2t}
/// cross terms dropped.
struct AsymptoticResult {
  CoinDensity density;
  double entropy = 0.0;
  Parity step_parity = Parity::even;
  /// Parity of the initial support, which selects the u or u' branch.
  Parity branch = Parity::even;
  double residual = 0.0;
  std::size_t skipped_nodes = 0;
  /// |alpha + gamma - 1| with gamma integrated from its own integrand.
  double trace_defect = 0.0;
};

/// Tolerance on the trace self-check before the result is rejected.
inline constexpr double trace_check_tolerance = 1e-8;

/// Integrands (alpha, beta, gamma) of the surviving time-independent terms at
/// one momentum; nullopt at a degenerate momentum.
std::optional<std::array<Complex, 3>> asymptotic_integrands(double k, const CoinTrig &trig,
                                                           const LaurentSpinor &init,
                                                           Parity step_parity);

/// Throws DegenerateParameters on fully degenerate coins or non-isolated
/// degenerate momenta, ConvergenceError when refinement fails.
AsymptoticResult asymptotic_density(const CoinPair &coins, const LaurentSpinor &init,
                                    Parity step_parity, const QuadratureSpec &spec = {},
                                    Execution exec = Execution::parallel);

} // namespace qwalk
