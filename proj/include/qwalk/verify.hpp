#pragma once

#include "qwalk/asymptotics.hpp"
#include "qwalk/coin.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/kspace.hpp"
#include "qwalk/walk_state.hpp"

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace qwalk {

/// Steps t_min..t_max (inclusive) of the given parity.
struct AverageWindow {
  long t_min = 400;
  long t_max = 500;
  Parity parity = Parity::even;

  std::size_t included_steps() const;
  /// Throws std::invalid_argument unless 0 <= t_min <= t_max and at least
  /// `min_steps` steps are included.
  void validate(std::size_t min_steps = 1) const;
};

/// Minimum number of averaged steps for a window used in route comparison.
inline constexpr std::size_t min_verification_steps = 20;

/// Cesaro mean of reduced_density(evolve(init, t)) over the window.
CoinDensity time_averaged_density(const CoinPair &coins, const WalkState &init,
                                  const AverageWindow &window);

/// Simulated vs quadrature asymptotic density at one parameter point.
struct ComparisonReport {
  CoinPair coins;
  Parity step_parity = Parity::even;
  Parity branch = Parity::even;
  std::string routes;
  CoinDensity simulated;
  CoinDensity quadrature;
  double entropy_simulated = 0.0;
  double entropy_quadrature = 0.0;
  double max_density_diff = 0.0;
  double entropy_diff = 0.0;
};

ComparisonReport compare_routes(const CoinPair &coins, const WalkState &init,
                                Parity step_parity, const AverageWindow &window,
                                const QuadratureSpec &spec = {});

/// |(1/2pi) integral of lambda(k)^n weight(k) dk| for each n.
std::vector<double> fourier_mode_magnitudes(const std::function<Complex(double)> &lambda,
                                            const std::function<Complex(double)> &weight,
                                            std::span<const long> exponents,
                                            const QuadratureSpec &spec = {});

/// Magnitude of the dropped alpha(2t) cross term
///   integral dk/2pi lambda0^{2t} F G* |u|^2 / (N0 N1)
/// for every t in t_list.
std::vector<double> riemann_lebesgue_decay(const CoinPair &coins, const LaurentSpinor &init,
                                           std::span<const long> t_list,
                                           const QuadratureSpec &spec = {});

/// Same for the beta(2t) cross term
///   integral dk/2pi lambda0^{2t} u F conj((v - w) G) / (N0 N1).
/// For the (1, i)/sqrt2 coin state alpha(t) = 1/2 at every step and the alpha
/// term vanishes identically, so this is the one that shows the decay.
std::vector<double> riemann_lebesgue_decay_beta(const CoinPair &coins, const LaurentSpinor &init,
                                                std::span<const long> t_list,
                                                const QuadratureSpec &spec = {});

/// Residuals below this are quadrature round-off of a vanishing integral.
inline constexpr double residual_noise_floor = 1e-10;

/// Max over the second half of `residuals` strictly below the max over the
/// first half, or every residual below the noise floor.
bool envelope_decreases(std::span<const double> residuals);

/// One point of a verification grid with both routes and the decay check.
struct VerificationEntry {
  std::string init_label;
  ComparisonReport comparison;
  std::vector<double> decay;
  std::vector<double> beta_decay;
  bool decays = false;
};

struct NamedState {
  std::string label;
  WalkState state;
};

/// Every (theta0, theta1, init, step parity) combination; OpenMP over points.
std::vector<VerificationEntry> verify_grid(std::span<const double> theta0s,
                                           std::span<const double> theta1s,
                                           std::span<const NamedState> inits,
                                           const AverageWindow &window,
                                           std::span<const long> decay_steps,
                                           const QuadratureSpec &spec = {},
                                           Execution exec = Execution::parallel);

} // namespace qwalk
