#include "qwalk/verify.hpp"
#include "qwalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>

namespace qwalk {

std::size_t AverageWindow::included_steps() const {
  if (t_max < t_min || t_min < 0)
    return 0;
  std::size_t n = 0;
  for (long t = t_min; t <= t_max; ++t)
    if (parity_of(t) == parity)
      ++n;
  return n;
}

void AverageWindow::validate(std::size_t min_steps) const {
  if (t_min < 0 || t_max < t_min)
    throw std::invalid_argument("average window needs 0 <= t_min <= t_max");
  if (included_steps() < min_steps)
    throw std::invalid_argument("average window [" + std::to_string(t_min) + ", " +
                                std::to_string(t_max) + "] includes fewer than " +
                                std::to_string(min_steps) + " " + to_string(parity) + " steps");
}

CoinDensity time_averaged_density(const CoinPair &coins, const WalkState &init,
                                  const AverageWindow &window) {
  window.validate(1);
  CoinDensity sum{0.0, {}, 0.0};
  std::size_t count = 0;
  WalkState state = init;
  for (long t = 0; t <= window.t_max; ++t) {
    if (t >= window.t_min && parity_of(t) == window.parity) {
      const CoinDensity rho = reduced_density(state);
      sum.alpha += rho.alpha;
      sum.beta += rho.beta;
      sum.gamma += rho.gamma;
      ++count;
    }
    if (t < window.t_max)
      state = step(state, coins);
  }
  const double inv = 1.0 / static_cast<double>(count);
  return {sum.alpha * inv, sum.beta * inv, sum.gamma * inv};
}

ComparisonReport compare_routes(const CoinPair &coins, const WalkState &init,
                                Parity step_parity, const AverageWindow &window,
                                const QuadratureSpec &spec) {
  AverageWindow w = window;
  w.parity = step_parity;
  w.validate(min_verification_steps);

  const LaurentSpinor k_init = fourier_initial(init);
  ComparisonReport r;
  r.coins = coins;
  r.step_parity = step_parity;
  r.branch = k_init.parity();
  r.routes = "simulation[" + std::to_string(w.t_min) + "," + std::to_string(w.t_max) +
             "] vs quadrature";
  r.simulated = time_averaged_density(coins, init, w);
  check_density(r.simulated);
  const AsymptoticResult q = asymptotic_density(coins, k_init, step_parity, spec, Execution::serial);
  r.quadrature = q.density;
  r.entropy_simulated = entropy(r.simulated);
  r.entropy_quadrature = q.entropy;
  r.max_density_diff = std::max({std::abs(r.simulated.alpha - r.quadrature.alpha),
                                 std::abs(r.simulated.beta - r.quadrature.beta),
                                 std::abs(r.simulated.gamma - r.quadrature.gamma)});
  r.entropy_diff = std::abs(r.entropy_simulated - r.entropy_quadrature);
  return r;
}

namespace {

// Enough nodes to resolve an integrand oscillating like lambda^n. arccos in
// arg(lambda) has square-root branch points where w = 0, so convergence is
// only algebraic for the oscillating modes (slowest on the diagonal, where
// the gap closes at k = 0). Two digits are plenty to judge decay.
QuadratureSpec resolved_spec(const QuadratureSpec &spec, long n) {
  QuadratureSpec s = spec;
  const auto needed = static_cast<std::size_t>(16 * std::max(n, 1L));
  s.nodes = std::max(spec.nodes, needed + needed % 2);
  s.relative_tolerance = std::max(spec.relative_tolerance, 1e-2);
  s.tolerance = std::min(spec.tolerance, residual_noise_floor);
  return s;
}

} // namespace

std::vector<double> fourier_mode_magnitudes(const std::function<Complex(double)> &lambda,
                                            const std::function<Complex(double)> &weight,
                                            std::span<const long> exponents,
                                            const QuadratureSpec &spec) {
  std::vector<double> out;
  out.reserve(exponents.size());
  for (const long n : exponents) {
    const auto f = [&](double k) -> std::optional<Complex> {
      return std::pow(lambda(k), static_cast<double>(n)) * weight(k);
    };
    out.push_back(std::abs(integrate_periodic(f, resolved_spec(spec, n), Execution::serial)));
  }
  return out;
}

namespace {

// |integral dk/2pi lambda0^{2t} term(k)| for every t in t_list.
template <typename Term>
std::vector<double> dropped_mode(const CoinPair &coins, const LaurentSpinor &init,
                                 std::span<const long> t_list, const QuadratureSpec &spec,
                                 Term term) {
  if (fully_degenerate(coins))
    throw DegenerateParameters("coin angles are on a fully degenerate line");
  const CoinTrig trig(coins);
  std::vector<double> out;
  out.reserve(t_list.size());
  for (const long t : t_list) {
    const double power = 2.0 * static_cast<double>(t);
    const auto f = [&](double k) -> std::optional<Complex> {
      const auto e = try_eigen_system(k, trig, init.parity(), init(k));
      if (!e)
        return std::nullopt;
      return std::polar(1.0, power * std::arg(e->lambda0)) * term(*e);
    };
    out.push_back(std::abs(integrate_periodic(f, resolved_spec(spec, 2 * t), Execution::serial)));
  }
  return out;
}

} // namespace

std::vector<double> riemann_lebesgue_decay(const CoinPair &coins, const LaurentSpinor &init,
                                           std::span<const long> t_list,
                                           const QuadratureSpec &spec) {
  return dropped_mode(coins, init, t_list, spec, [](const EigenSystem &e) {
    return e.f * std::conj(e.g) * std::norm(e.u) / (e.n0 * e.n1);
  });
}

std::vector<double> riemann_lebesgue_decay_beta(const CoinPair &coins, const LaurentSpinor &init,
                                                std::span<const long> t_list,
                                                const QuadratureSpec &spec) {
  return dropped_mode(coins, init, t_list, spec, [](const EigenSystem &e) {
    return e.u * e.f * std::conj((e.v - e.w) * e.g) / (e.n0 * e.n1);
  });
}

bool envelope_decreases(std::span<const double> residuals) {
  if (residuals.size() < 2)
    throw std::invalid_argument("envelope check needs at least two residuals");
  if (std::all_of(residuals.begin(), residuals.end(),
                  [](double r) { return r < residual_noise_floor; }))
    return true;
  const std::size_t half = residuals.size() / 2;
  const double early = *std::max_element(residuals.begin(), residuals.begin() + half);
  const double late = *std::max_element(residuals.end() - half, residuals.end());
  return late < early;
}

std::vector<VerificationEntry> verify_grid(std::span<const double> theta0s,
                                           std::span<const double> theta1s,
                                           std::span<const NamedState> inits,
                                           const AverageWindow &window,
                                           std::span<const long> decay_steps,
                                           const QuadratureSpec &spec, Execution exec) {
  constexpr Parity parities[] = {Parity::even, Parity::odd};
  const std::size_t total = theta0s.size() * theta1s.size() * inits.size() * 2;
  std::vector<VerificationEntry> entries(total);
  std::vector<std::exception_ptr> errors(total);

  const auto compute = [&](std::size_t idx) {
    std::size_t rest = idx;
    const Parity parity = parities[rest % 2];
    rest /= 2;
    const NamedState &init = inits[rest % inits.size()];
    rest /= inits.size();
    const double theta1 = theta1s[rest % theta1s.size()];
    const double theta0 = theta0s[rest / theta1s.size()];
    try {
      VerificationEntry &e = entries[idx];
      e.init_label = init.label;
      e.comparison = compare_routes({theta0, theta1}, init.state, parity, window, spec);
      if (!decay_steps.empty()) {
        e.decay = riemann_lebesgue_decay({theta0, theta1}, fourier_initial(init.state),
                                         decay_steps, spec);
        e.beta_decay = riemann_lebesgue_decay_beta({theta0, theta1}, fourier_initial(init.state),
                                                   decay_steps, spec);
        e.decays = e.decay.size() >= 2 && envelope_decreases(e.decay) &&
                   envelope_decreases(e.beta_decay);
      }
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  };

  if (exec == Execution::parallel) {
    const long n = static_cast<long>(total);
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < n; ++idx)
      compute(static_cast<std::size_t>(idx));
  } else {
    for (std::size_t idx = 0; idx < total; ++idx)
      compute(idx);
  }
  for (const auto &err : errors)
    if (err)
      std::rethrow_exception(err);
  return entries;
}

} // namespace qwalk
