#include "qwalk/asymptotics.hpp"
#include "qwalk/error.hpp"

#include <cmath>

namespace qwalk {

std::optional<std::array<Complex, 3>> asymptotic_integrands(double k, const CoinTrig &trig,
                                                           const LaurentSpinor &init,
                                                           Parity step_parity) {
  const auto sys = try_eigen_system(k, trig, init.parity(), init(k));
  if (!sys)
    return std::nullopt;
  const EigenSystem &e = *sys;

  const double pf = std::norm(e.f) / (e.n0 * e.n0);
  const double pg = std::norm(e.g) / (e.n1 * e.n1);
  const double plus = pf + pg;
  const double minus = pf - pg;
  const Complex &u = e.u, &v = e.v, &w = e.w;

  if (step_parity == Parity::even) {
    const Complex alpha = std::norm(u) * plus;
    const Complex beta = u * std::conj(v) * plus + u * std::conj(w) * minus;
    const Complex gamma = std::norm(v + w) * pf + std::norm(v - w) * pg;
    return std::array<Complex, 3>{alpha, beta, gamma};
  }

  // Odd steps end with the coin of the initial support's parity.
  const bool even_support = init.parity() == Parity::even;
  const double c = even_support ? trig.c0 : trig.c1;
  const double s = even_support ? trig.s0 : trig.s1;
  const double u2 = std::norm(u), v2 = std::norm(v), w2 = std::norm(w);

  const Complex alpha =
      (c * c * u2 + c * s * (u * std::conj(v) + std::conj(u) * v) + s * s * (v2 + w2)) * plus +
      (c * s * (u * std::conj(w) + std::conj(u) * w) - 2.0 * s * s * v * w) * minus;
  const Complex beta =
      std::polar(1.0, 2.0 * k) *
      ((c * s * (u2 - v2 - w2) - c * c * u * std::conj(v) + s * s * std::conj(u) * v) * plus +
       (-c * c * u * std::conj(w) + s * s * std::conj(u) * w + 2.0 * c * s * v * w) * minus);
  const Complex gamma = std::norm(s * u - c * (v + w)) * pf + std::norm(s * u - c * (v - w)) * pg;
  return std::array<Complex, 3>{alpha, beta, gamma};
}

AsymptoticResult asymptotic_density(const CoinPair &coins, const LaurentSpinor &init,
                                    Parity step_parity, const QuadratureSpec &spec,
                                    Execution exec) {
  if (fully_degenerate(coins))
    throw DegenerateParameters("coin angles are on a fully degenerate line; use the closed form");

  const CoinTrig trig(coins);
  const NodeFunction f = [&](double k, std::span<Complex> out) {
    const auto v = asymptotic_integrands(k, trig, init, step_parity);
    if (!v)
      return false;
    std::copy(v->begin(), v->end(), out.begin());
    return true;
  };
  const QuadratureResult q = integrate_periodic(f, 3, spec, exec);

  AsymptoticResult r;
  r.step_parity = step_parity;
  r.branch = init.parity();
  r.residual = q.residual;
  r.skipped_nodes = q.skipped_nodes;
  const double alpha = q.values[0].real();
  const double gamma = q.values[2].real();
  r.trace_defect = std::abs(alpha + gamma - 1.0);
  if (r.trace_defect > trace_check_tolerance)
    throw NonPhysicalDensity("asymptotic trace check failed: alpha + gamma - 1 = " +
                             std::to_string(alpha + gamma - 1.0));
  r.density = {alpha, q.values[1], 1.0 - alpha};
  check_density(r.density);
  r.entropy = entropy(r.density);
  return r;
}

} // namespace qwalk
