#include "qwalk/entanglement.hpp"
#include "qwalk/error.hpp"

#include <cmath>
#include <string>

namespace qwalk {

void check_density(const CoinDensity &rho) {
  if (!std::isfinite(rho.alpha) || !std::isfinite(rho.gamma) || !std::isfinite(rho.beta.real()) ||
      !std::isfinite(rho.beta.imag()))
    throw NonPhysicalDensity("density has non-finite entries");
  if (std::abs(rho.trace() - 1.0) > 1e-10)
    throw NonPhysicalDensity("density trace " + std::to_string(rho.trace()) + " != 1");
  if (rho.determinant() < -1e-12)
    throw NonPhysicalDensity("density is not positive semidefinite");
}

CoinDensity reduced_density(const WalkState &state) {
  CoinDensity rho{0.0, {}, 0.0};
  for (const auto &[x, s] : state.amplitudes()) {
    rho.alpha += std::norm(s.a);
    rho.beta += s.a * std::conj(s.b);
    rho.gamma += std::norm(s.b);
  }
  return rho;
}

DensityEigenvalues density_eigenvalues(const CoinDensity &rho) {
  const double disc = 1.0 + 4.0 * (std::norm(rho.beta) - rho.alpha * rho.gamma);
  if (!(disc <= 1.0 + 1e-9))
    throw NonPhysicalDensity("eigenvalue discriminant " + std::to_string(disc) + " exceeds 1");
  double r1 = 0.5 * (1.0 + std::sqrt(std::max(disc, 0.0)));
  if (r1 > 1.0 + 1e-12)
    throw NonPhysicalDensity("eigenvalue above 1");
  r1 = std::min(r1, 1.0);
  // r2 is formed from r1 so the pair sums to 1 exactly.
  return {r1, 1.0 - r1};
}

double binary_entropy(double r1, double r2) {
  double s = 0.0;
  for (const double r : {r1, r2})
    if (r >= 1e-300)
      s -= r * std::log2(r);
  return std::clamp(s, 0.0, 1.0);
}

double entropy(const CoinDensity &rho) {
  const auto [r1, r2] = density_eigenvalues(rho);
  return binary_entropy(r1, r2);
}

} // namespace qwalk
