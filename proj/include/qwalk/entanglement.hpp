#pragma once

#include "qwalk/types.hpp"
#include "qwalk/walk_state.hpp"

namespace qwalk {

/// Reduced coin density operator [[alpha, beta], [conj(beta), gamma]].
struct CoinDensity {
  double alpha = 1.0;
  Complex beta{};
  double gamma = 0.0;

  double trace() const { return alpha + gamma; }
  double determinant() const { return alpha * gamma - std::norm(beta); }
};

struct DensityEigenvalues {
  double r1;
  double r2;
};

/// Throws NonPhysicalDensity unless the trace is 1 within 1e-10 and the
/// determinant is >= -1e-12.
void check_density(const CoinDensity &rho);

/// alpha = sum |a|^2, beta = sum a conj(b), gamma = sum |b|^2.
CoinDensity reduced_density(const WalkState &state);

/// r1,2 = (1 +- sqrt(1 + 4(|beta|^2 - alpha gamma)))/2, clamped to [0,1].
/// Throws NonPhysicalDensity when the discriminant exceeds 1 + 1e-9.
DensityEigenvalues density_eigenvalues(const CoinDensity &rho);

/// Base-2 von Neumann entropy of the coin, in [0,1].
double entropy(const CoinDensity &rho);

double binary_entropy(double r1, double r2);

} // namespace qwalk
