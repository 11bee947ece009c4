#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk_state.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>

namespace qwalk {

/// Momentum-space initial state: a~(k) = sum_x a(x) e^{-ikx}, likewise b~.
/// All support positions share `parity`.
class LaurentSpinor {
public:
  LaurentSpinor(std::map<long, Spinor> coefficients, Parity parity);

  Spinor operator()(double k) const;

  const std::map<long, Spinor> &coefficients() const { return coefficients_; }
  Parity parity() const { return parity_; }

private:
  std::map<long, Spinor> coefficients_;
  Parity parity_;
};

/// Throws InvalidState when the support mixes parities.
LaurentSpinor fourier_initial(const WalkState &state);

/// Eigenvalues below this |w| are treated as coincident.
inline constexpr double degenerate_w_threshold = 1e-8;
/// Eigenvector squared norms below this are treated as vanishing.
inline constexpr double degenerate_norm_threshold = 1e-12;

/// Spectral data of the two-step operator at one momentum. For even-parity
/// support the operator is H~1 H~0 and u = s0 c1 e^{2ik} - c0 s1; for odd
/// parity it is H~0 H~1 and u = s1 c0 e^{2ik} - c1 s0. Eigenvectors are
/// (u, v +- w)/sqrt(N_gamma) with eigenvalues lambda_0 (+) and lambda_1 (-).
struct EigenSystem {
  Complex lambda0, lambda1;
  Complex u, v, w;
  double n0, n1;
  /// Projections of the initial spinor: f = <u, v+w | psi0>, g = <u, v-w | psi0>.
  Complex f, g;
};

/// True on the lines where the spectral decomposition fails at every
/// momentum: both coins off-diagonal (theta0 = theta1 = pi/2 mod pi) or both
/// diagonal (theta0, theta1 = 0 mod pi).
bool fully_degenerate(const CoinPair &coins);

/// Non-throwing core: nullopt at a degenerate momentum.
std::optional<EigenSystem> try_eigen_system(double k, const CoinTrig &trig, Parity support,
                                            const Spinor &init_at_k);

/// Throws DegenerateParameters on a fully degenerate line and
/// DegenerateMomentum at a degenerate k.
EigenSystem eigen_system(double k, const CoinPair &coins, Parity support,
                         const LaurentSpinor &init);

/// psi~(k, t) after t single steps, from the spectral decomposition.
std::optional<Spinor> try_spinor_at(double k, long t, const CoinTrig &trig,
                                    const LaurentSpinor &init);
Spinor spinor_at(double k, long t, const CoinPair &coins, const LaurentSpinor &init);

/// Integrand over k; nullopt marks a flagged momentum.
using MomentumSpinor = std::function<std::optional<Spinor>(double)>;

/// (1/2pi) integral of e^{ikx} psi~(k) dk.
Spinor inverse_fourier(const MomentumSpinor &psi, long x, const QuadratureSpec &spec = {});

/// psi~(., t) as an integrand for inverse_fourier.
MomentumSpinor propagated(const CoinPair &coins, const LaurentSpinor &init, long t);

} // namespace qwalk
