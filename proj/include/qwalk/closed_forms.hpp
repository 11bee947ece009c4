#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/walk_state.hpp"

#include <optional>

namespace qwalk {

/// Bounded walks with one coin equal to the Pauli X (angle pi/2), started
/// from the (|L> + i|R>)/sqrt2 coin state.
enum class BoundedCase {
  local_theta0_half_pi,    ///< H0 = X, walker at the origin; support [-2, 2]
  local_theta1_half_pi,    ///< H1 = X, walker at the origin; support [-1, 1]
  nonlocal_theta1_half_pi, ///< H1 = X, walker on +-1; support [-3, 3]
  nonlocal_theta0_half_pi, ///< H0 = X, walker on +-1; support [-2, 2]
};

struct BoundedWalk {
  BoundedCase which;
  /// The coin angle that is not pi/2.
  double free_angle;
};

CoinPair coins_of(const BoundedWalk &walk);
WalkState bounded_initial(BoundedCase which);

/// Exact |psi(t)> after `steps` steps.
WalkState closed_state(const BoundedWalk &walk, long steps);

/// Exact rho_c after `steps` steps.
CoinDensity closed_density(const BoundedWalk &walk, long steps);

/// Long-time average over steps of one parity. The oscillating terms are
/// taken to average out, which holds for non-resonant free angles.
CoinDensity averaged_closed_density(BoundedCase which, Parity step_parity);

/// Identifies the bounded case for given coins and initial state, if any.
/// When both angles are pi/2 the time-independent case is preferred.
std::optional<BoundedCase> match_bounded_case(const CoinPair &coins, const WalkState &init);

} // namespace qwalk
