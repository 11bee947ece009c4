#pragma once

#include "qwalk/types.hpp"

#include <array>

namespace qwalk {

using RealMatrix2 = std::array<std::array<double, 2>, 2>;

/// H(theta) = [[cos, sin], [sin, -cos]]: real, symmetric, orthogonal, det -1.
RealMatrix2 make_coin(double theta);

inline Spinor apply(const RealMatrix2 &m, const Spinor &s) {
  return {m[0][0] * s.a + m[0][1] * s.b, m[1][0] * s.a + m[1][1] * s.b};
}

/// Two-period coin sequence: H(theta0) on even sites, H(theta1) on odd sites.
/// Angles are radians; every derived quantity is pi-periodic in each angle.
struct CoinPair {
  double theta0 = pi / 4;
  double theta1 = pi / 4;
};

/// Cached cosines and sines of a CoinPair.
struct CoinTrig {
  double c0, s0, c1, s1;

  explicit CoinTrig(const CoinPair &coins);
};

} // namespace qwalk
