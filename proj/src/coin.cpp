#include "qwalk/coin.hpp"
#include "qwalk/error.hpp"

#include <cmath>

namespace qwalk {

DegenerateMomentum::DegenerateMomentum(double k)
    : Error("degenerate momentum k = " + std::to_string(k)), k_(k) {}

RealMatrix2 make_coin(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{{c, s}, {s, -c}}};
}

CoinTrig::CoinTrig(const CoinPair &coins)
    : c0(std::cos(coins.theta0)), s0(std::sin(coins.theta0)), c1(std::cos(coins.theta1)),
      s1(std::sin(coins.theta1)) {}

} // namespace qwalk
