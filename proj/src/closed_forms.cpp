#include "qwalk/closed_forms.hpp"

#include <cmath>
#include <numbers>

namespace qwalk {

namespace {

constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;

const Spinor &plus_i_coin() {
  static const Spinor s{Complex(inv_sqrt2, 0.0), Complex(0.0, inv_sqrt2)};
  return s;
}

// i^t for integer t, exactly.
Complex ipow(long t) {
  switch (((t % 4) + 4) % 4) {
  case 0: return {1.0, 0.0};
  case 1: return {0.0, 1.0};
  case 2: return {-1.0, 0.0};
  default: return {0.0, -1.0};
  }
}

double sign_pow(long t) { return t % 2 == 0 ? 1.0 : -1.0; }

bool is_half_pi(double theta) { return std::abs(std::cos(theta)) < 1e-9; }

bool same_state(const WalkState &x, const WalkState &y) {
  for (const auto &[pos, s] : x.amplitudes()) {
    const Spinor o = y.at(pos);
    if (std::abs(s.a - o.a) > 1e-12 || std::abs(s.b - o.b) > 1e-12)
      return false;
  }
  for (const auto &[pos, s] : y.amplitudes())
    if (s.norm2() > 1e-24 && !x.amplitudes().contains(pos))
      return false;
  return true;
}

} // namespace

CoinPair coins_of(const BoundedWalk &walk) {
  switch (walk.which) {
  case BoundedCase::local_theta0_half_pi:
  case BoundedCase::nonlocal_theta0_half_pi:
    return {pi / 2, walk.free_angle};
  case BoundedCase::local_theta1_half_pi:
  case BoundedCase::nonlocal_theta1_half_pi:
    return {walk.free_angle, pi / 2};
  }
  return {};
}

WalkState bounded_initial(BoundedCase which) {
  switch (which) {
  case BoundedCase::local_theta0_half_pi:
  case BoundedCase::local_theta1_half_pi:
    return initial_local(plus_i_coin());
  case BoundedCase::nonlocal_theta1_half_pi:
  case BoundedCase::nonlocal_theta0_half_pi:
    return initial_nonlocal(+1, plus_i_coin());
  }
  return {};
}

WalkState closed_state(const BoundedWalk &walk, long steps) {
  if (steps < 0)
    throw std::invalid_argument("closed_state: negative step count");
  const long t = steps / 2;
  const bool odd = steps % 2 == 1;
  const double theta = walk.free_angle;
  const double td = static_cast<double>(t);
  const Complex ep = std::polar(1.0, td * theta);  // e^{it theta}
  const Complex em = std::polar(1.0, -td * theta); // e^{-it theta}
  const Complex sum = em + sign_pow(t) * ep;
  const Complex diff = em - sign_pow(t) * ep;

  WalkState::Map m;
  switch (walk.which) {
  case BoundedCase::local_theta0_half_pi: {
    const Complex p = ipow(t) / (2.0 * std::numbers::sqrt2);
    if (!odd) {
      m[0] = {p * sum, I * p * sum};
      m[-2] = {p * diff, 0.0};
      m[2] = {0.0, I * p * diff};
    } else {
      m[-1] = {I * p * sum, p * diff};
      m[1] = {I * p * diff, p * sum};
    }
    break;
  }
  case BoundedCase::local_theta1_half_pi: {
    const Complex p = ipow(-t) * inv_sqrt2;
    if (!odd) {
      const Complex q = p * ep;
      m[0] = {q, I * q};
    } else {
      const Complex q = p * std::polar(1.0, (td + 1.0) * theta);
      m[-1] = {q, 0.0};
      m[1] = {0.0, -I * q};
    }
    break;
  }
  case BoundedCase::nonlocal_theta1_half_pi: {
    const Complex p = ipow(t) / 4.0;
    const Complex q = ipow(t) / 2.0 * em;
    if (!odd) {
      m[1] = {p * sum, I * q};
      m[-1] = {q, I * p * sum};
      m[-3] = {p * diff, 0.0};
      m[3] = {0.0, I * p * diff};
    } else {
      m[-2] = {I * p * sum, p * diff};
      m[2] = {I * p * diff, p * sum};
      m[0] = {I * q, q};
    }
    break;
  }
  case BoundedCase::nonlocal_theta0_half_pi: {
    if (!odd) {
      const Complex p = ipow(-t) / 2.0 * ep;
      m[-1] = {p, I * p};
      m[1] = {p, I * p};
    } else {
      // H1 rotates (1, i) into e^{i theta}(1, -i) on both sites before the shift.
      const Complex q = ipow(-t) / 2.0 * std::polar(1.0, (td + 1.0) * theta);
      m[-2] = {q, 0.0};
      m[0] = {q, -I * q};
      m[2] = {0.0, -I * q};
    }
    break;
  }
  }
  return WalkState(std::move(m), steps);
}

CoinDensity closed_density(const BoundedWalk &walk, long steps) {
  if (steps < 0)
    throw std::invalid_argument("closed_density: negative step count");
  const long t = steps / 2;
  const bool odd = steps % 2 == 1;
  const double oscillation = sign_pow(t) * std::cos(2.0 * static_cast<double>(t) * walk.free_angle);
  switch (walk.which) {
  case BoundedCase::local_theta0_half_pi:
    return odd ? CoinDensity{0.5, 0.0, 0.5} : CoinDensity{0.5, -0.25 * I * (1.0 + oscillation), 0.5};
  case BoundedCase::local_theta1_half_pi:
    return odd ? CoinDensity{0.5, 0.0, 0.5} : CoinDensity{0.5, -0.5 * I, 0.5};
  case BoundedCase::nonlocal_theta1_half_pi:
    return odd ? CoinDensity{0.5, 0.25 * I, 0.5}
               : CoinDensity{0.5, -0.25 * I * (1.0 + oscillation), 0.5};
  case BoundedCase::nonlocal_theta0_half_pi:
    return odd ? CoinDensity{0.5, 0.25 * I, 0.5} : CoinDensity{0.5, -0.5 * I, 0.5};
  }
  return {};
}

CoinDensity averaged_closed_density(BoundedCase which, Parity step_parity) {
  const bool odd = step_parity == Parity::odd;
  switch (which) {
  case BoundedCase::local_theta0_half_pi:
    return odd ? CoinDensity{0.5, 0.0, 0.5} : CoinDensity{0.5, -0.25 * I, 0.5};
  case BoundedCase::local_theta1_half_pi:
    return odd ? CoinDensity{0.5, 0.0, 0.5} : CoinDensity{0.5, -0.5 * I, 0.5};
  case BoundedCase::nonlocal_theta1_half_pi:
    return odd ? CoinDensity{0.5, 0.25 * I, 0.5} : CoinDensity{0.5, -0.25 * I, 0.5};
  case BoundedCase::nonlocal_theta0_half_pi:
    return odd ? CoinDensity{0.5, 0.25 * I, 0.5} : CoinDensity{0.5, -0.5 * I, 0.5};
  }
  return {};
}

std::optional<BoundedCase> match_bounded_case(const CoinPair &coins, const WalkState &init) {
  const bool h0 = is_half_pi(coins.theta0);
  const bool h1 = is_half_pi(coins.theta1);
  if (!h0 && !h1)
    return std::nullopt;
  if (same_state(init, initial_local(plus_i_coin()))) {
    if (h1)
      return BoundedCase::local_theta1_half_pi;
    return BoundedCase::local_theta0_half_pi;
  }
  if (same_state(init, initial_nonlocal(+1, plus_i_coin()))) {
    if (h0)
      return BoundedCase::nonlocal_theta0_half_pi;
    return BoundedCase::nonlocal_theta1_half_pi;
  }
  return std::nullopt;
}

} // namespace qwalk
