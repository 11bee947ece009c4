#include "qwalk/walk_state.hpp"
#include "qwalk/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwalk {

Spinor WalkState::at(long x) const {
  const auto it = amplitudes_.find(x);
  return it == amplitudes_.end() ? Spinor{} : it->second;
}

double WalkState::norm2() const {
  double total = 0.0;
  for (const auto &[x, s] : amplitudes_)
    total += s.norm2();
  return total;
}

namespace {

void require_unit(const Spinor &s) {
  const double n = s.norm2();
  if (!std::isfinite(n) || std::abs(n - 1.0) > 1e-12)
    throw InvalidState("coin state is not normalized: |a|^2 + |b|^2 = " + std::to_string(n));
}

} // namespace

WalkState initial_local(const Spinor &coin_state) {
  require_unit(coin_state);
  return WalkState({{0, coin_state}});
}

WalkState initial_nonlocal(int sign, const Spinor &coin_state) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("nonlocal sign must be +1 or -1");
  require_unit(coin_state);
  const double h = 1.0 / std::numbers::sqrt2;
  return WalkState({{-1, Complex(h) * coin_state}, {1, Complex(sign * h) * coin_state}});
}

WalkState step(const WalkState &state, const CoinPair &coins) {
  const RealMatrix2 h0 = make_coin(coins.theta0);
  const RealMatrix2 h1 = make_coin(coins.theta1);
  WalkState::Map next;
  for (const auto &[x, s] : state.amplitudes()) {
    const Spinor turned = apply(x % 2 == 0 ? h0 : h1, s);
    next[x - 1].a += turned.a;
    next[x + 1].b += turned.b;
  }
  return WalkState(std::move(next), state.step() + 1);
}

WalkState evolve(WalkState state, const CoinPair &coins, long steps) {
  if (steps < 0)
    throw std::invalid_argument("evolve: negative step count");
  for (long t = 0; t < steps; ++t)
    state = step(state, coins);
  return state;
}

Support support(const WalkState &state) {
  std::optional<Support> box;
  for (const auto &[x, s] : state.amplitudes()) {
    if (s.norm2() <= occupied_threshold)
      continue;
    if (!box)
      box = Support{x, x};
    box->max = x;
  }
  if (!box)
    throw InvalidState("support of an empty state");
  return *box;
}

std::optional<Parity> support_parity(const WalkState &state) {
  std::optional<Parity> seen;
  for (const auto &[x, s] : state.amplitudes()) {
    if (s.a == Complex{} && s.b == Complex{})
      continue;
    const Parity p = parity_of(x);
    if (seen && *seen != p)
      return std::nullopt;
    seen = p;
  }
  if (!seen)
    throw InvalidState("parity of an empty state");
  return seen;
}

} // namespace qwalk
