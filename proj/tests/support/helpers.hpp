#pragma once

#include "oracle.hpp"

#include "qwalk/walk_state.hpp"

#include <random>

namespace testing {

inline std::map<long, std::pair<oracle::cd, oracle::cd>> to_oracle(const qwalk::WalkState &s) {
  std::map<long, std::pair<oracle::cd, oracle::cd>> m;
  for (const auto &[x, sp] : s.amplitudes())
    m[x] = {sp.a, sp.b};
  return m;
}

inline const qwalk::Spinor plus_i{qwalk::Complex(1 / std::numbers::sqrt2, 0),
                                  qwalk::Complex(0, 1 / std::numbers::sqrt2)};

inline qwalk::Spinor random_unit_spinor(std::mt19937_64 &rng) {
  std::normal_distribution<double> g;
  qwalk::Spinor s{{g(rng), g(rng)}, {g(rng), g(rng)}};
  return qwalk::Complex(1 / std::sqrt(s.norm2())) * s;
}

// Unit-norm state on sites of one parity within [-3, 3].
inline qwalk::WalkState random_state(std::mt19937_64 &rng, int parity) {
  qwalk::WalkState::Map m;
  std::normal_distribution<double> g;
  double n = 0;
  for (long x = -3 + (parity == 0 ? 1 : 0); x <= 3; x += 2) {
    m[x] = {{g(rng), g(rng)}, {g(rng), g(rng)}};
    n += m[x].norm2();
  }
  for (auto &[x, s] : m)
    s = qwalk::Complex(1 / std::sqrt(n)) * s;
  return qwalk::WalkState(std::move(m));
}

} // namespace testing
