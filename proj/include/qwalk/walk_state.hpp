#pragma once

#include "qwalk/coin.hpp"
#include "qwalk/types.hpp"

#include <map>
#include <optional>

namespace qwalk {

/// Site probability above which a lattice site counts as occupied.
inline constexpr double occupied_threshold = 1e-14;

/// |Psi(t)> as an ordered map from lattice position to coin spinor.
/// Amplitudes are never pruned during evolution.
class WalkState {
public:
  using Map = std::map<long, Spinor>;

  WalkState() = default;
  explicit WalkState(Map amplitudes, long step = 0)
      : amplitudes_(std::move(amplitudes)), step_(step) {}

  const Map &amplitudes() const { return amplitudes_; }
  long step() const { return step_; }
  bool empty() const { return amplitudes_.empty(); }

  /// Amplitude at x, zero when the site is not stored.
  Spinor at(long x) const;
  double norm2() const;

private:
  Map amplitudes_;
  long step_ = 0;
};

struct Support {
  long min;
  long max;
};

/// Walker at the origin with the given coin state. Throws InvalidState unless
/// |a|^2 + |b|^2 = 1 within 1e-12.
WalkState initial_local(const Spinor &coin_state);

/// (|-1> + sign |1>)/sqrt2 (x) coin_state, sign = +1 or -1.
WalkState initial_nonlocal(int sign, const Spinor &coin_state);

/// One step U = S (I (x) C_x): coin chosen by the site's parity, then shift.
WalkState step(const WalkState &state, const CoinPair &coins);

WalkState evolve(WalkState state, const CoinPair &coins, long steps);

/// Tight bounding interval of occupied sites. Throws InvalidState when no
/// site is occupied.
Support support(const WalkState &state);

/// Common parity of all sites holding a nonzero amplitude, or nullopt when
/// both parities occur. Throws InvalidState for an all-zero state.
std::optional<Parity> support_parity(const WalkState &state);

} // namespace qwalk
