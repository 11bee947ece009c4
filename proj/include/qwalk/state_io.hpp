#pragma once

#include "qwalk/walk_state.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace qwalk {

/// A state read from an initial-state file.
struct LoadedState {
  WalkState state;
  /// nullopt when the support mixes even and odd sites.
  std::optional<Parity> parity;
};

/// Parses `x re(a) im(a) re(b) im(b)` lines ('#' starts a comment) and
/// normalizes the total norm to 1. States already normalized to within 1e-14
/// are kept bit-for-bit.
LoadedState read_initial_state(std::istream &in);
LoadedState load_initial_state(const std::string &path);

/// Writes a state in the format read by read_initial_state, using hex floats
/// so that a reload is exact.
void write_initial_state(std::ostream &out, const WalkState &state);

} // namespace qwalk
