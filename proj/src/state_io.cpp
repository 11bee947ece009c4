#include "qwalk/state_io.hpp"
#include "qwalk/error.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qwalk {

LoadedState read_initial_state(std::istream &in) {
  WalkState::Map amplitudes;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first))
      continue;

    const std::string where = "line " + std::to_string(lineno) + ": ";
    long x = 0;
    std::size_t used = 0;
    try {
      x = std::stol(first, &used);
    } catch (const std::exception &) {
      used = 0;
    }
    if (used != first.size())
      throw ParseError(where + "bad position '" + first + "'");

    double v[4];
    for (double &d : v) {
      std::string tok;
      if (!(fields >> tok))
        throw ParseError(where + "expected 5 fields: x re(a) im(a) re(b) im(b)");
      char *end = nullptr;
      d = std::strtod(tok.c_str(), &end);
      if (end != tok.c_str() + tok.size() || !std::isfinite(d))
        throw ParseError(where + "bad number '" + tok + "'");
    }
    if (std::string extra; fields >> extra)
      throw ParseError(where + "trailing field '" + extra + "'");
    if (!amplitudes.emplace(x, Spinor{{v[0], v[1]}, {v[2], v[3]}}).second)
      throw ParseError(where + "duplicate position " + std::to_string(x));
  }

  WalkState state(std::move(amplitudes));
  const double n2 = state.norm2();
  if (!(n2 > 0.0))
    throw InvalidState("initial state has zero norm");
  if (std::abs(n2 - 1.0) > 1e-14) {
    const double scale = 1.0 / std::sqrt(n2);
    WalkState::Map scaled;
    for (const auto &[x, s] : state.amplitudes())
      scaled.emplace(x, Complex(scale) * s);
    state = WalkState(std::move(scaled));
  }
  return {state, support_parity(state)};
}

LoadedState load_initial_state(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw ParseError("cannot read initial-state file '" + path + "'");
  return read_initial_state(in);
}

void write_initial_state(std::ostream &out, const WalkState &state) {
  out << "# x re(a) im(a) re(b) im(b)\n";
  char buf[160];
  for (const auto &[x, s] : state.amplitudes()) {
    std::snprintf(buf, sizeof buf, "%ld %a %a %a %a\n", x, s.a.real(), s.a.imag(), s.b.real(),
                  s.b.imag());
    out << buf;
  }
}

} // namespace qwalk
