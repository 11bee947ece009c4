#pragma once

#include "qwalk/quadrature.hpp"
#include "qwalk/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace qwalk::cli {

enum class Mode { simulate, asymptotic, sweep, verify };

enum class ParityChoice { even, odd, both };

struct RunConfig {
  Mode mode = Mode::simulate;
  double theta0 = pi / 4;
  double theta1 = pi / 4;
  /// local | nonlocal-plus | nonlocal-minus | path to an initial-state file.
  /// Unset means local, except in verify mode where both local and
  /// nonlocal-plus are checked.
  std::optional<std::string> initial;
  Spinor coin_state{Complex(1.0 / std::numbers::sqrt2, 0.0),
                    Complex(0.0, 1.0 / std::numbers::sqrt2)};
  long steps = 100;
  long window_min = 400;
  long window_max = 500;
  ParityChoice parity = ParityChoice::both;
  /// Grid bounds and resolution; mode defaults apply when unset
  /// (sweep: 0:pi at 41x41, verify: 0.3:1.4 at 7x7).
  std::optional<std::pair<double, double>> range0;
  std::optional<std::pair<double, double>> range1;
  std::optional<std::pair<std::size_t, std::size_t>> grid;
  QuadratureSpec quadrature;
  double tolerance = 2e-3;
  std::optional<std::string> output;
  std::optional<std::string> svg_prefix;
  std::optional<std::string> dump_initial;
  int threads = 0;
};

enum ExitCode : int { ok = 0, usage_error = 1, numeric_failure = 2 };

/// Decimal radians or multiples of pi: "pi", "-pi/4", "3pi/4", "3*pi/4", "2pi".
double parse_angle(const std::string &text);
/// "lo:hi" with angle endpoints.
std::pair<double, double> parse_range(const std::string &text);
/// "NxM" or "N".
std::pair<std::size_t, std::size_t> parse_grid(const std::string &text);
/// "re_a,im_a,re_b,im_b" normalized to unit norm.
Spinor parse_coin_state(const std::string &text);

/// Runs one configured mode. Validation problems return usage_error and
/// numerical failures numeric_failure, each with one diagnostic line on err.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv and runs; the body of the qwalk executable.
int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qwalk::cli
