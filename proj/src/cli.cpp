#include "qwalk/cli.hpp"
#include "qwalk/error.hpp"
#include "qwalk/report.hpp"
#include "qwalk/state_io.hpp"
#include "qwalk/sweep.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cmath>
#include <fstream>
#include <regex>
#include <sstream>

namespace qwalk::cli {

namespace {

double parse_real(const std::string &text, const std::string &what) {
  char *end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v))
    throw ParseError("invalid " + what + " '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string &text, const std::string &what) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ParseError("invalid " + what + " '" + text + "'");
  return v;
}

} // namespace

double parse_angle(const std::string &text) {
  static const std::regex multiple(R"(^([+-])?(?:(\d+)\*?)?pi(?:/(\d+))?$)");
  std::smatch m;
  if (std::regex_match(text, m, multiple)) {
    const double coef = m[2].matched ? static_cast<double>(parse_count(m[2], "angle")) : 1.0;
    const double den = m[3].matched ? static_cast<double>(parse_count(m[3], "angle")) : 1.0;
    if (den == 0.0)
      throw ParseError("invalid angle '" + text + "': zero denominator");
    const double v = coef * pi / den;
    return (m[1].matched && m[1] == "-") ? -v : v;
  }
  return parse_real(text, "angle");
}

std::pair<double, double> parse_range(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos || text.find(':', colon + 1) != std::string::npos)
    throw ParseError("invalid range '" + text + "', expected lo:hi");
  const double lo = parse_angle(text.substr(0, colon));
  const double hi = parse_angle(text.substr(colon + 1));
  if (!(hi > lo))
    throw ParseError("invalid range '" + text + "': upper bound must exceed lower bound");
  return {lo, hi};
}

std::pair<std::size_t, std::size_t> parse_grid(const std::string &text) {
  const auto x = text.find('x');
  const std::size_t a = parse_count(text.substr(0, x), "grid");
  const std::size_t b = x == std::string::npos ? a : parse_count(text.substr(x + 1), "grid");
  if (a < 2 || b < 2)
    throw ParseError("invalid grid '" + text + "': at least 2 points per axis");
  return {a, b};
}

Spinor parse_coin_state(const std::string &text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string field;
  while (std::getline(ss, field, ','))
    v.push_back(parse_real(field, "coin-state component"));
  if (v.size() != 4)
    throw ParseError("coin state needs 4 comma-separated numbers: re(a),im(a),re(b),im(b)");
  const Spinor s{{v[0], v[1]}, {v[2], v[3]}};
  const double n = std::sqrt(s.norm2());
  if (!(n > 0.0))
    throw ParseError("coin state must be nonzero");
  return Complex(1.0 / n) * s;
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

WalkState build_initial(const std::string &kind, const Spinor &coin) {
  if (kind == "local")
    return initial_local(coin);
  if (kind == "nonlocal-plus")
    return initial_nonlocal(+1, coin);
  if (kind == "nonlocal-minus")
    return initial_nonlocal(-1, coin);
  return load_initial_state(kind).state;
}

void require_single_parity(const WalkState &state, const char *mode) {
  if (!support_parity(state))
    throw UsageError(std::string("mixed-parity initial state: ") + mode +
                     " mode needs support on sites of one parity");
}

std::vector<Parity> parities_of(ParityChoice c) {
  switch (c) {
  case ParityChoice::even: return {Parity::even};
  case ParityChoice::odd: return {Parity::odd};
  case ParityChoice::both: break;
  }
  return {Parity::even, Parity::odd};
}

// Writes to the configured file, or to `fallback` when none is set.
template <typename Writer>
void emit(const std::optional<std::string> &path, std::ostream &fallback, Writer &&write) {
  if (!path) {
    write(fallback);
    return;
  }
  std::ofstream file(*path);
  if (!file)
    throw UsageError("cannot write output file '" + *path + "'");
  write(file);
}

int run_simulate(const RunConfig &c, const WalkState &init, std::ostream &out) {
  if (c.steps < 0)
    throw UsageError("--steps must be nonnegative");
  const CoinPair coins{c.theta0, c.theta1};
  std::vector<SimulationRow> rows;
  rows.reserve(static_cast<std::size_t>(c.steps) + 1);
  WalkState state = init;
  for (long t = 0; t <= c.steps; ++t) {
    const CoinDensity rho = reduced_density(state);
    rows.push_back({t, entropy(rho), rho, support(state)});
    if (t < c.steps)
      state = step(state, coins);
  }
  emit(c.output, out, [&](std::ostream &os) { write_simulation_csv(os, rows); });
  return ok;
}

int run_asymptotic(const RunConfig &c, const WalkState &init, std::ostream &out) {
  require_single_parity(init, "asymptotic");
  const CoinPair coins{c.theta0, c.theta1};
  const AverageWindow window{c.window_min, c.window_max, Parity::even};
  std::string header = "theta0,theta1";
  std::string row = format_number(c.theta0) + "," + format_number(c.theta1);
  for (const Parity p : parities_of(c.parity)) {
    const AsymptoticValue v =
        asymptotic_entanglement(coins, init, p, c.quadrature, Execution::parallel, window);
    const std::string sfx = std::string("_") + to_string(p);
    header += ",s_e" + sfx + ",alpha" + sfx + ",re_beta" + sfx + ",im_beta" + sfx + ",source" + sfx;
    row += "," + format_number(v.entropy) + "," + format_number(v.density.alpha) + "," +
           format_number(v.density.beta.real()) + "," + format_number(v.density.beta.imag()) +
           "," + to_string(v.source);
  }
  emit(c.output, out, [&](std::ostream &os) { os << header << '\n' << row << '\n'; });
  return ok;
}

int run_sweep(const RunConfig &c, const WalkState &init, std::ostream &out, std::ostream &err) {
  require_single_parity(init, "sweep");
  const auto [g0, g1] = c.grid.value_or(std::pair<std::size_t, std::size_t>{41, 41});
  const auto r0 = c.range0.value_or(std::pair{0.0, pi});
  const auto r1 = c.range1.value_or(std::pair{0.0, pi});
  const SweepGrid grid{{r0.first, r0.second, g0}, {r1.first, r1.second, g1}};

  std::vector<SweepRow> all;
  std::size_t failed = 0;
  for (const Parity p : parities_of(c.parity)) {
    std::vector<SweepRow> rows = sweep(grid, init, p, c.quadrature);
    for (const SweepRow &r : rows)
      failed += r.error.empty() ? 0 : 1;
    if (c.svg_prefix) {
      const std::string path = *c.svg_prefix + "_" + to_string(p) + ".svg";
      std::ofstream svg(path);
      if (!svg)
        throw UsageError("cannot write SVG file '" + path + "'");
      write_heatmap_svg(svg, rows, std::string("S_E after ") + to_string(p) + " steps");
    }
    all.insert(all.end(), rows.begin(), rows.end());
  }
  emit(c.output, out, [&](std::ostream &os) { write_sweep_csv(os, all); });
  if (failed > 0) {
    err << "error: " << failed << " sweep cells failed; see the error column\n";
    return numeric_failure;
  }
  return ok;
}

int run_verify(const RunConfig &c, std::ostream &out, std::ostream &err) {
  std::vector<NamedState> inits;
  if (c.initial) {
    inits.push_back({*c.initial, build_initial(*c.initial, c.coin_state)});
    require_single_parity(inits.back().state, "verify");
  } else {
    inits.push_back({"local", initial_local(c.coin_state)});
    inits.push_back({"nonlocal-plus", initial_nonlocal(+1, c.coin_state)});
  }
  const auto [g0, g1] = c.grid.value_or(std::pair<std::size_t, std::size_t>{7, 7});
  const auto r0 = c.range0.value_or(std::pair{0.3, 1.4});
  const auto r1 = c.range1.value_or(std::pair{0.3, 1.4});
  std::vector<double> t0s, t1s;
  for (std::size_t i = 0; i < g0; ++i)
    t0s.push_back(AxisRange{r0.first, r0.second, g0}.at(i));
  for (std::size_t j = 0; j < g1; ++j)
    t1s.push_back(AxisRange{r1.first, r1.second, g1}.at(j));

  const AverageWindow window{c.window_min, c.window_max, Parity::even};
  window.validate(min_verification_steps);
  const std::vector<long> decay_steps{1, 2, 4, 8, 16, 32, 64, 128, 256, 512};
  const auto entries = verify_grid(t0s, t1s, inits, window, decay_steps, c.quadrature);

  write_verification_text(out, entries, c.tolerance);
  if (c.output) {
    std::ofstream csv(*c.output);
    if (!csv)
      throw UsageError("cannot write output file '" + *c.output + "'");
    write_verification_csv(csv, entries);
  }
  for (const VerificationEntry &e : entries)
    if (e.comparison.entropy_diff >= c.tolerance || !e.decays) {
      err << "error: verification failed; see the report\n";
      return numeric_failure;
    }
  return ok;
}

} // namespace

int run(const RunConfig &c, std::ostream &out, std::ostream &err) {
  try {
    if (c.threads > 0)
      omp_set_num_threads(c.threads);
    c.quadrature.validate();

    const std::string kind = c.initial.value_or("local");
    if (c.dump_initial) {
      std::ofstream dump(*c.dump_initial);
      if (!dump)
        throw UsageError("cannot write initial-state file '" + *c.dump_initial + "'");
      write_initial_state(dump, build_initial(kind, c.coin_state));
    }

    switch (c.mode) {
    case Mode::simulate: return run_simulate(c, build_initial(kind, c.coin_state), out);
    case Mode::asymptotic: return run_asymptotic(c, build_initial(kind, c.coin_state), out);
    case Mode::sweep: return run_sweep(c, build_initial(kind, c.coin_state), out, err);
    case Mode::verify: return run_verify(c, out, err);
    }
    return ok;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const InvalidState &e) {
    err << "error: invalid initial state: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const ConvergenceError &e) {
    err << "error: " << e.what() << '\n';
    return numeric_failure;
  } catch (const Error &e) {
    err << "error: numerical failure: " << e.what() << '\n';
    return numeric_failure;
  }
}

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Two-period discrete-time quantum walks: coin-position entanglement"};
  app.require_subcommand(1);

  RunConfig c;
  std::string theta0 = "pi/4", theta1 = "pi/4";
  std::string coin, window, parity, grid, range, range0, range1;
  std::string initial;

  const auto common = [&](CLI::App *sub) {
    sub->add_option("--theta0", theta0, "coin angle on even sites (radians, or e.g. pi/2)");
    sub->add_option("--theta1", theta1, "coin angle on odd sites");
    sub->add_option("--initial", initial,
                    "local | nonlocal-plus | nonlocal-minus | path to an initial-state file");
    sub->add_option("--coin-state", coin, "re(a),im(a),re(b),im(b); default (1, i)/sqrt2");
    sub->add_option("--nodes", c.quadrature.nodes, "quadrature nodes (even, >= 64)");
    sub->add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)");
    sub->add_option("--out", c.output, "output file (default: stdout)");
    sub->add_option("--dump-initial", c.dump_initial, "write the initial state to this file");
  };

  CLI::App *sim = app.add_subcommand("simulate", "direct lattice simulation, one CSV row per step");
  common(sim);
  sim->add_option("--steps", c.steps, "number of steps");

  CLI::App *asy = app.add_subcommand("asymptotic", "long-time asymptotic density by quadrature");
  common(asy);
  asy->add_option("--parity", parity, "even | odd | both");

  CLI::App *swp = app.add_subcommand("sweep", "S_E over a (theta0, theta1) grid");
  common(swp);
  swp->add_option("--parity", parity, "even | odd | both");
  swp->add_option("--grid", grid, "resolution NxM (default 41x41)");
  swp->add_option("--range", range, "lo:hi for both axes (default 0:pi)");
  swp->add_option("--range0", range0, "lo:hi for theta0");
  swp->add_option("--range1", range1, "lo:hi for theta1");
  swp->add_option("--svg", c.svg_prefix, "write PREFIX_<parity>.svg heatmaps");

  CLI::App *ver = app.add_subcommand("verify", "simulation vs quadrature on a parameter grid");
  common(ver);
  ver->add_option("--grid", grid, "resolution NxM (default 7x7)");
  ver->add_option("--range", range, "lo:hi for both axes (default 0.3:1.4)");
  ver->add_option("--window", window, "averaging window t_min:t_max (default 400:500)");
  ver->add_option("--tolerance", c.tolerance, "allowed |S_sim - S_quad| (default 2e-3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? ok : usage_error;
  }

  try {
    c.mode = sim->parsed() ? Mode::simulate
             : asy->parsed() ? Mode::asymptotic
             : swp->parsed() ? Mode::sweep
                             : Mode::verify;
    c.theta0 = parse_angle(theta0);
    c.theta1 = parse_angle(theta1);
    if (!initial.empty())
      c.initial = initial;
    if (!coin.empty())
      c.coin_state = parse_coin_state(coin);
    if (!parity.empty()) {
      if (parity == "even") c.parity = ParityChoice::even;
      else if (parity == "odd") c.parity = ParityChoice::odd;
      else if (parity == "both") c.parity = ParityChoice::both;
      else throw ParseError("invalid parity '" + parity + "', expected even, odd or both");
    }
    if (!grid.empty())
      c.grid = parse_grid(grid);
    if (!range.empty())
      c.range0 = c.range1 = parse_range(range);
    if (!range0.empty())
      c.range0 = parse_range(range0);
    if (!range1.empty())
      c.range1 = parse_range(range1);
    if (!window.empty()) {
      const auto colon = window.find(':');
      if (colon == std::string::npos)
        throw ParseError("invalid window '" + window + "', expected t_min:t_max");
      c.window_min = static_cast<long>(parse_count(window.substr(0, colon), "window"));
      c.window_max = static_cast<long>(parse_count(window.substr(colon + 1), "window"));
    }
  } catch (const ParseError &e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return run(c, out, err);
}

} // namespace qwalk::cli
