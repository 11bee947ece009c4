#include "qwalk/report.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <ostream>

namespace qwalk {

std::string format_number(double x) {
  if (x == 0.0)
    return "0";
  return fmt::format("{:.12g}", x);
}

void write_simulation_csv(std::ostream &out, std::span<const SimulationRow> rows) {
  out << "t,s_e,alpha,re_beta,im_beta,support_min,support_max\n";
  for (const SimulationRow &r : rows)
    out << r.t << ',' << format_number(r.entropy) << ',' << format_number(r.density.alpha) << ','
        << format_number(r.density.beta.real()) << ',' << format_number(r.density.beta.imag())
        << ',' << r.support.min << ',' << r.support.max << '\n';
}

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows) {
  out << "theta0,theta1,parity,s_e,alpha,re_beta,im_beta,source,error\n";
  for (const SweepRow &r : rows) {
    out << format_number(r.coins.theta0) << ',' << format_number(r.coins.theta1) << ','
        << to_string(r.step_parity) << ',';
    if (r.error.empty()) {
      const CoinDensity &d = r.value.density;
      out << format_number(r.value.entropy) << ',' << format_number(d.alpha) << ','
          << format_number(d.beta.real()) << ',' << format_number(d.beta.imag()) << ','
          << to_string(r.value.source) << ",\n";
    } else {
      std::string msg = r.error;
      std::replace(msg.begin(), msg.end(), ',', ';');
      out << ",,,,error," << msg << '\n';
    }
  }
}

namespace {

// Linear interpolation through a few viridis samples.
std::string colour(double s) {
  static constexpr std::array<std::array<double, 3>, 5> stops{{{68, 1, 84},
                                                               {59, 82, 139},
                                                               {33, 145, 140},
                                                               {94, 201, 98},
                                                               {253, 231, 37}}};
  const double x = std::clamp(s, 0.0, 1.0) * (stops.size() - 1);
  const auto lo = std::min(static_cast<std::size_t>(x), stops.size() - 2);
  const double f = x - static_cast<double>(lo);
  std::array<int, 3> rgb{};
  for (std::size_t c = 0; c < 3; ++c)
    rgb[c] = static_cast<int>(std::lround(stops[lo][c] + f * (stops[lo + 1][c] - stops[lo][c])));
  return fmt::format("#{:02x}{:02x}{:02x}", rgb[0], rgb[1], rgb[2]);
}

} // namespace

void write_heatmap_svg(std::ostream &out, std::span<const SweepRow> rows,
                       const std::string &title) {
  std::size_t n0 = 0, n1 = 0;
  double t0lo = 0, t0hi = 0, t1lo = 0, t1hi = 0;
  for (const SweepRow &r : rows) {
    n0 = std::max(n0, r.i + 1);
    n1 = std::max(n1, r.j + 1);
    if (r.i == 0) t0lo = r.coins.theta0;
    if (r.j == 0) t1lo = r.coins.theta1;
    t0hi = std::max(t0hi, r.coins.theta0);
    t1hi = std::max(t1hi, r.coins.theta1);
  }
  constexpr double left = 70, top = 40, size = 400, bar = 20;
  const double cw = n0 ? size / n0 : size;
  const double ch = n1 ? size / n1 : size;

  out << R"(<svg xmlns="http://www.w3.org/2000/svg" width="560" height="510" font-family="sans-serif" font-size="12">)"
      << '\n';
  out << fmt::format(R"(<text x="{}" y="24" font-size="14">{}</text>)", left, title) << '\n';
  for (const SweepRow &r : rows) {
    const double x = left + r.i * cw;
    const double y = top + size - (r.j + 1) * ch;
    const std::string fill = r.error.empty() ? colour(r.value.entropy) : "#808080";
    out << fmt::format(R"(<rect x="{:.3f}" y="{:.3f}" width="{:.3f}" height="{:.3f}" fill="{}"/>)",
                       x, y, cw + 0.05, ch + 0.05, fill)
        << '\n';
  }
  out << fmt::format(R"(<rect x="{}" y="{}" width="{}" height="{}" fill="none" stroke="black"/>)",
                     left, top, size, size)
      << '\n';
  for (int k = 0; k <= 4; ++k) {
    const double f = k / 4.0;
    out << fmt::format(R"(<text x="{:.1f}" y="{}" text-anchor="middle">{}</text>)",
                       left + f * size, top + size + 16, format_number(t0lo + f * (t0hi - t0lo)))
        << '\n';
    out << fmt::format(R"(<text x="{}" y="{:.1f}" text-anchor="end">{}</text>)", left - 6,
                       top + size - f * size + 4, format_number(t1lo + f * (t1hi - t1lo)))
        << '\n';
  }
  out << fmt::format(R"(<text x="{}" y="{}" text-anchor="middle">theta0 (rad)</text>)",
                     left + size / 2, top + size + 36)
      << '\n';
  out << fmt::format(
             R"svg(<text x="18" y="{}" text-anchor="middle" transform="rotate(-90 18 {})">theta1 (rad)</text>)svg",
             top + size / 2, top + size / 2)
      << '\n';
  const double bx = left + size + 24;
  for (int k = 0; k < 100; ++k)
    out << fmt::format(R"(<rect x="{}" y="{:.2f}" width="{}" height="4.1" fill="{}"/>)", bx,
                       top + size - (k + 1) * size / 100, bar, colour((k + 0.5) / 100))
        << '\n';
  out << fmt::format(R"(<text x="{}" y="{}">1</text>)", bx + bar + 4, top + 4) << '\n';
  out << fmt::format(R"(<text x="{}" y="{}">0</text>)", bx + bar + 4, top + size + 4) << '\n';
  out << fmt::format(R"(<text x="{}" y="{}">S_E</text>)", bx, top - 6) << '\n';
  out << "</svg>\n";
}

void write_verification_csv(std::ostream &out, std::span<const VerificationEntry> entries) {
  out << "theta0,theta1,init,parity,s_simulated,s_quadrature,entropy_diff,max_density_diff,"
         "decay_first,decay_last,beta_decay_first,beta_decay_last,decays\n";
  for (const VerificationEntry &e : entries) {
    const ComparisonReport &c = e.comparison;
    out << format_number(c.coins.theta0) << ',' << format_number(c.coins.theta1) << ','
        << e.init_label << ',' << to_string(c.step_parity) << ','
        << format_number(c.entropy_simulated) << ',' << format_number(c.entropy_quadrature) << ','
        << format_number(c.entropy_diff) << ',' << format_number(c.max_density_diff) << ','
        << (e.decay.empty() ? "" : format_number(e.decay.front())) << ','
        << (e.decay.empty() ? "" : format_number(e.decay.back())) << ','
        << (e.beta_decay.empty() ? "" : format_number(e.beta_decay.front())) << ','
        << (e.beta_decay.empty() ? "" : format_number(e.beta_decay.back())) << ','
        << (e.decays ? "yes" : "no") << '\n';
  }
}

void write_verification_text(std::ostream &out, std::span<const VerificationEntry> entries,
                             double tolerance) {
  std::size_t failed = 0, not_decaying = 0;
  double worst = 0.0;
  for (const VerificationEntry &e : entries) {
    const ComparisonReport &c = e.comparison;
    const bool ok = c.entropy_diff < tolerance;
    failed += ok ? 0 : 1;
    not_decaying += (e.decay.empty() || e.decays) ? 0 : 1;
    worst = std::max(worst, c.entropy_diff);
    out << fmt::format("{} theta0={:<10} theta1={:<10} {:<14} {:<4}  S_sim={:.6f} S_quad={:.6f} "
                       "|dS|={:.2e} |drho|={:.2e}{}\n",
                       ok ? "PASS" : "FAIL", format_number(c.coins.theta0),
                       format_number(c.coins.theta1), e.init_label, to_string(c.step_parity),
                       c.entropy_simulated, c.entropy_quadrature, c.entropy_diff,
                       c.max_density_diff, (e.decay.empty() || e.decays) ? "" : "  (no decay)");
  }
  out << fmt::format("{} points, {} outside tolerance {:.1e} (worst |dS| = {:.2e}), "
                     "{} without residual decay\n",
                     entries.size(), failed, tolerance, worst, not_decaying);
}

} // namespace qwalk
