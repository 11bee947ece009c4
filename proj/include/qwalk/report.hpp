#pragma once

#include "qwalk/entanglement.hpp"
#include "qwalk/sweep.hpp"
#include "qwalk/verify.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace qwalk {

/// 12 significant digits, negative zero printed as 0.
std::string format_number(double x);

struct SimulationRow {
  long t;
  double entropy;
  CoinDensity density;
  Support support;
};

void write_simulation_csv(std::ostream &out, std::span<const SimulationRow> rows);

void write_sweep_csv(std::ostream &out, std::span<const SweepRow> rows);

/// Static heatmap of S_E over (theta0, theta1) with a linear colour map.
void write_heatmap_svg(std::ostream &out, std::span<const SweepRow> rows,
                       const std::string &title);

void write_verification_csv(std::ostream &out, std::span<const VerificationEntry> entries);
void write_verification_text(std::ostream &out, std::span<const VerificationEntry> entries,
                             double tolerance);

} // namespace qwalk
