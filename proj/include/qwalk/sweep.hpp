#pragma once

#include "qwalk/asymptotics.hpp"
#include "qwalk/verify.hpp"

#include <string>
#include <vector>

namespace qwalk {

/// Which route produced an asymptotic value.
enum class Source { quadrature, closed_form, simulation };

const char *to_string(Source s);

struct AsymptoticValue {
  CoinDensity density;
  double entropy = 0.0;
  Source source = Source::quadrature;
  double residual = 0.0;
  std::size_t skipped_nodes = 0;
};

/// Quadrature when possible. Cells refused as degenerate fall back to the
/// closed form of a matching bounded walk, then to the time average of a
/// direct simulation over `fallback`.
AsymptoticValue asymptotic_entanglement(const CoinPair &coins, const WalkState &init,
                                        Parity step_parity, const QuadratureSpec &spec = {},
                                        Execution exec = Execution::parallel,
                                        const AverageWindow &fallback = {});

struct AxisRange {
  double lo = 0.0;
  double hi = pi;
  std::size_t points = 41;

  /// lo + i (hi - lo)/(points - 1), with the last point exactly hi.
  double at(std::size_t i) const;
};

struct SweepGrid {
  AxisRange theta0;
  AxisRange theta1;
};

struct SweepRow {
  std::size_t i = 0; ///< theta0 index
  std::size_t j = 0; ///< theta1 index
  CoinPair coins;
  Parity step_parity = Parity::even;
  AsymptoticValue value;
  /// Empty on success; otherwise the per-cell failure message.
  std::string error;
};

/// Row-major (theta0 outer) table of asymptotic values. Cells are computed
/// independently and concurrently; failures are recorded, never thrown.
std::vector<SweepRow> sweep(const SweepGrid &grid, const WalkState &init, Parity step_parity,
                            const QuadratureSpec &spec = {},
                            Execution exec = Execution::parallel);

} // namespace qwalk
