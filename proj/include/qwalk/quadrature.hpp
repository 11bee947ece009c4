#pragma once

#include "qwalk/types.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace qwalk {

/// Uniform periodic grid over [-pi, pi) used for every dk/2pi integral.
struct QuadratureSpec {
  std::size_t nodes = 4096;
  /// Shift the grid by half a cell so that k = 0 and k = +-pi are never nodes.
  bool offset = true;
  std::size_t refinement = 2;
  /// Number of refinements attempted before giving up.
  int max_refinements = 2;
  double tolerance = 1e-8;
  /// Also accept a change below this fraction of the largest channel value.
  double relative_tolerance = 0.0;

  /// Throws std::invalid_argument unless nodes >= 64 and even, refinement >= 2.
  void validate() const;
};

enum class Execution { serial, parallel };

/// Evaluates `channels` integrands at momentum k into `out`. Returns false
/// when k is a flagged (degenerate) node.
using NodeFunction = std::function<bool(double k, std::span<Complex> out)>;

struct GridAverage {
  std::vector<Complex> values;
  std::size_t skipped_nodes = 0;
};

struct QuadratureResult {
  std::vector<Complex> values;
  /// |I(finest) - I(previous)| maximized over channels.
  double residual = 0.0;
  std::size_t skipped_nodes = 0;
  std::size_t nodes = 0;
};

double grid_node(std::size_t j, std::size_t nodes, bool offset);

/// Mean of f over one grid. Flagged nodes are replaced by the mean of their
/// two neighbours; a flagged node with a flagged neighbour throws
/// DegenerateParameters. Node values are computed with OpenMP and reduced in
/// index order, so the result does not depend on the thread count.
GridAverage grid_average_parallel(const NodeFunction &f, std::size_t channels,
                                  std::size_t nodes, bool offset);

/// Single-threaded reference for grid_average_parallel; bitwise identical.
GridAverage grid_average_serial(const NodeFunction &f, std::size_t channels,
                                std::size_t nodes, bool offset);

/// Integral of f over dk/2pi with refinement until two successive grids agree
/// within spec.tolerance. Throws ConvergenceError otherwise.
QuadratureResult integrate_periodic(const NodeFunction &f, std::size_t channels,
                                    const QuadratureSpec &spec = {},
                                    Execution exec = Execution::parallel);

/// Scalar convenience form; nullopt marks a flagged node.
Complex integrate_periodic(const std::function<std::optional<Complex>(double)> &f,
                           const QuadratureSpec &spec = {},
                           Execution exec = Execution::parallel);

} // namespace qwalk
