#include "qwalk/quadrature.hpp"
#include "qwalk/error.hpp"

#include <fmt/core.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qwalk {

void QuadratureSpec::validate() const {
  if (nodes < 64 || nodes % 2 != 0)
    throw std::invalid_argument("quadrature nodes must be even and >= 64, got " +
                                std::to_string(nodes));
  if (refinement < 2)
    throw std::invalid_argument("quadrature refinement factor must be >= 2");
  if (max_refinements < 1)
    throw std::invalid_argument("at least one quadrature refinement is required");
  if (!(tolerance > 0.0))
    throw std::invalid_argument("quadrature tolerance must be positive");
}

double grid_node(std::size_t j, std::size_t nodes, bool offset) {
  const double h = 2.0 * pi / static_cast<double>(nodes);
  return -pi + (static_cast<double>(j) + (offset ? 0.5 : 0.0)) * h;
}

namespace {

// Patches flagged nodes from their neighbours and reduces in index order.
GridAverage reduce(std::vector<Complex> &buffer, const std::vector<char> &flagged,
                   std::size_t channels, std::size_t nodes) {
  GridAverage out;
  out.values.assign(channels, Complex{});
  for (std::size_t j = 0; j < nodes; ++j) {
    if (!flagged[j])
      continue;
    const std::size_t prev = (j + nodes - 1) % nodes;
    const std::size_t next = (j + 1) % nodes;
    if (flagged[prev] || flagged[next])
      throw DegenerateParameters("degenerate momenta are not isolated on a " +
                                 std::to_string(nodes) + "-node grid");
    for (std::size_t c = 0; c < channels; ++c)
      buffer[j * channels + c] = 0.5 * (buffer[prev * channels + c] + buffer[next * channels + c]);
    ++out.skipped_nodes;
  }
  for (std::size_t j = 0; j < nodes; ++j)
    for (std::size_t c = 0; c < channels; ++c)
      out.values[c] += buffer[j * channels + c];
  const double inv = 1.0 / static_cast<double>(nodes);
  for (Complex &v : out.values)
    v *= inv;
  return out;
}

} // namespace

GridAverage grid_average_parallel(const NodeFunction &f, std::size_t channels,
                                  std::size_t nodes, bool offset) {
  std::vector<Complex> buffer(nodes * channels);
  std::vector<char> flagged(nodes, 0);
  const long n = static_cast<long>(nodes);
#pragma omp parallel for schedule(static)
  for (long j = 0; j < n; ++j) {
    const auto idx = static_cast<std::size_t>(j);
    const std::span<Complex> slot(buffer.data() + idx * channels, channels);
    flagged[idx] = f(grid_node(idx, nodes, offset), slot) ? 0 : 1;
  }
  return reduce(buffer, flagged, channels, nodes);
}

GridAverage grid_average_serial(const NodeFunction &f, std::size_t channels,
                                std::size_t nodes, bool offset) {
  std::vector<Complex> buffer(nodes * channels);
  std::vector<char> flagged(nodes, 0);
  for (std::size_t j = 0; j < nodes; ++j) {
    const std::span<Complex> slot(buffer.data() + j * channels, channels);
    flagged[j] = f(grid_node(j, nodes, offset), slot) ? 0 : 1;
  }
  return reduce(buffer, flagged, channels, nodes);
}

QuadratureResult integrate_periodic(const NodeFunction &f, std::size_t channels,
                                    const QuadratureSpec &spec, Execution exec) {
  spec.validate();
  const auto average = [&](std::size_t nodes) {
    return exec == Execution::parallel ? grid_average_parallel(f, channels, nodes, spec.offset)
                                       : grid_average_serial(f, channels, nodes, spec.offset);
  };

  std::size_t nodes = spec.nodes;
  GridAverage previous = average(nodes);
  double residual = 0.0;
  for (int r = 0; r < spec.max_refinements; ++r) {
    nodes *= spec.refinement;
    GridAverage current = average(nodes);
    residual = 0.0;
    double scale = 0.0;
    for (std::size_t c = 0; c < channels; ++c) {
      residual = std::max(residual, std::abs(current.values[c] - previous.values[c]));
      scale = std::max(scale, std::abs(current.values[c]));
    }
    if (residual < std::max(spec.tolerance, spec.relative_tolerance * scale))
      return {std::move(current.values), residual, current.skipped_nodes, nodes};
    previous = std::move(current);
  }
  throw ConvergenceError(fmt::format(
      "quadrature did not converge: refinement to {} nodes still changed the result by {:.3g}",
      nodes, residual));
}

Complex integrate_periodic(const std::function<std::optional<Complex>(double)> &f,
                           const QuadratureSpec &spec, Execution exec) {
  const NodeFunction wrapped = [&f](double k, std::span<Complex> out) {
    const auto v = f(k);
    if (!v)
      return false;
    out[0] = *v;
    return true;
  };
  return integrate_periodic(wrapped, 1, spec, exec).values[0];
}

} // namespace qwalk
