#pragma once

// Volume sweeps over a rectangular grid of Lambert-cube angles.

#include <cstddef>
#include <optional>
#include <vector>

#include "noneuclid/lambert.hpp"
#include "noneuclid/parallel.hpp"

namespace noneuclid::sweep {

/// `count` evenly spaced values from `start` to `stop`, both inclusive.
/// count == 1 is a fixed value (stop is ignored).
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  double at(std::size_t i) const;
};

/// Grid points are ordered with alpha varying slowest and gamma fastest.
struct SweepGrid {
  AxisRange alpha;
  AxisRange beta;
  AxisRange gamma;

  std::size_t size() const { return alpha.count * beta.count * gamma.count; }
  void point(std::size_t index, double& a, double& b, double& g) const;
};

struct VolumeRow {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta = 0.0;
  double T = 0.0;
  double volume = 0.0;
  std::optional<double> err_estimate;  // no quadrature behind hyperbolic volumes
};

/// Throws DomainError naming the first grid point that is not a cube of the
/// requested geometry.
void validate_grid(const SweepGrid& grid, lambert::Geometry geometry);

/// Rows for grid indices [begin, end), in index order. No validation beyond
/// what each volume routine does itself.
std::vector<VolumeRow> evaluate_rows(const SweepGrid& grid, lambert::Geometry geometry, double tol,
                                     std::size_t begin, std::size_t end,
                                     Execution exec = Execution::kParallel);

/// validate_grid, then every row.
std::vector<VolumeRow> sweep_volumes(const SweepGrid& grid, lambert::Geometry geometry, double tol,
                                     Execution exec = Execution::kParallel);

}  // namespace noneuclid::sweep
