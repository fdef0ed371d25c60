#include "noneuclid/sweep.hpp"

#include <algorithm>
#include <sstream>

#include "noneuclid/errors.hpp"

namespace noneuclid::sweep {
namespace {

VolumeRow evaluate_point(const SweepGrid& grid, lambert::Geometry geometry, double tol,
                         std::size_t index) {
  VolumeRow row;
  grid.point(index, row.alpha, row.beta, row.gamma);
  const auto cube = lambert::classify(row.alpha, row.beta, row.gamma);
  const auto pd = lambert::principal(cube);
  row.theta = pd.theta;
  row.T = pd.T;
  if (geometry == lambert::Geometry::kSpherical) {
    const auto v = lambert::volume_spherical_detailed(cube, tol);
    row.volume = v.value;
    row.err_estimate = v.err_estimate;
  } else {
    row.volume = lambert::volume_hyperbolic(cube);
  }
  return row;
}

}  // namespace

double AxisRange::at(std::size_t i) const {
  if (count <= 1) return start;
  return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
}

void SweepGrid::point(std::size_t index, double& a, double& b, double& g) const {
  const std::size_t k = index % gamma.count;
  const std::size_t j = (index / gamma.count) % beta.count;
  const std::size_t i = index / (gamma.count * beta.count);
  a = alpha.at(i);
  b = beta.at(j);
  g = gamma.at(k);
}

void validate_grid(const SweepGrid& grid, lambert::Geometry geometry) {
  if (grid.alpha.count == 0 || grid.beta.count == 0 || grid.gamma.count == 0)
    throw DomainError("sweep: every axis needs at least one point");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double a, b, g;
    grid.point(i, a, b, g);
    std::ostringstream where;
    where.precision(10);
    where << "sweep: grid point (" << a << ", " << b << ", " << g << ")";
    lambert::CubeAngles cube;
    try {
      cube = lambert::classify(a, b, g);
    } catch (const DomainError& e) {
      throw DomainError(where.str() + ": " + e.what());
    }
    if (cube.geometry != geometry)
      throw DomainError(where.str() + " is not " + lambert::to_string(geometry));
  }
}

std::vector<VolumeRow> evaluate_rows(const SweepGrid& grid, lambert::Geometry geometry, double tol,
                                     std::size_t begin, std::size_t end, Execution exec) {
  end = std::min(end, grid.size());
  if (begin >= end) return {};
  return map_indexed(
      end - begin, [&](std::size_t i) { return evaluate_point(grid, geometry, tol, begin + i); },
      exec);
}

std::vector<VolumeRow> sweep_volumes(const SweepGrid& grid, lambert::Geometry geometry, double tol,
                                     Execution exec) {
  validate_grid(grid, geometry);
  return evaluate_rows(grid, geometry, tol, 0, grid.size(), exec);
}

}  // namespace noneuclid::sweep
