#pragma once

// Self-check suite: every cross-formula identity packaged as a named check.
// Checks never throw on a failed identity; they report residuals instead.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "noneuclid/parallel.hpp"

namespace noneuclid::verify {

struct Failure {
  std::string input;
  double residual;
};

struct CheckReport {
  std::string name;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::size_t sample_count = 0;
  bool passed = true;  // max_residual <= tolerance
  std::vector<Failure> failures;
};

struct CheckOptions {
  std::uint64_t seed = 42;
  /// Quadrature tolerance; each check lowers it to 1% of its own tolerance.
  double quad_tol = 1e-10;
  Execution exec = Execution::kParallel;
};

/// Random draws stay this far (radians) from every domain boundary.
inline constexpr double kSampleMargin = 0.05;

CheckReport check_tangent_rule(std::size_t samples, const CheckOptions& opts = {});
CheckReport check_sine_cosine(std::size_t samples, const CheckOptions& opts = {});
CheckReport check_schlaefli_derivative(std::size_t samples, double step = 1e-4,
                                       const CheckOptions& opts = {});
/// ∂V/∂α = -a/2, ∂V/∂β = b/2, ∂V/∂γ = -c/2 on random spherical orthoschemes.
CheckReport check_schlaefli_derivative_orthoscheme(std::size_t samples, double step = 1e-4,
                                                   const CheckOptions& opts = {});
/// δ symmetries, periodicity and the δ̃ bound on a grid × grid lattice of
/// [0,π] × [-π,π].
CheckReport check_delta_properties(std::size_t grid, const CheckOptions& opts = {});
CheckReport check_td1_closed_forms(std::size_t samples, const CheckOptions& opts = {});
CheckReport check_p2_arccot(std::size_t samples, const CheckOptions& opts = {});
/// Also evaluates the two extra points at distance 1e-3 from the ends of the θ range.
CheckReport check_dilog_relation(std::size_t samples, const CheckOptions& opts = {});
CheckReport check_lobachevsky_relation(std::size_t samples, const CheckOptions& opts = {});
/// Cube: the δ-sum volume against both integral paths. Orthoscheme: series,
/// δ sum and integral against each other.
CheckReport check_volume_routes(std::size_t samples, const CheckOptions& opts = {});

/// Every check at its default sample size.
std::vector<CheckReport> run_all(const CheckOptions& opts = {});

}  // namespace noneuclid::verify
