#pragma once

// Adaptive one-dimensional quadrature.
//
// Each segment is integrated with a tanh-sinh (double exponential) rule whose
// step is halved level by level; segments that do not settle are bisected,
// worst error first. The rule never samples a segment endpoint, so integrable
// logarithmic endpoint singularities need no special treatment by callers.

#include <cstddef>
#include <functional>

namespace noneuclid::quadrature {

using Integrand = std::function<double(double)>;

inline constexpr double kDefaultAbsTol = 1e-10;
inline constexpr std::size_t kDefaultMaxEvals = 200'000;
/// Cost of the coarsest estimate of one segment; smaller budgets are rejected.
inline constexpr std::size_t kMinEvals = 17;

struct IntegrationProblem {
  Integrand integrand;
  double lower = 0.0;
  double upper = 0.0;  // may be below `lower`; the result then changes sign
  double abs_tol = kDefaultAbsTol;
  std::size_t max_evals = kDefaultMaxEvals;
};

struct QuadResult {
  double value = 0.0;
  double err_estimate = 0.0;
  std::size_t evals = 0;
  bool converged = false;
};

/// Integrates and reports convergence in the result instead of throwing.
/// Still throws DomainError for a malformed problem and NonFiniteIntegrand.
QuadResult try_integrate(const IntegrationProblem& problem);

/// Like try_integrate, but throws NonConvergence when the budget runs out.
QuadResult integrate(const IntegrationProblem& problem);

/// Which half-line an improper integral covers.
enum class Tail {
  kUpward,    // [bound, +inf)
  kDownward,  // (-inf, bound]
};

/// Improper integral over a half-line, via t = bound +/- u/(1-u), u in (0,1).
QuadResult integrate_semiinfinite(const Integrand& integrand, double bound, Tail tail,
                                  double abs_tol = kDefaultAbsTol,
                                  std::size_t max_evals = kDefaultMaxEvals);

}  // namespace noneuclid::quadrature
