#pragma once

// Special functions behind the Lambert-cube and orthoscheme volume formulas.
//
//   Lobachevsky   Λ(x) = -∫_0^x log|2 sin t| dt
//   difference    Δ(α,θ) = Λ(α+θ) - Λ(α-θ)
//   spherical δ   δ(α,θ) = ∫_θ^{π/2} log(1 - cos2α cos2τ) dτ / cos2τ
//   reduced δ     δ̃(α,θ) = δ(α,θ) + (2θ/π - 1) δ(α,0)
//   dilogarithm   Li₂(r,t) = -(1/2) ∫_0^r log(1 - 2x cos t + x²) dx / x
//   Schläfli      S(α,β,γ) = Σ (-X)ⁿ/n² (cos2nα - cos2nβ + cos2nγ - 1) - α² + β² - γ²
//
// All angles are radians.

#include "noneuclid/quadrature.hpp"

namespace noneuclid::specfun {

using quadrature::kDefaultAbsTol;
using quadrature::QuadResult;

/// Λ(x) for any finite x, to machine precision.
double lobachevsky(double x);

/// Δ(α,θ) = Λ(α+θ) - Λ(α-θ).
double delta_cap(double alpha, double theta);

/// δ(α,θ) by direct quadrature of its defining integral, for any finite
/// arguments. The interval is split at every multiple of π/2 it crosses so
/// the logarithmic singularities of the integrand only occur at segment ends.
QuadResult delta_s_quad(double alpha, double theta, double tol = kDefaultAbsTol);
double delta_s(double alpha, double theta, double tol = kDefaultAbsTol);

/// Closed forms of δ(α,θ) for α in [0,π] and θ in {0, π/4, π/2, 3π/4, π}.
/// θ is matched against those values within 1e-12; anything else is a DomainError.
double delta_s_closed(double alpha, double theta);

/// δ(α,θ) = 2∫_{3π/4}^{α} arccot(cot ν / cot θ) dν, valid for π/2 < α, θ < π.
double delta_s_arccot(double alpha, double theta, double tol = kDefaultAbsTol);

/// δ(α,θ) after reducing the arguments to α ∈ [0,π/2], θ ∈ [0,π/2] through the
/// evenness, reflection and (linear) periodicity identities.
double delta_s_extended(double alpha, double theta, double tol = kDefaultAbsTol);

/// δ̃(α,θ) = δ(α,θ) + (2θ/π - 1) δ(α,0).
double delta_s_reduced(double alpha, double theta, double tol = kDefaultAbsTol);

/// ∂δ/∂α in closed form. Throws DomainError at α = π/2 + kπ, where δ is not
/// differentiable in α.
double delta_s_dalpha(double alpha, double theta);

/// arccot on the branch (0, π).
double arccot(double x);

/// Li₂(r,t). Throws DomainError when the integrand's log singularity
/// (x = 1 with cos t = 1, or x = -1 with cos t = -1) lies in the range.
double dilog2(double r, double t, double tol = kDefaultAbsTol);

struct SchlaefliArgs {
  double alpha;
  double beta;
  double gamma;
  double D;  // sqrt(cos²α cos²γ - cos²β)
  double X;  // (sinα sinγ - D) / (sinα sinγ + D)
};

/// Computes D and X; DomainError when cos²α cos²γ < cos²β (D not real) or
/// the angles leave 0 ≤ α,γ ≤ π/2, 0 ≤ β ≤ π.
SchlaefliArgs make_schlaefli_args(double alpha, double beta, double gamma);

/// S(α,β,γ) by its series, truncated once the geometric tail bound drops
/// below `tol`. DomainError when |X| > 1 - 1e-12.
double schlaefli_series(const SchlaefliArgs& args, double tol = kDefaultAbsTol);

}  // namespace noneuclid::specfun
