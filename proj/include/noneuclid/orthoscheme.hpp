#pragma once

// Double-rectangular tetrahedra T(α,β,γ) with essential dihedral angles
// π/2 - α, β and π/2 - γ. Spherical when cos²α cos²γ > cos²β, Euclidean on
// equality, hyperbolic otherwise. Volumes are computed for the spherical case
// only, by three independent routes.

#include <optional>

#include "noneuclid/quadrature.hpp"

namespace noneuclid::orthoscheme {

using quadrature::kDefaultAbsTol;

enum class Curvature { kSpherical, kEuclidean, kHyperbolic };

const char* to_string(Curvature c);

/// 0 ≤ α ≤ π/2, 0 ≤ β ≤ π, 0 ≤ γ ≤ π/2.
struct OrthoschemeAngles {
  double alpha;
  double beta;
  double gamma;
};

/// |cos²α cos²γ - cos²β| at or below this counts as Euclidean.
inline constexpr double kEuclideanBand = 1e-12;

struct OrthoschemeData {
  Curvature curvature;
  double gap;                   // cos²α cos²γ - cos²β
  std::optional<double> D;      // √gap; 0 on the Euclidean boundary
  std::optional<double> X;      // (sinα sinγ - D)/(sinα sinγ + D)
  std::optional<double> T;      // sinα sinγ / D, spherical only
  std::optional<double> theta;  // atan T; π/2 on the Euclidean boundary
};

/// DomainError only for angles outside the bounds above.
OrthoschemeData classify_orthoscheme(const OrthoschemeAngles& angles);

/// S(α,β,γ)/4 through the Schläfli series. 0 on the Euclidean boundary.
double volume_orthoscheme_schlaefli(const OrthoschemeAngles& angles, double tol = kDefaultAbsTol);

/// (-δ(α,θ) + δ(β,θ) - δ(γ,θ) + δ(0,θ))/4. 0 on the Euclidean boundary.
double volume_via_delta(const OrthoschemeAngles& angles, double tol = kDefaultAbsTol);

/// -(1/4)∫_T^∞ log[(1+A²)(t²+B²)(1+C²)t² / ((t²+A²)(1+B²)(t²+C²))] dt/(t²-1)
/// with A, B, C the tangents of α, β, γ. The integral itself is negative; its
/// negation is the volume. 0 on the Euclidean boundary.
double volume_orthoscheme_integral(const OrthoschemeAngles& angles, double tol = kDefaultAbsTol);

/// Spherical lengths of the edges carrying the dihedral angles π/2-α, β, π/2-γ,
/// from tan α / tan a = tan β / tan b = tan γ / tan c = T. b = π/2 when β = π/2.
struct OrthoschemeEdges {
  double a;
  double b;
  double c;
};

OrthoschemeEdges orthoscheme_edges(const OrthoschemeData& data, const OrthoschemeAngles& angles);

/// |cos β cos a cos c - cos b cos α cos γ|: the Cosine Rule
/// cos β / cos b = (cos α / cos a)(cos γ / cos c) cross-multiplied.
double cosine_rule_residual(const OrthoschemeEdges& edges, const OrthoschemeAngles& angles);

/// (1+A²)(T²+B²)(1+C²)T² / ((T²+A²)(1+B²)(T²+C²)) - 1, written with cosines
/// so β = π/2 is allowed.
double biquadratic_residual(const OrthoschemeData& data, const OrthoschemeAngles& angles);

}  // namespace noneuclid::orthoscheme
