#pragma once

// Lambert cubes Q(α,β,γ): a combinatorial cube with dihedral angles α, β, γ on
// three mutually non-coplanar edges and right angles elsewhere. It is
// spherical for π/2 < α,β,γ < π and hyperbolic for 0 < α,β,γ < π/2.

#include <optional>

#include "noneuclid/quadrature.hpp"

namespace noneuclid::lambert {

using quadrature::kDefaultAbsTol;

enum class Geometry { kSpherical, kHyperbolic };

const char* to_string(Geometry g);

struct CubeAngles {
  double alpha;
  double beta;
  double gamma;
  Geometry geometry;
};

/// Classifies the triple. DomainError when it fits neither open box, or when an
/// angle lies within 1e-9 of π/2 (tan would overflow).
CubeAngles classify(double alpha, double beta, double gamma);

/// Positive reals of the Euclidean polyhedron realizing a spherical cube.
struct Abc {
  double A;
  double B;
  double C;
};

struct PrincipalData {
  Geometry geometry;
  double L;  // tan α
  double M;  // tan β
  double N;  // tan γ
  double p;  // (L² + M² + N² + 1) / 2
  double T;  // tan θ
  double theta;
  std::optional<Abc> abc;  // spherical only
};

/// T < 0 with T⁴ + 2pT² - L²M²N² = 0, θ = π + atan T ∈ (π/2, π).
PrincipalData principal_spherical(const CubeAngles& angles);

/// T > 0 with tan²θ = p + √(p² + L²M²N²), θ = atan T ∈ (π/4, π/2).
PrincipalData principal_hyperbolic(const CubeAngles& angles);

/// Dispatches on angles.geometry.
PrincipalData principal(const CubeAngles& angles);

/// A² = (T²+M²)/(1+N²), B² = (T²+N²)/(1+L²), C² = (T²+L²)/(1+M²), positive roots.
Abc abc(const PrincipalData& pd);

/// |T⁴ ± 2pT² - L²M²N²| / (T⁴ + 2pT² + L²M²N²): the principal quartic's residual
/// relative to the size of its terms.
double quartic_residual(const PrincipalData& pd);

struct EuclideanRealization {
  double a;
  double b;
  double c;
};

/// a = 1 + 1/A², b = 1 + 1/B², c = 1 + 1/C².
EuclideanRealization euclidean_realization(double A, double B, double C);

/// Spherical lengths of the edges carrying α, β, γ; each in (0, π/2).
struct EdgeLengths {
  double l_alpha;
  double l_beta;
  double l_gamma;
};

/// By the Tangent Rule: tan l_α = L/T, etc.
EdgeLengths edge_lengths_spherical(const PrincipalData& pd);

/// Same lengths from A, B, C: tan l_α = √(A²+1)/(AB), tan l_β = √(B²+1)/(BC),
/// tan l_γ = √(C²+1)/(AC). Kept as an independent route for checking.
EdgeLengths edge_lengths_from_abc(const Abc& abc);

struct VolumeEstimate {
  double value;
  double err_estimate;
};

/// V = (1/4)(δ(α,θ) + δ(β,θ) + δ(γ,θ) - 2δ(π/2,θ) - δ(0,θ)).
VolumeEstimate volume_spherical_detailed(const CubeAngles& angles, double tol = kDefaultAbsTol);
double volume_spherical(const CubeAngles& angles, double tol = kDefaultAbsTol);

enum class IntegralPath {
  kSubstituted,   // t = tan τ: one finite integral over (θ, π/2)
  kSemiInfinite,  // the ray (-∞, T] compactified
};

/// V = (1/4)∫_{-∞}^{T} log[(t²+L²)(t²+M²)(t²+N²) / ((1+L²)(1+M²)(1+N²)t²)] dt/(t²-1).
VolumeEstimate volume_spherical_integral_detailed(const CubeAngles& angles,
                                                  double tol = kDefaultAbsTol,
                                                  IntegralPath path = IntegralPath::kSubstituted);
double volume_spherical_integral(const CubeAngles& angles, double tol = kDefaultAbsTol,
                                 IntegralPath path = IntegralPath::kSubstituted);

/// V = (1/4)(Δ(α,θ) + Δ(β,θ) + Δ(γ,θ) - 2Δ(π/2,θ) - Δ(0,θ)).
double volume_hyperbolic(const CubeAngles& angles);

struct SpecialFamilyVolume {
  double gamma;
  double volume;
};

/// For cos²α + cos²β + cos²γ = 1: γ = π - arccos√(1 - cos²α - cos²β) and
/// V = (1/4)(π²/2 - (π-α)² - (π-β)² - (π-γ)²).
SpecialFamilyVolume volume_special_family(double alpha, double beta);

/// Volume of the singular cube Q(α,β,π): the γ → π limit of the spherical
/// volume, π(α + β - π)/4.
double volume_singular(double alpha, double beta);

}  // namespace noneuclid::lambert
