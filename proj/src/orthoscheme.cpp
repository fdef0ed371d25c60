#include "noneuclid/orthoscheme.hpp"

#include <cmath>
#include <numbers>

#include "noneuclid/errors.hpp"
#include "noneuclid/specfun.hpp"

namespace noneuclid::orthoscheme {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;

// Spherical volume routes need a non-degenerate simplex.
OrthoschemeData require_spherical(const OrthoschemeAngles& angles, const char* who) {
  const OrthoschemeData d = classify_orthoscheme(angles);
  if (d.curvature == Curvature::kHyperbolic)
    throw DomainError(std::string(who) + ": hyperbolic orthoscheme volumes are not computed");
  if (d.curvature == Curvature::kSpherical && (angles.alpha <= 0.0 || angles.gamma <= 0.0))
    throw DomainError(std::string(who) + ": degenerate orthoscheme (alpha or gamma is 0)");
  return d;
}

double cos2(double x) { return std::cos(x) * std::cos(x); }
double sin2(double x) { return std::sin(x) * std::sin(x); }

}  // namespace

const char* to_string(Curvature c) {
  switch (c) {
    case Curvature::kSpherical: return "spherical";
    case Curvature::kEuclidean: return "euclidean";
    default: return "hyperbolic";
  }
}

OrthoschemeData classify_orthoscheme(const OrthoschemeAngles& angles) {
  constexpr double slack = 1e-12;
  const auto [alpha, beta, gamma] = angles;
  if (!(alpha >= -slack && alpha <= kHalfPi + slack && gamma >= -slack &&
        gamma <= kHalfPi + slack && beta >= -slack && beta <= kPi + slack))
    throw DomainError(
        "classify_orthoscheme: requires 0 <= alpha, gamma <= pi/2 and 0 <= beta <= pi");

  OrthoschemeData d{};
  d.gap = cos2(alpha) * cos2(gamma) - cos2(beta);
  if (std::abs(d.gap) <= kEuclideanBand) {
    d.curvature = Curvature::kEuclidean;
    d.D = 0.0;
    d.X = 1.0;
    d.theta = kHalfPi;
    return d;
  }
  if (d.gap < 0.0) {
    d.curvature = Curvature::kHyperbolic;
    return d;
  }
  d.curvature = Curvature::kSpherical;
  const double D = std::sqrt(d.gap);
  const double ss = std::sin(alpha) * std::sin(gamma);
  d.D = D;
  d.X = (ss - D) / (ss + D);
  d.T = ss / D;
  d.theta = std::atan(*d.T);
  return d;
}

double volume_orthoscheme_schlaefli(const OrthoschemeAngles& angles, double tol) {
  const OrthoschemeData d = require_spherical(angles, "volume_orthoscheme_schlaefli");
  if (d.curvature == Curvature::kEuclidean) return 0.0;
  const auto args = specfun::make_schlaefli_args(angles.alpha, angles.beta, angles.gamma);
  return specfun::schlaefli_series(args, 4 * tol) / 4;
}

double volume_via_delta(const OrthoschemeAngles& angles, double tol) {
  const OrthoschemeData d = require_spherical(angles, "volume_via_delta");
  if (d.curvature == Curvature::kEuclidean) return 0.0;
  const double th = *d.theta;
  using specfun::delta_s;
  return (-delta_s(angles.alpha, th, tol) + delta_s(angles.beta, th, tol) -
          delta_s(angles.gamma, th, tol) + delta_s(0.0, th, tol)) /
         4;
}

double volume_orthoscheme_integral(const OrthoschemeAngles& angles, double tol) {
  const OrthoschemeData d = require_spherical(angles, "volume_orthoscheme_integral");
  if (d.curvature == Curvature::kEuclidean) return 0.0;
  // (t²+X²)/(1+X²) = 1 + h cos²x with h = t² - 1; B = ∞ at β = π/2 needs no care
  const double ka = cos2(angles.alpha), kb = cos2(angles.beta), kc = cos2(angles.gamma);
  auto g = [=](double t) {
    const double h = (t - 1) * (t + 1);
    if (std::abs(h) < 1e-6) {
      auto lin = [h](double k) { return k - k * k * h / 2 + k * k * k * h * h / 3; };
      return lin(kb) + lin(1.0) - lin(ka) - lin(kc);
    }
    return (std::log1p(h * kb) + std::log1p(h) - std::log1p(h * ka) - std::log1p(h * kc)) / h;
  };
  const auto r =
      quadrature::integrate_semiinfinite(g, *d.T, quadrature::Tail::kUpward, 4 * tol);
  return -r.value / 4;
}

OrthoschemeEdges orthoscheme_edges(const OrthoschemeData& data, const OrthoschemeAngles& angles) {
  if (data.curvature != Curvature::kSpherical || !data.T)
    throw DomainError("orthoscheme_edges: defined for spherical orthoschemes only");
  const double T = *data.T;
  auto edge = [T](double x) { return std::atan2(std::sin(x), T * std::cos(x)); };
  return {edge(angles.alpha), edge(angles.beta), edge(angles.gamma)};
}

double cosine_rule_residual(const OrthoschemeEdges& e, const OrthoschemeAngles& angles) {
  return std::abs(std::cos(angles.beta) * std::cos(e.a) * std::cos(e.c) -
                  std::cos(e.b) * std::cos(angles.alpha) * std::cos(angles.gamma));
}

double biquadratic_residual(const OrthoschemeData& data, const OrthoschemeAngles& angles) {
  if (data.curvature != Curvature::kSpherical || !data.T)
    throw DomainError("biquadratic_residual: defined for spherical orthoschemes only");
  const double t2 = *data.T * *data.T;
  auto k = [t2](double x) { return t2 * cos2(x) + sin2(x); };  // (T²+X²)/(1+X²)
  return t2 * k(angles.beta) / (k(angles.alpha) * k(angles.gamma)) - 1;
}

}  // namespace noneuclid::orthoscheme
