#include "noneuclid/lambert.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "noneuclid/errors.hpp"
#include "noneuclid/specfun.hpp"

namespace noneuclid::lambert {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kRightAngleGuard = 1e-9;

bool in_open(double x, double lo, double hi) { return x > lo && x < hi; }

// log R / h where h = t² - 1 and
// R = (t²+L²)(t²+M²)(t²+N²) / ((1+L²)(1+M²)(1+N²) t²).
// With k = cos²(angle), (t²+L²)/(1+L²) = 1 + h k and t² = 1 + h, so R has no
// tangents in it and the point h = 0 (t = ±1) is a removable singularity.
class LogRatioOverH {
 public:
  explicit LogRatioOverH(const CubeAngles& a)
      : k_{std::cos(a.alpha) * std::cos(a.alpha), std::cos(a.beta) * std::cos(a.beta),
           std::cos(a.gamma) * std::cos(a.gamma)} {}

  double operator()(double h) const {
    if (std::abs(h) < 1e-6) {
      double v = -(1 - h / 2 + h * h / 3);
      for (double k : k_) v += k - k * k * h / 2 + k * k * k * h * h / 3;
      return v;
    }
    double v = -std::log1p(h);
    for (double k : k_) v += std::log1p(h * k);
    return v / h;
  }

 private:
  std::array<double, 3> k_;
};

}  // namespace

const char* to_string(Geometry g) {
  return g == Geometry::kSpherical ? "spherical" : "hyperbolic";
}

CubeAngles classify(double alpha, double beta, double gamma) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(gamma))
    throw DomainError("classify: angles must be finite");
  for (double x : {alpha, beta, gamma}) {
    if (std::abs(x - kHalfPi) < kRightAngleGuard)
      throw DomainError("classify: angle too close to pi/2");
  }
  if (in_open(alpha, kHalfPi, kPi) && in_open(beta, kHalfPi, kPi) && in_open(gamma, kHalfPi, kPi))
    return {alpha, beta, gamma, Geometry::kSpherical};
  if (in_open(alpha, 0.0, kHalfPi) && in_open(beta, 0.0, kHalfPi) && in_open(gamma, 0.0, kHalfPi))
    return {alpha, beta, gamma, Geometry::kHyperbolic};
  throw DomainError(
      "classify: angles must all lie in (pi/2, pi) (spherical) or all in (0, pi/2) (hyperbolic)");
}

PrincipalData principal_spherical(const CubeAngles& angles) {
  if (angles.geometry != Geometry::kSpherical)
    throw DomainError("principal_spherical: cube is not spherical");
  PrincipalData pd{};
  pd.geometry = Geometry::kSpherical;
  pd.L = std::tan(angles.alpha);
  pd.M = std::tan(angles.beta);
  pd.N = std::tan(angles.gamma);
  pd.p = (pd.L * pd.L + pd.M * pd.M + pd.N * pd.N + 1) / 2;
  const double lmn = pd.L * pd.M * pd.N;
  const double q = lmn * lmn;
  // -p + √(p²+q) without the cancellation, then one Newton step on s² + 2ps - q
  double s = q / (pd.p + std::hypot(pd.p, lmn));
  s -= (s * s + 2 * pd.p * s - q) / (2 * s + 2 * pd.p);
  pd.T = -std::sqrt(s);
  pd.theta = kPi + std::atan(pd.T);
  pd.abc = abc(pd);
  return pd;
}

PrincipalData principal_hyperbolic(const CubeAngles& angles) {
  if (angles.geometry != Geometry::kHyperbolic)
    throw DomainError("principal_hyperbolic: cube is not hyperbolic");
  PrincipalData pd{};
  pd.geometry = Geometry::kHyperbolic;
  pd.L = std::tan(angles.alpha);
  pd.M = std::tan(angles.beta);
  pd.N = std::tan(angles.gamma);
  pd.p = (pd.L * pd.L + pd.M * pd.M + pd.N * pd.N + 1) / 2;
  const double lmn = pd.L * pd.M * pd.N;
  pd.T = std::sqrt(pd.p + std::hypot(pd.p, lmn));
  pd.theta = std::atan(pd.T);
  return pd;
}

PrincipalData principal(const CubeAngles& angles) {
  return angles.geometry == Geometry::kSpherical ? principal_spherical(angles)
                                                 : principal_hyperbolic(angles);
}

Abc abc(const PrincipalData& pd) {
  if (pd.geometry != Geometry::kSpherical) throw DomainError("abc: defined for spherical cubes only");
  const double t2 = pd.T * pd.T;
  return {std::sqrt((t2 + pd.M * pd.M) / (1 + pd.N * pd.N)),
          std::sqrt((t2 + pd.N * pd.N) / (1 + pd.L * pd.L)),
          std::sqrt((t2 + pd.L * pd.L) / (1 + pd.M * pd.M))};
}

double quartic_residual(const PrincipalData& pd) {
  const double s = pd.T * pd.T;
  const double lmn = pd.L * pd.M * pd.N;
  const double q = lmn * lmn;
  const double sign = pd.geometry == Geometry::kSpherical ? 1.0 : -1.0;
  return std::abs(s * s + sign * 2 * pd.p * s - q) / (s * s + 2 * pd.p * s + q);
}

EuclideanRealization euclidean_realization(double A, double B, double C) {
  if (!(A > 0.0 && B > 0.0 && C > 0.0))
    throw DomainError("euclidean_realization: A, B, C must be positive");
  return {1 + 1 / (A * A), 1 + 1 / (B * B), 1 + 1 / (C * C)};
}

EdgeLengths edge_lengths_spherical(const PrincipalData& pd) {
  if (pd.geometry != Geometry::kSpherical)
    throw DomainError("edge_lengths_spherical: cube is not spherical");
  return {std::atan(pd.L / pd.T), std::atan(pd.M / pd.T), std::atan(pd.N / pd.T)};
}

EdgeLengths edge_lengths_from_abc(const Abc& v) {
  if (!(v.A > 0.0 && v.B > 0.0 && v.C > 0.0))
    throw DomainError("edge_lengths_from_abc: A, B, C must be positive");
  return {std::atan2(std::sqrt(v.A * v.A + 1), v.A * v.B),
          std::atan2(std::sqrt(v.B * v.B + 1), v.B * v.C),
          std::atan2(std::sqrt(v.C * v.C + 1), v.A * v.C)};
}

VolumeEstimate volume_spherical_detailed(const CubeAngles& angles, double tol) {
  const PrincipalData pd = principal_spherical(angles);
  const double each = tol / 2;
  double value = 0.0, err = 0.0;
  auto add = [&](double weight, double angle) {
    const auto r = specfun::delta_s_quad(angle, pd.theta, each);
    value += weight * r.value;
    err += std::abs(weight) * r.err_estimate;
  };
  add(1, angles.alpha);
  add(1, angles.beta);
  add(1, angles.gamma);
  add(-2, kHalfPi);
  add(-1, 0.0);
  return {value / 4, err / 4};
}

double volume_spherical(const CubeAngles& angles, double tol) {
  return volume_spherical_detailed(angles, tol).value;
}

VolumeEstimate volume_spherical_integral_detailed(const CubeAngles& angles, double tol,
                                                  IntegralPath path) {
  const PrincipalData pd = principal_spherical(angles);
  const LogRatioOverH g(angles);
  quadrature::QuadResult r;
  if (path == IntegralPath::kSemiInfinite) {
    r = quadrature::integrate_semiinfinite([&g](double t) { return g((t - 1) * (t + 1)); }, pd.T,
                                           quadrature::Tail::kDownward, 4 * tol);
  } else {
    // t = tan τ over τ ∈ (π/2, θ): t² - 1 = -cos2τ / cos²τ, dt = dτ / cos²τ
    quadrature::IntegrationProblem p;
    p.integrand = [&g](double tau) {
      const double c = std::cos(tau);
      const double c2 = c * c;
      return g(-std::cos(2 * tau) / c2) / c2;
    };
    p.lower = kHalfPi;
    p.upper = pd.theta;
    p.abs_tol = 4 * tol;
    r = quadrature::integrate(p);
  }
  return {r.value / 4, r.err_estimate / 4};
}

double volume_spherical_integral(const CubeAngles& angles, double tol, IntegralPath path) {
  return volume_spherical_integral_detailed(angles, tol, path).value;
}

double volume_hyperbolic(const CubeAngles& angles) {
  const PrincipalData pd = principal_hyperbolic(angles);
  const double th = pd.theta;
  using specfun::delta_cap;
  return (delta_cap(angles.alpha, th) + delta_cap(angles.beta, th) + delta_cap(angles.gamma, th) -
          2 * delta_cap(kHalfPi, th) - delta_cap(0.0, th)) /
         4;
}

SpecialFamilyVolume volume_special_family(double alpha, double beta) {
  if (!(in_open(alpha, kHalfPi, kPi) && in_open(beta, kHalfPi, kPi)))
    throw DomainError("volume_special_family: requires pi/2 < alpha, beta < pi");
  const double ca = std::cos(alpha), cb = std::cos(beta);
  const double rest = 1 - ca * ca - cb * cb;
  if (!(rest > 0.0))
    throw DomainError("volume_special_family: cos^2(alpha) + cos^2(beta) must be below 1");
  const double gamma = kPi - std::acos(std::sqrt(rest));
  const double da = kPi - alpha, db = kPi - beta, dg = kPi - gamma;
  return {gamma, (kPi * kPi / 2 - da * da - db * db - dg * dg) / 4};
}

double volume_singular(double alpha, double beta) {
  if (!(in_open(alpha, kHalfPi, kPi) && in_open(beta, kHalfPi, kPi)))
    throw DomainError("volume_singular: requires pi/2 < alpha, beta < pi");
  return kPi * (alpha + beta - kPi) / 4;
}

}  // namespace noneuclid::lambert
