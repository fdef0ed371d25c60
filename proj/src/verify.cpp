#include "noneuclid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>
#include <utility>

#include "noneuclid/errors.hpp"
#include "noneuclid/lambert.hpp"
#include "noneuclid/orthoscheme.hpp"
#include "noneuclid/quadrature.hpp"
#include "noneuclid/specfun.hpp"

namespace noneuclid::verify {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kInf = std::numeric_limits<double>::infinity();

using Sample = std::vector<double>;
using Outcome = std::pair<std::string, double>;

void require_samples(std::size_t n, const char* who) {
  if (n == 0) throw DomainError(std::string(who) + ": needs at least one sample");
}

double quad_tol_for(const CheckOptions& opts, double tolerance) {
  return std::min(opts.quad_tol, 1e-2 * tolerance);
}

std::string describe(const std::vector<const char*>& names, const Sample& values) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < names.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%s%s=%.17g", i ? ", " : "", names[i], values[i]);
    out += buf;
  }
  return out;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  Sample spherical_cube() {
    const double lo = kHalfPi + kSampleMargin, hi = kPi - kSampleMargin;
    const double a = uniform(lo, hi), b = uniform(lo, hi), g = uniform(lo, hi);
    return {a, b, g};
  }

  // β stays kSampleMargin above the Euclidean boundary arccos(cos α cos γ).
  Sample spherical_orthoscheme() {
    for (;;) {
      const double a = uniform(kSampleMargin, kHalfPi - kSampleMargin);
      const double g = uniform(kSampleMargin, kHalfPi - kSampleMargin);
      const double lo = std::acos(std::cos(a) * std::cos(g)) + kSampleMargin;
      const double hi = kHalfPi - kSampleMargin;
      if (lo < hi) return {a, uniform(lo, hi), g};
    }
  }

 private:
  std::mt19937_64 rng_;
};

// Evaluates `residual` on every sample; an exception counts as an infinite
// residual so the offending input still shows up in the report.
template <class Fn>
CheckReport run_check(std::string name, double tolerance, const std::vector<Sample>& samples,
                      const std::vector<const char*>& names, const CheckOptions& opts,
                      Fn residual) {
  const auto outcomes = map_indexed(
      samples.size(),
      [&](std::size_t i) -> Outcome {
        try {
          const double r = residual(samples[i]);
          return {{}, std::isnan(r) ? kInf : r};
        } catch (const std::exception& e) {
          return {std::string(" [") + e.what() + "]", kInf};
        }
      },
      opts.exec);

  CheckReport report;
  report.name = std::move(name);
  report.tolerance = tolerance;
  report.sample_count = samples.size();
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double r = outcomes[i].second;
    report.max_residual = std::max(report.max_residual, r);
    if (!(r <= tolerance)) report.failures.push_back({describe(names, samples[i]) + outcomes[i].first, r});
  }
  report.passed = report.max_residual <= tolerance;
  return report;
}

const std::vector<const char*> kCubeNames{"alpha", "beta", "gamma"};
const std::vector<const char*> kAlphaTheta{"alpha", "theta"};

}  // namespace

CheckReport check_tangent_rule(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_tangent_rule");
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) p = s.spherical_cube();
  return run_check("tangent_rule", 1e-10, pts, kCubeNames, opts, [](const Sample& x) {
    const auto pd = lambert::principal(lambert::classify(x[0], x[1], x[2]));
    const auto l = lambert::edge_lengths_from_abc(*pd.abc);
    const double ratios[] = {pd.L / std::tan(l.l_alpha), pd.M / std::tan(l.l_beta),
                             pd.N / std::tan(l.l_gamma)};
    double worst = 0.0;
    for (double r : ratios) worst = std::max(worst, std::abs(r - pd.T) / std::abs(pd.T));
    return worst;
  });
}

CheckReport check_sine_cosine(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_sine_cosine");
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) p = s.spherical_cube();
  return run_check("sine_cosine", 1e-10, pts, kCubeNames, opts, [](const Sample& x) {
    const auto pd = lambert::principal(lambert::classify(x[0], x[1], x[2]));
    const auto l = lambert::edge_lengths_from_abc(*pd.abc);
    const double len[] = {l.l_alpha, l.l_beta, l.l_gamma};
    double worst = 0.0;
    for (int k = 0; k < 3; ++k) {
      const int i = k, j = (k + 1) % 3, c = (k + 2) % 3;
      const double product = std::sin(x[i]) / std::sin(len[i]) * std::sin(x[j]) / std::sin(len[j]) *
                             std::cos(x[c]) / std::cos(len[c]);
      worst = std::max(worst, std::abs(product + 1));
    }
    return worst;
  });
}

CheckReport check_schlaefli_derivative(std::size_t samples, double step, const CheckOptions& opts) {
  require_samples(samples, "check_schlaefli_derivative");
  if (!(step > 0.0)) throw DomainError("check_schlaefli_derivative: step must be positive");
  const double tol = 1e-6;
  const double qtol = quad_tol_for(opts, tol * step);
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) p = s.spherical_cube();
  return run_check("schlaefli_derivative", tol, pts, kCubeNames, opts, [=](const Sample& x) {
    const auto pd = lambert::principal(lambert::classify(x[0], x[1], x[2]));
    const auto l = lambert::edge_lengths_spherical(pd);
    const double half[] = {l.l_alpha / 2, l.l_beta / 2, l.l_gamma / 2};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) {
      Sample up = x, down = x;
      up[i] += step;
      down[i] -= step;
      const double vu = lambert::volume_spherical(lambert::classify(up[0], up[1], up[2]), qtol);
      const double vd = lambert::volume_spherical(lambert::classify(down[0], down[1], down[2]), qtol);
      worst = std::max(worst, std::abs((vu - vd) / (2 * step) - half[i]));
    }
    return worst;
  });
}

CheckReport check_schlaefli_derivative_orthoscheme(std::size_t samples, double step,
                                                   const CheckOptions& opts) {
  require_samples(samples, "check_schlaefli_derivative_orthoscheme");
  if (!(step > 0.0))
    throw DomainError("check_schlaefli_derivative_orthoscheme: step must be positive");
  const double tol = 1e-6;
  const double qtol = quad_tol_for(opts, tol * step);
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) p = s.spherical_orthoscheme();
  return run_check("schlaefli_derivative_orthoscheme", tol, pts, kCubeNames, opts,
                   [=](const Sample& x) {
                     const orthoscheme::OrthoschemeAngles ang{x[0], x[1], x[2]};
                     const auto e = orthoscheme::orthoscheme_edges(orthoscheme::classify_orthoscheme(ang), ang);
                     const double expected[] = {-e.a / 2, e.b / 2, -e.c / 2};
                     double worst = 0.0;
                     for (int i = 0; i < 3; ++i) {
                       Sample up = x, down = x;
                       up[i] += step;
                       down[i] -= step;
                       const double vu = orthoscheme::volume_via_delta({up[0], up[1], up[2]}, qtol);
                       const double vd = orthoscheme::volume_via_delta({down[0], down[1], down[2]}, qtol);
                       worst = std::max(worst, std::abs((vu - vd) / (2 * step) - expected[i]));
                     }
                     return worst;
                   });
}

CheckReport check_delta_properties(std::size_t grid, const CheckOptions& opts) {
  if (grid < 2) throw DomainError("check_delta_properties: grid needs at least 2 points per axis");
  const double tol = 1e-9;
  const double qtol = quad_tol_for(opts, tol);
  std::vector<Sample> pts;
  pts.reserve(grid * grid);
  for (std::size_t i = 0; i < grid; ++i)
    for (std::size_t j = 0; j < grid; ++j)
      pts.push_back({kPi * static_cast<double>(i) / static_cast<double>(grid - 1),
                     -kPi + 2 * kPi * static_cast<double>(j) / static_cast<double>(grid - 1)});
  return run_check("delta_properties", tol, pts, kAlphaTheta, opts, [=](const Sample& x) {
    const double a = x[0], t = x[1];
    auto d = [qtol](double al, double th) { return specfun::delta_s(al, th, qtol); };
    const double v = d(a, t), v0 = d(a, 0.0);
    const double residuals[] = {
        std::abs(v - d(-a, t)),                                  // even in α
        std::abs(v + d(a, -t) - 2 * v0),                         // reflection in θ
        std::abs(v - d(kPi - a, t)),                             // α ↦ π - α
        std::abs(v + d(a, kPi - t)),                             // θ ↦ π - θ
        std::abs(v - d(a + kPi, t)),                             // π-periodic in α
        std::abs(d(a, t + kPi) - v + 2 * v0),                    // linear periodicity in θ
        std::abs(v - specfun::delta_s_extended(a, t, qtol)),     // argument reduction
        std::max(0.0, std::abs(v + (2 * t / kPi - 1) * v0) - kPi * kPi / 4),  // δ̃ bound
    };
    return *std::max_element(std::begin(residuals), std::end(residuals));
  });
}

CheckReport check_td1_closed_forms(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_td1_closed_forms");
  const double tol = 1e-9;
  const double qtol = quad_tol_for(opts, tol);
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) p = {s.uniform(0.0, kPi)};
  return run_check("td1_closed_forms", tol, pts, {"alpha"}, opts, [=](const Sample& x) {
    double worst = 0.0;
    for (double t : {0.0, kPi / 4, kHalfPi, 3 * kPi / 4, kPi})
      worst = std::max(worst, std::abs(specfun::delta_s(x[0], t, qtol) - specfun::delta_s_closed(x[0], t)));
    return worst;
  });
}

CheckReport check_p2_arccot(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_p2_arccot");
  const double tol = 1e-9;
  const double qtol = quad_tol_for(opts, tol);
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  const double lo = kHalfPi + kSampleMargin, hi = kPi - kSampleMargin;
  for (auto& p : pts) {
    const double a = s.uniform(lo, hi);
    p = {a, s.uniform(lo, hi)};
  }
  return run_check("p2_arccot", tol, pts, kAlphaTheta, opts, [=](const Sample& x) {
    return std::abs(specfun::delta_s(x[0], x[1], qtol) - specfun::delta_s_arccot(x[0], x[1], qtol));
  });
}

CheckReport check_dilog_relation(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_dilog_relation");
  const double tol = 1e-9;
  const double qtol = quad_tol_for(opts, tol);
  constexpr double edge = 1e-3;
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) {
    const double a = s.uniform(kSampleMargin, kPi - kSampleMargin);
    p = {a, s.uniform(-kPi / 4 + edge, 3 * kPi / 4 - edge)};
  }
  const double a = s.uniform(kSampleMargin, kPi - kSampleMargin);
  pts.push_back({a, -kPi / 4 + edge});
  pts.push_back({a, 3 * kPi / 4 - edge});
  return run_check("dilog_relation", tol, pts, kAlphaTheta, opts, [=](const Sample& x) {
    const double a = x[0], t = x[1];
    const double r = std::tan(kPi / 4 - t);
    const double lhs = specfun::delta_s(a, t, qtol) - specfun::delta_s(a, kPi / 4, qtol);
    const double rhs = specfun::dilog2(r, kHalfPi, qtol) - specfun::dilog2(r, 2 * a, qtol);
    return std::abs(lhs - rhs);
  });
}

CheckReport check_lobachevsky_relation(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_lobachevsky_relation");
  const double tol = 1e-9;
  const double qtol = quad_tol_for(opts, tol);
  Sampler s(opts.seed);
  std::vector<Sample> pts(samples);
  for (auto& p : pts) {
    const double a = s.uniform(kSampleMargin, kPi - kSampleMargin);
    p = {a, s.uniform(0.0, 2.0)};
  }
  return run_check("lobachevsky_relation", tol, pts, kAlphaTheta, opts, [=](const Sample& x) {
    const double a = x[0], t = x[1];
    const double lhs =
        specfun::delta_s(a, std::atan(std::tanh(t)), qtol) - specfun::delta_s(a, 0.0, qtol);
    // 1 - cos2α / cosh2σ = 2(sinh²σ + sin²α) / cosh2σ
    const double sa = std::sin(a);
    quadrature::IntegrationProblem p;
    p.integrand = [sa](double sigma) {
      const double sh = std::sinh(sigma);
      return std::log(2 * (sh * sh + sa * sa)) - std::log(std::cosh(2 * sigma));
    };
    p.lower = 0.0;
    p.upper = t;
    p.abs_tol = qtol;
    const double rhs = -quadrature::integrate(p).value;
    return std::abs(lhs - rhs);
  });
}

CheckReport check_volume_routes(std::size_t samples, const CheckOptions& opts) {
  require_samples(samples, "check_volume_routes");
  const double tol = 1e-8;
  const double qtol = quad_tol_for(opts, tol);
  Sampler s(opts.seed);
  std::vector<Sample> pts;
  pts.reserve(2 * samples);
  // Fourth coordinate: 0 for a cube, 1 for an orthoscheme.
  for (std::size_t i = 0; i < samples; ++i) {
    auto p = s.spherical_cube();
    p.push_back(0.0);
    pts.push_back(p);
  }
  for (std::size_t i = 0; i < samples; ++i) {
    auto p = s.spherical_orthoscheme();
    p.push_back(1.0);
    pts.push_back(p);
  }
  return run_check("volume_routes", tol, pts, {"alpha", "beta", "gamma", "orthoscheme"}, opts,
                   [=](const Sample& x) {
                     if (x[3] == 0.0) {
                       const auto cube = lambert::classify(x[0], x[1], x[2]);
                       const double v = lambert::volume_spherical(cube, qtol);
                       const double vs = lambert::volume_spherical_integral(
                           cube, qtol, lambert::IntegralPath::kSubstituted);
                       const double vi = lambert::volume_spherical_integral(
                           cube, qtol, lambert::IntegralPath::kSemiInfinite);
                       return std::max(std::abs(v - vs), std::abs(v - vi));
                     }
                     const orthoscheme::OrthoschemeAngles ang{x[0], x[1], x[2]};
                     const double vs = orthoscheme::volume_orthoscheme_schlaefli(ang, qtol);
                     const double vd = orthoscheme::volume_via_delta(ang, qtol);
                     const double vi = orthoscheme::volume_orthoscheme_integral(ang, qtol);
                     return std::max({std::abs(vs - vd), std::abs(vd - vi), std::abs(vs - vi)});
                   });
}

std::vector<CheckReport> run_all(const CheckOptions& opts) {
  return {
      check_tangent_rule(50, opts),
      check_sine_cosine(50, opts),
      check_schlaefli_derivative(10, 1e-4, opts),
      check_schlaefli_derivative_orthoscheme(10, 1e-4, opts),
      check_delta_properties(50, opts),
      check_td1_closed_forms(20, opts),
      check_p2_arccot(20, opts),
      check_dilog_relation(20, opts),
      check_lobachevsky_relation(20, opts),
      check_volume_routes(20, opts),
  };
}

}  // namespace noneuclid::verify
