#include "noneuclid/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "noneuclid/errors.hpp"

namespace noneuclid::specfun {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfPi = kPi / 2;
constexpr double kQuarterPi = kPi / 4;

// |B_2k| / (2k (2k+1) (2k)!) for k = 1..30: coefficients of the expansion
// Cl₂(x) = x - x log|x| + Σ c_k x^{2k+1}, convergent for |x| < 2π.
constexpr std::array<double, 30> kClausenCoeffs = {
    1.3888888888888889e-2,  6.9444444444444444e-5,  7.873519778281683e-7,
    1.1482216343327454e-8,  1.8978869988970999e-10, 3.3873013709535213e-12,
    6.3726364431831804e-14, 1.2462059912950672e-15, 2.5105444608999546e-17,
    5.1782588060906235e-19, 1.0887357368300849e-20, 2.3257441143020872e-22,
    5.0351952131473896e-24, 1.1026499294381215e-25, 2.4386585509007345e-27,
    5.4401426788562523e-29, 1.2228340131217352e-30, 2.7672634689679506e-32,
    6.3000905918320139e-34, 1.4420868388418475e-35, 3.3170939991595428e-37,
    7.6639135579206579e-39, 1.7778714733830658e-40, 4.1396058982341373e-42,
    9.6715570360811018e-44, 2.2667187016766124e-45, 5.327956311328254e-47,
    1.2557248389564336e-48, 2.9670005422470942e-50, 7.0267873176007425e-52,
};

// Clausen function Cl₂ on [-π, π].
double clausen2_reduced(double x) {
  if (x == 0.0) return 0.0;
  const double x2 = x * x;
  double power = x * x2;
  double series = 0.0;
  for (double c : kClausenCoeffs) {
    const double term = c * power;
    series += term;
    if (std::abs(term) < 1e-18 * std::abs(series)) break;
    power *= x2;
  }
  return x - x * std::log(std::abs(x)) + series;
}

// log(1 - cos2α cos2τ) / cos2τ, continued through cos2τ = 0 by its limit -cos2α.
class DeltaIntegrand {
 public:
  explicit DeltaIntegrand(double alpha)
      : sin2_(std::sin(alpha) * std::sin(alpha)),
        cos2_(std::cos(alpha) * std::cos(alpha)),
        c_(std::cos(2 * alpha)) {}

  double operator()(double tau) const {
    const double u = std::cos(2 * tau);
    const double au = std::abs(u);
    if (au < 1e-6) return -c_ - c_ * c_ * u / 2 - c_ * c_ * c_ * u * u / 3;
    if (au < 0.5) return std::log1p(-c_ * u) / u;
    // 1 - cos2α cos2τ as a sum of squares: no cancellation near its zeros.
    const double s = std::sin(tau);
    const double co = std::cos(tau);
    return std::log(2 * (sin2_ * co * co + cos2_ * s * s)) / u;
  }

 private:
  double sin2_;
  double cos2_;
  double c_;
};

double abs_distance_from_half_pi(double alpha) { return std::abs(kHalfPi - alpha); }

double delta_at_zero_closed(double alpha_in_0_pi) {
  return kPi * (kQuarterPi - abs_distance_from_half_pi(alpha_in_0_pi));
}

void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw DomainError(std::string(what) + ": arguments must be finite");
}

}  // namespace

double lobachevsky(double x) {
  require_finite(x, "lobachevsky");
  return 0.5 * clausen2_reduced(std::remainder(2 * x, 2 * kPi));
}

double delta_cap(double alpha, double theta) {
  return lobachevsky(alpha + theta) - lobachevsky(alpha - theta);
}

QuadResult delta_s_quad(double alpha, double theta, double tol) {
  require_finite(alpha, "delta_s");
  require_finite(theta, "delta_s");
  if (theta == kHalfPi) return {0.0, 0.0, 0, true};

  const double lo = std::min(theta, kHalfPi);
  const double hi = std::max(theta, kHalfPi);
  std::vector<double> cuts{lo};
  for (double k = std::ceil(lo / kHalfPi); k * kHalfPi < hi; k += 1.0) {
    const double cut = k * kHalfPi;
    if (cut > lo) cuts.push_back(cut);
  }
  cuts.push_back(hi);

  const DeltaIntegrand f(alpha);
  const double piece_tol = tol / static_cast<double>(cuts.size() - 1);
  QuadResult total{0.0, 0.0, 0, true};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    quadrature::IntegrationProblem p;
    p.integrand = f;
    p.lower = cuts[i];
    p.upper = cuts[i + 1];
    p.abs_tol = piece_tol;
    const QuadResult r = quadrature::integrate(p);
    total.value += r.value;
    total.err_estimate += r.err_estimate;
    total.evals += r.evals;
  }
  if (theta > kHalfPi) total.value = -total.value;
  return total;
}

double delta_s(double alpha, double theta, double tol) {
  return delta_s_quad(alpha, theta, tol).value;
}

double delta_s_closed(double alpha, double theta) {
  if (!(alpha >= -1e-12 && alpha <= kPi + 1e-12))
    throw DomainError("delta_s_closed: alpha must lie in [0, pi]");
  const double k = std::round(theta / kQuarterPi);
  if (!(k >= 0.0 && k <= 4.0) || std::abs(theta - k * kQuarterPi) > 1e-12)
    throw DomainError("delta_s_closed: theta must be one of 0, pi/4, pi/2, 3pi/4, pi");
  const double m = abs_distance_from_half_pi(alpha);
  const double q = kHalfPi - m;
  switch (static_cast<int>(k)) {
    case 0: return kPi * (kQuarterPi - m);
    case 1: return q * q - kPi * kPi / 16;
    case 2: return 0.0;
    case 3: return kPi * kPi / 16 - q * q;
    default: return kPi * (m - kQuarterPi);
  }
}

double arccot(double x) { return kHalfPi - std::atan(x); }

double delta_s_arccot(double alpha, double theta, double tol) {
  if (!(alpha > kHalfPi && alpha < kPi && theta > kHalfPi && theta < kPi))
    throw DomainError("delta_s_arccot: requires pi/2 < alpha, theta < pi");
  const double st = std::sin(theta);
  const double ct = std::cos(theta);
  quadrature::IntegrationProblem p;
  p.integrand = [st, ct](double nu) {
    return 2 * arccot((std::cos(nu) * st) / (std::sin(nu) * ct));
  };
  p.lower = 3 * kQuarterPi;
  p.upper = alpha;
  p.abs_tol = tol;
  return quadrature::integrate(p).value;
}

double delta_s_extended(double alpha, double theta, double tol) {
  require_finite(alpha, "delta_s_extended");
  require_finite(theta, "delta_s_extended");
  // even + π-periodic in α, and δ(α,θ) = δ(π-α,θ): fold α into [0, π/2]
  const double a = std::abs(std::remainder(alpha, kPi));
  // δ(α, θ0 + kπ) = δ(α,θ0) - 2k δ(α,0)
  const double k = std::floor(theta / kPi);
  double t = theta - k * kPi;
  double sign = 1.0;
  if (t > kHalfPi) {  // δ(α,θ) = -δ(α, π-θ)
    t = kPi - t;
    sign = -1.0;
  }
  return sign * delta_s(a, t, tol) - 2 * k * delta_at_zero_closed(a);
}

double delta_s_reduced(double alpha, double theta, double tol) {
  const double a = std::abs(std::remainder(alpha, kPi));
  return delta_s_extended(alpha, theta, tol) + (2 * theta / kPi - 1) * delta_at_zero_closed(a);
}

double delta_s_dalpha(double alpha, double theta) {
  require_finite(alpha, "delta_s_dalpha");
  require_finite(theta, "delta_s_dalpha");
  const double ca = std::cos(alpha);
  const double sa = std::sin(alpha);
  if (std::abs(ca) < 1e-12)
    throw DomainError("delta_s_dalpha: delta is not differentiable in alpha at pi/2 + k*pi");
  const double s2a = std::sin(2 * alpha);
  if (s2a == 0.0) return 0.0;
  // ∫ dτ / (1 - cos2α cos2τ) = G(τ) / |sin2α| with G the continuous branch of
  // atan(|cot α| tan τ), i.e. the polar angle of (cos τ, |cot α| sin τ).
  const double k = std::abs(ca / sa);
  const double phi = std::atan2(k * std::sin(theta), std::cos(theta));
  const double g = phi + 2 * kPi * std::round((theta - phi) / (2 * kPi));
  return 2 * std::copysign(1.0, s2a) * (kHalfPi - g);
}

double dilog2(double r, double t, double tol) {
  require_finite(r, "dilog2");
  require_finite(t, "dilog2");
  if (r == 0.0) return 0.0;

  const double sh = std::sin(t / 2);
  const double ch = std::cos(t / 2);
  const double s2 = sh * sh;  // (1 - cos t)/2
  const double c2 = ch * ch;  // (1 + cos t)/2
  if ((r >= 1.0 && s2 <= 1e-30) || (r <= -1.0 && c2 <= 1e-30))
    throw DomainError("dilog2: log singularity of the integrand lies in [0, r]");

  const double sgn = r > 0 ? 1.0 : -1.0;
  const double cos_t = std::cos(t);
  // 1 - 2x cos t + x² written as a sum of non-negative terms on each side of 0
  auto log_q = [=](double y) {  // y = |x| > 0, x = sgn * y
    if (y < 0.5) return std::log1p(y * y - 2 * sgn * y * cos_t);
    if (sgn > 0) return std::log((1 - y) * (1 - y) + 4 * y * s2);
    return std::log((1 - y) * (1 - y) + 4 * y * c2);
  };

  const double R = std::abs(r);
  double sum = 0.0;
  quadrature::IntegrationProblem p;
  p.abs_tol = R > 1.0 ? tol / 2 : tol;
  p.integrand = [&log_q](double y) { return log_q(y) / y; };
  p.lower = 0.0;
  p.upper = std::min(R, 1.0);
  sum += quadrature::integrate(p).value;
  if (R > 1.0) {
    // x = sgn e^s, dx/x = ds
    p.integrand = [&log_q](double s) { return log_q(std::exp(s)); };
    p.lower = 0.0;
    p.upper = std::log(R);
    sum += quadrature::integrate(p).value;
  }
  return -0.5 * sum;
}

SchlaefliArgs make_schlaefli_args(double alpha, double beta, double gamma) {
  constexpr double slack = 1e-12;
  if (!(alpha >= -slack && alpha <= kHalfPi + slack && gamma >= -slack &&
        gamma <= kHalfPi + slack && beta >= -slack && beta <= kPi + slack))
    throw DomainError("schlaefli: requires 0 <= alpha, gamma <= pi/2 and 0 <= beta <= pi");
  const double ca = std::cos(alpha), cb = std::cos(beta), cg = std::cos(gamma);
  const double d2 = ca * ca * cg * cg - cb * cb;
  if (d2 < 0.0) throw DomainError("schlaefli: cos^2(alpha) cos^2(gamma) < cos^2(beta), D is not real");
  const double D = std::sqrt(d2);
  const double ss = std::sin(alpha) * std::sin(gamma);
  if (ss + D == 0.0) throw DomainError("schlaefli: X undefined (sin(alpha) sin(gamma) = D = 0)");
  return {alpha, beta, gamma, D, (ss - D) / (ss + D)};
}

double schlaefli_series(const SchlaefliArgs& args, double tol) {
  if (!(tol > 0.0)) throw DomainError("schlaefli_series: tol must be positive");
  const double ax = std::abs(args.X);
  if (!(ax <= 1.0 - 1e-12)) throw DomainError("schlaefli_series: |X| must be below 1");

  constexpr long kMaxTerms = 10'000'000;
  const double neg_x = -args.X;
  double power = 1.0;
  double sum = 0.0, comp = 0.0;
  long n = 1;
  for (;; ++n) {
    power *= neg_x;
    const double dn = static_cast<double>(n);
    if (4 * std::abs(power) / (dn * dn * (1 - ax)) < tol) break;
    if (n > kMaxTerms) {
      std::ostringstream msg;
      msg << "schlaefli_series: tail bound above tol after " << kMaxTerms << " terms";
      throw NonConvergence(msg.str(), sum, 4 * std::abs(power) / (dn * dn * (1 - ax)),
                           static_cast<std::size_t>(n));
    }
    const double term = power / (dn * dn) *
                        (std::cos(2 * dn * args.alpha) - std::cos(2 * dn * args.beta) +
                         std::cos(2 * dn * args.gamma) - 1);
    const double y = term - comp;
    const double s = sum + y;
    comp = (s - sum) - y;
    sum = s;
  }
  return sum - args.alpha * args.alpha + args.beta * args.beta - args.gamma * args.gamma;
}

}  // namespace noneuclid::specfun
