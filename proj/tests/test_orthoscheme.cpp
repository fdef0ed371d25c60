#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "noneuclid/errors.hpp"
#include "noneuclid/orthoscheme.hpp"
#include "noneuclid/quadrature.hpp"

using namespace noneuclid;
using namespace noneuclid::orthoscheme;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<OrthoschemeAngles> random_spherical(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, kPi / 2 - 0.05);
  std::vector<OrthoschemeAngles> out;
  while (static_cast<int>(out.size()) < n) {
    const double a = u(rng), g = u(rng);
    const double lo = std::acos(std::cos(a) * std::cos(g)) + 0.05;
    if (lo >= kPi / 2 - 0.05) continue;
    out.push_back({a, std::uniform_real_distribution<double>(lo, kPi / 2 - 0.05)(rng), g});
  }
  return out;
}

}  // namespace

TEST_CASE("classification") {
  const auto s = classify_orthoscheme({kPi / 3, 1.4, kPi / 3});
  CHECK(s.curvature == Curvature::kSpherical);
  REQUIRE(s.T.has_value());
  CHECK(std::abs(*s.T - 4.090905486796158) < 1e-13);
  CHECK(std::abs(*s.theta - std::atan(*s.T)) < 1e-15);

  const auto e = classify_orthoscheme({kPi / 4, kPi / 3, kPi / 4});
  CHECK(e.curvature == Curvature::kEuclidean);
  CHECK(*e.D == 0.0);
  CHECK(*e.X == 1.0);
  CHECK(*e.theta == kPi / 2);
  CHECK_FALSE(e.T.has_value());

  const auto h = classify_orthoscheme({kPi / 3, 0.5, kPi / 3});
  CHECK(h.curvature == Curvature::kHyperbolic);
  CHECK(h.gap < 0);
  CHECK_FALSE(h.T.has_value());

  CHECK_THROWS_AS(classify_orthoscheme({2.0, 1.0, 0.5}), DomainError);
  CHECK_THROWS_AS(classify_orthoscheme({0.5, -0.1, 0.5}), DomainError);
  CHECK(std::string(to_string(Curvature::kEuclidean)) == "euclidean");
}

TEST_CASE("reference volumes") {
  const OrthoschemeAngles a{kPi / 3, 1.4, kPi / 3};
  CHECK(std::abs(volume_via_delta(a, 1e-12) - 0.0268065134343755482) < 1e-12);
  CHECK(std::abs(volume_orthoscheme_schlaefli(a, 1e-12) - 0.0268065134343755482) < 1e-12);
  CHECK(std::abs(volume_orthoscheme_integral(a, 1e-12) - 0.0268065134343755482) < 1e-12);

  const OrthoschemeAngles right{kPi / 6, kPi / 2, kPi / 6};
  CHECK(std::abs(*classify_orthoscheme(right).T - 1.0 / 3) < 1e-15);
  CHECK(std::abs(volume_via_delta(right, 1e-12) - 0.548311355616075479) < 1e-12);
  CHECK(std::abs(volume_orthoscheme_schlaefli(right, 1e-12) - 0.548311355616075479) < 1e-12);
  CHECK(std::abs(volume_orthoscheme_integral(right, 1e-12) - 0.548311355616075479) < 1e-12);
}

TEST_CASE("the printed integral is minus the volume") {
  // (1/4)∫_T^∞ log[(1+A²)(t²+B²)(1+C²)t² / ((t²+A²)(1+B²)(t²+C²))] dt/(t²-1), taken literally
  const OrthoschemeAngles ang{kPi / 3, 1.4, kPi / 3};
  const double A = std::tan(ang.alpha), B = std::tan(ang.beta), C = std::tan(ang.gamma);
  auto f = [=](double t) {
    const double t2 = t * t;
    return std::log((1 + A * A) * (t2 + B * B) * (1 + C * C) * t2 /
                    ((t2 + A * A) * (1 + B * B) * (t2 + C * C))) /
           (t2 - 1);
  };
  const double T = *classify_orthoscheme(ang).T;
  const double literal = quadrature::integrate_semiinfinite(f, T, quadrature::Tail::kUpward, 1e-11).value / 4;
  CHECK(std::abs(literal + 0.0268065134343755482) < 1e-10);
}

TEST_CASE("three routes agree on random orthoschemes") {
  for (const auto& a : random_spherical(20, 42)) {
    const double s = volume_orthoscheme_schlaefli(a, 1e-12);
    const double d = volume_via_delta(a, 1e-12);
    const double i = volume_orthoscheme_integral(a, 1e-12);
    CHECK(d > 0);
    CHECK(std::abs(s - d) < 1e-10);
    CHECK(std::abs(d - i) < 1e-10);
    // symmetric in α and γ
    CHECK(std::abs(d - volume_via_delta({a.gamma, a.beta, a.alpha}, 1e-12)) < 1e-10);
  }
}

TEST_CASE("Euclidean boundary and its neighbourhood") {
  const OrthoschemeAngles e{kPi / 4, kPi / 3, kPi / 4};
  CHECK(volume_orthoscheme_schlaefli(e) == 0.0);
  CHECK(volume_via_delta(e) == 0.0);
  CHECK(volume_orthoscheme_integral(e) == 0.0);
  // β a little above the boundary arccos(cos α cos γ)
  const double b0 = std::acos(std::cos(kPi / 4) * std::cos(kPi / 4));
  const double v = volume_via_delta({kPi / 4, b0 + 1e-4, kPi / 4}, 1e-12);
  CHECK(v > 0);
  CHECK(v < 1e-2);
  CHECK(v < volume_via_delta({kPi / 4, b0 + 1e-2, kPi / 4}, 1e-12));
}

TEST_CASE("unsupported configurations") {
  CHECK_THROWS_AS(volume_via_delta({kPi / 3, 0.5, kPi / 3}), DomainError);
  CHECK_THROWS_AS(volume_orthoscheme_schlaefli({kPi / 3, 0.5, kPi / 3}), DomainError);
  CHECK_THROWS_AS(volume_orthoscheme_integral({kPi / 3, 0.5, kPi / 3}), DomainError);
  CHECK_THROWS_AS(orthoscheme_edges(classify_orthoscheme({kPi / 3, 0.5, kPi / 3}), {kPi / 3, 0.5, kPi / 3}),
                  DomainError);
}

TEST_CASE("edges, Tangent Rule and Cosine Rule") {
  for (const auto& a : random_spherical(20, 5)) {
    const auto d = classify_orthoscheme(a);
    const auto e = orthoscheme_edges(d, a);
    const double T = *d.T;
    for (double x : {e.a, e.b, e.c}) {
      CHECK(x > 0);
      CHECK(x < kPi / 2 + 1e-15);
    }
    CHECK(std::abs(std::tan(a.alpha) / std::tan(e.a) - T) < 1e-10 * T);
    CHECK(std::abs(std::tan(a.gamma) / std::tan(e.c) - T) < 1e-10 * T);
    CHECK(cosine_rule_residual(e, a) < 1e-10);
    CHECK(std::abs(biquadratic_residual(d, a)) < 1e-10);
    const double A = std::tan(a.alpha);
    CHECK(std::abs(std::cos(e.a) * std::cos(e.a) - T * T / (T * T + A * A)) < 1e-10);
  }
  const OrthoschemeAngles right{kPi / 6, kPi / 2, kPi / 6};
  const auto d = classify_orthoscheme(right);
  const auto e = orthoscheme_edges(d, right);
  CHECK(std::abs(e.b - kPi / 2) < 1e-15);
  CHECK(cosine_rule_residual(e, right) < 1e-15);
  CHECK(std::abs(biquadratic_residual(d, right)) < 1e-14);
}

TEST_CASE("volume vanishes as T grows") {
  const double a = 0.6, g = 0.9;
  const double b0 = std::acos(std::cos(a) * std::cos(g));
  double prev_t = 0.0, prev_v = 1.0;
  for (double eps : {1e-1, 1e-2, 1e-3, 1e-4, 1e-6}) {
    const OrthoschemeAngles ang{a, b0 + eps, g};
    const double T = *classify_orthoscheme(ang).T;
    const double v = volume_via_delta(ang, 1e-13);
    CHECK(T > prev_t);
    CHECK(v < prev_v);
    CHECK(v > 0);
    prev_t = T;
    prev_v = v;
  }
  CHECK(prev_v < 1e-6);
}
