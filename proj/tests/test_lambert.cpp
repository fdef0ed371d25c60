#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "noneuclid/errors.hpp"
#include "noneuclid/lambert.hpp"
#include "noneuclid/specfun.hpp"

using namespace noneuclid;
using namespace noneuclid::lambert;

namespace {

constexpr double kPi = std::numbers::pi;

struct Triple {
  double a, b, g;
};

std::vector<Triple> random_spherical(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(kPi / 2 + 0.05, kPi - 0.05);
  std::vector<Triple> out;
  for (int i = 0; i < n; ++i) {
    const double a = u(rng), b = u(rng), g = u(rng);
    out.push_back({a, b, g});
  }
  return out;
}

}  // namespace

TEST_CASE("classification") {
  CHECK(classify(2.0, 2.5, 3.0).geometry == Geometry::kSpherical);
  CHECK(classify(0.2, 0.5, 1.0).geometry == Geometry::kHyperbolic);
  CHECK_THROWS_AS(classify(1.0, 2.0, 2.0), DomainError);
  CHECK_THROWS_AS(classify(kPi / 2, 2.0, 2.0), DomainError);
  CHECK_THROWS_AS(classify(kPi / 2 + 1e-10, 2.0, 2.0), DomainError);
  CHECK_THROWS_AS(classify(0.0, 0.5, 0.5), DomainError);
  CHECK_THROWS_AS(classify(2.0, 2.0, kPi), DomainError);
  CHECK_THROWS_AS(classify(std::nan(""), 2.0, 2.0), DomainError);
  CHECK(std::string(to_string(Geometry::kHyperbolic)) == "hyperbolic");
}

TEST_CASE("principal parameter reference values") {
  auto pd = principal(classify(2 * kPi / 3, 2 * kPi / 3, 3 * kPi / 4));
  CHECK(std::abs(pd.T + 1) < 1e-14);
  CHECK(std::abs(pd.theta - 3 * kPi / 4) < 1e-14);

  pd = principal(classify(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3));
  CHECK(std::abs(pd.T - (-1.486977656499242287)) < 1e-13);
  CHECK(std::abs(pd.theta - 2.162830011620085100) < 1e-13);

  pd = principal(classify(2.0, 2.3, 2.7));
  CHECK(std::abs(pd.T - (-0.424109377472798528)) < 1e-14);
  CHECK(std::abs(pd.theta - 2.740476613232814245) < 1e-14);
  REQUIRE(pd.abc.has_value());
  CHECK(pd.abc->A > 0);

  pd = principal(classify(kPi / 4, kPi / 4, kPi / 4));
  CHECK(pd.T > 0);
  CHECK_FALSE(pd.abc.has_value());
  CHECK(pd.theta > kPi / 4);
  CHECK(pd.theta < kPi / 2);
  CHECK_THROWS_AS(abc(pd), DomainError);
  CHECK_THROWS_AS(principal_spherical(classify(0.5, 0.5, 0.5)), DomainError);
  CHECK_THROWS_AS(principal_hyperbolic(classify(2.0, 2.0, 2.0)), DomainError);
}

TEST_CASE("quartic and A, B, C relations hold on random cubes") {
  for (const auto& t : random_spherical(50, 42)) {
    const auto pd = principal(classify(t.a, t.b, t.g));
    CHECK(pd.T < 0);
    CHECK(pd.theta > kPi / 2);
    CHECK(pd.theta < kPi);
    CHECK(quartic_residual(pd) < 1e-14);
    // (T²+L²)(T²+M²)(T²+N²) = (1+L²)(1+M²)(1+N²)T², as a ratio
    const double t2 = pd.T * pd.T;
    const double ratio = (t2 + pd.L * pd.L) * (t2 + pd.M * pd.M) * (t2 + pd.N * pd.N) /
                         ((1 + pd.L * pd.L) * (1 + pd.M * pd.M) * (1 + pd.N * pd.N) * t2);
    CHECK(std::abs(ratio - 1) < 1e-12);
    // A²B²C² = T²: the Euclidean realization closes up
    const auto& v = *pd.abc;
    CHECK(std::abs(v.A * v.B * v.C - std::abs(pd.T)) < 1e-12 * (1 + std::abs(pd.T)));
  }
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.05, kPi / 2 - 0.05);
  for (int i = 0; i < 50; ++i) {
    const auto pd = principal(classify(u(rng), u(rng), u(rng)));
    CHECK(quartic_residual(pd) < 1e-14);
  }
}

TEST_CASE("edge lengths") {
  auto pd = principal(classify(2 * kPi / 3, 2 * kPi / 3, 3 * kPi / 4));
  auto l = edge_lengths_spherical(pd);
  CHECK(std::abs(l.l_alpha - kPi / 3) < 1e-14);
  CHECK(std::abs(l.l_gamma - kPi / 4) < 1e-14);
  // Tangent Rule ratios at T = -1
  CHECK(std::abs(pd.L / std::tan(l.l_alpha) + 1) < 1e-14);
  CHECK(std::abs(pd.M / std::tan(l.l_beta) + 1) < 1e-14);
  CHECK(std::abs(pd.N / std::tan(l.l_gamma) + 1) < 1e-14);

  pd = principal(classify(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3));
  CHECK(std::abs(edge_lengths_spherical(pd).l_alpha - 0.861384224935045163) < 1e-13);
  pd = principal(classify(2.0, 2.3, 2.7));
  CHECK(std::abs(edge_lengths_spherical(pd).l_alpha - 1.379083252412892471) < 1e-13);

  for (const auto& t : random_spherical(50, 4)) {
    const auto p = principal(classify(t.a, t.b, t.g));
    const auto a = edge_lengths_spherical(p);
    const auto b = edge_lengths_from_abc(*p.abc);
    CHECK(std::abs(a.l_alpha - b.l_alpha) < 1e-12);
    CHECK(std::abs(a.l_beta - b.l_beta) < 1e-12);
    CHECK(std::abs(a.l_gamma - b.l_gamma) < 1e-12);
    for (double x : {a.l_alpha, a.l_beta, a.l_gamma}) {
      CHECK(x > 0);
      CHECK(x < kPi / 2);
    }
  }
  CHECK_THROWS_AS(edge_lengths_spherical(principal(classify(0.5, 0.5, 0.5))), DomainError);
  CHECK_THROWS_AS(edge_lengths_from_abc({1.0, -1.0, 1.0}), DomainError);
}

TEST_CASE("euclidean realization") {
  const auto r = euclidean_realization(1.0, 2.0, 0.5);
  CHECK(r.a == doctest::Approx(2.0));
  CHECK(r.b == doctest::Approx(1.25));
  CHECK(r.c == doctest::Approx(5.0));
  CHECK_THROWS_AS(euclidean_realization(0.0, 1.0, 1.0), DomainError);
}

TEST_CASE("spherical volume reference values") {
  const auto c = classify(2 * kPi / 3, 2 * kPi / 3, 3 * kPi / 4);
  const auto v = volume_spherical_detailed(c, 1e-12);
  CHECK(std::abs(v.value - 31 * kPi * kPi / 576) < 1e-11);
  CHECK(v.err_estimate < 1e-11);
  CHECK(std::abs(volume_spherical(classify(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3), 1e-12) -
                 0.423990078264138629) < 1e-11);
  CHECK(std::abs(volume_spherical(classify(2.0, 2.3, 2.7), 1e-12) - 0.726517738630946411) < 1e-11);
  const double e = 1e-3;
  CHECK(std::abs(volume_spherical(classify(kPi / 2 + e, kPi / 2 + e, kPi / 2 + e), 1e-13) -
                 3.16306809124513e-5) < 1e-12);
  CHECK(std::abs(volume_spherical(classify(0.9 * kPi, 0.8 * kPi, kPi - 1e-4), 1e-12) -
                 1.727111362849093) < 1e-11);
}

TEST_CASE("volume routes agree") {
  for (const auto& t : random_spherical(20, 42)) {
    const auto c = classify(t.a, t.b, t.g);
    const double v = volume_spherical(c, 1e-12);
    CHECK(v > 0);
    CHECK(std::abs(v - volume_spherical_integral(c, 1e-12)) < 1e-10);
    CHECK(std::abs(v - volume_spherical_integral(c, 1e-12, IntegralPath::kSemiInfinite)) < 1e-10);
  }
}

TEST_CASE("volume is symmetric in the three angles") {
  const double a = 2.1, b = 2.4, g = 2.9;
  const double v = volume_spherical(classify(a, b, g), 1e-12);
  CHECK(std::abs(v - volume_spherical(classify(g, a, b), 1e-12)) < 1e-11);
  CHECK(std::abs(v - volume_spherical(classify(b, g, a), 1e-12)) < 1e-11);
  CHECK(std::abs(v - volume_spherical(classify(b, a, g), 1e-12)) < 1e-11);
}

TEST_CASE("volume increases with every angle") {
  for (const auto& t : random_spherical(10, 77)) {
    const double v = volume_spherical(classify(t.a, t.b, t.g), 1e-12);
    CHECK(volume_spherical(classify(t.a + 0.01, t.b, t.g), 1e-12) > v);
    CHECK(volume_spherical(classify(t.a, t.b + 0.01, t.g), 1e-12) > v);
    CHECK(volume_spherical(classify(t.a, t.b, t.g + 0.01), 1e-12) > v);
  }
}

TEST_CASE("special family") {
  const auto f = volume_special_family(2 * kPi / 3, 2 * kPi / 3);
  CHECK(std::abs(f.gamma - 3 * kPi / 4) < 1e-14);
  CHECK(std::abs(f.volume - 31 * kPi * kPi / 576) < 1e-14);
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(kPi / 2 + 0.05, kPi - 0.05);
  int n = 0;
  while (n < 10) {
    const double a = u(rng), b = u(rng);
    if (std::cos(a) * std::cos(a) + std::cos(b) * std::cos(b) >= 0.95) continue;
    const auto s = volume_special_family(a, b);
    const double c = std::cos(s.gamma);
    CHECK(std::abs(std::cos(a) * std::cos(a) + std::cos(b) * std::cos(b) + c * c - 1) < 1e-14);
    CHECK(std::abs(volume_spherical(classify(a, b, s.gamma), 1e-12) - s.volume) < 1e-10);
    ++n;
  }
  CHECK_THROWS_AS(volume_special_family(3.0, 3.0), DomainError);
  CHECK_THROWS_AS(volume_special_family(1.0, 2.0), DomainError);
}

TEST_CASE("singular limit") {
  CHECK(std::abs(volume_singular(0.9 * kPi, 0.8 * kPi) - kPi * 0.7 * kPi / 4) < 1e-14);
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(kPi / 2 + 0.05, kPi - 0.05);
  for (int i = 0; i < 5; ++i) {
    const double a = u(rng), b = u(rng);
    CHECK(std::abs(volume_spherical(classify(a, b, kPi - 1e-4), 1e-12) - volume_singular(a, b)) < 2e-3);
  }
  CHECK_THROWS_AS(volume_singular(1.0, 2.0), DomainError);
}

TEST_CASE("hyperbolic volume") {
  CHECK(std::abs(volume_hyperbolic(classify(kPi / 4, kPi / 4, kPi / 4)) - 0.538275950091351082) < 1e-14);
  CHECK(std::abs(volume_hyperbolic(classify(1e-4, 1e-4, 1e-4)) - 0.915965586677219046) < 1e-14);
  const double e = 1e-3;
  CHECK(std::abs(volume_hyperbolic(classify(kPi / 2 - e, kPi / 2 - e, kPi / 2 - e)) - 3.16148695239e-5) < 1e-14);
  // symmetric and decreasing in each angle
  const double v = volume_hyperbolic(classify(0.3, 0.7, 1.1));
  CHECK(std::abs(v - volume_hyperbolic(classify(1.1, 0.3, 0.7))) < 1e-14);
  CHECK(volume_hyperbolic(classify(0.31, 0.7, 1.1)) < v);
  CHECK(v < 2 * specfun::lobachevsky(kPi / 4));
}
