#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "myers/model_space.hpp"
#include "myers/radial_manifold.hpp"
#include "myers/riccati.hpp"
#include "support.hpp"

using namespace myers;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("conjugate point of the round sphere family") {
  for (int n : {2, 3, 7}) {
    const double ric = n - 1.0;  // H = 1
    auto traj = integrate_jacobi([ric](double) { return ric; }, n - 1.0, 4.0);
    REQUIRE(traj.conjugate_time.has_value());
    CHECK(std::abs(*traj.conjugate_time - pi) < 1e-6);
  }
}

TEST_CASE("first zero for H = 4") {
  auto traj = integrate_jacobi([](double) { return 8.0; }, 2.0, 4.0);  // n = 3
  REQUIRE(traj.conjugate_time.has_value());
  CHECK(std::abs(*traj.conjugate_time - pi / 2) < 1e-6);
}

TEST_CASE("flat input: no conjugate point, m = (n-1)/t") {
  auto traj = integrate_jacobi([](double) { return 0.0; }, 2.0, 10.0);
  CHECK(!traj.conjugate_time.has_value());
  CHECK(!traj.blowup_time.has_value());
  for (const auto& s : traj.samples)
    CHECK(std::abs(s.m - 2.0 / s.t) <= 1e-8 * (1.0 + 2.0 / s.t));
}

TEST_CASE("numeric m matches the closed-form oracle over the constant family") {
  for (double H : {-1.0, 0.0, 0.5, 1.0, 4.0}) {
    for (int n : {2, 3, 7}) {
      const double hi = 0.9 * std::min(valid_range(H, RangeVariant::conjugate), 8.0 / 0.9);
      const double ric = (n - 1.0) * H;
      auto traj = integrate_jacobi([ric](double) { return ric; }, n - 1.0, hi + 0.05, 1e-3);
      for (const auto& s : traj.samples) {
        if (s.t < 0.01 || s.t > hi) continue;
        const double want = constant_ric_oracle(H, n, s.t);
        CHECK(std::abs(s.m - want) <= 1e-6 * std::max(1.0, std::abs(want)));
      }
    }
  }
}

TEST_CASE("constant_ric_oracle closed forms") {
  CHECK(constant_ric_oracle(1.0, 3, 1.0) ==
        doctest::Approx(2.0 * std::cos(1.0) / std::sin(1.0)).epsilon(1e-14));
  CHECK(constant_ric_oracle(0.0, 5, 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(constant_ric_oracle(-1.0, 2, 3.0) ==
        doctest::Approx(1.0 / std::tanh(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(constant_ric_oracle(1.0, 3, pi), std::domain_error);
}

TEST_CASE("step halving gains at least a factor 8 (fourth order)") {
  for (double H : {1.0, -1.0}) {
    const double ric = 2.0 * H;  // n = 3
    const double hi = 0.9 * std::min(valid_range(H, RangeVariant::conjugate), 3.0);
    auto max_err = [&](double step) {
      auto traj = integrate_jacobi([ric](double) { return ric; }, 2.0, hi, step);
      double worst = 0.0;
      for (const auto& s : traj.samples) {
        if (s.t < 0.2) continue;
        worst = std::max(worst, std::abs(s.u - sn_h(H, s.t)));
      }
      return worst;
    };
    const double coarse = max_err(0.02);
    const double fine = max_err(0.01);
    CHECK(coarse / fine >= 8.0);
  }
}

TEST_CASE("Sturm comparison: larger Ricci input brings the conjugate point in") {
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> Hdist(0.3, 3.5);
  std::uniform_real_distribution<double> bump(0.05, 2.0);
  std::uniform_real_distribution<double> beta(-0.15, 0.15);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + static_cast<int>(rng() % 3);
    TimeFn ric2;
    if (i % 2 == 0) {
      const double H = Hdist(rng);
      ric2 = [n, H](double) { return (n - 1.0) * H; };
    } else {
      const auto profile = WarpProfile::perturbed_sine(beta(rng));
      const auto curv = profile.radial_curvature;
      ric2 = [n, curv](double t) { return (n - 1.0) * curv(t); };
    }
    const double c = bump(rng);
    TimeFn ric1 = [ric2, c](double t) { return ric2(t) + c; };
    auto t1 = integrate_jacobi(ric1, n - 1.0, 12.0);
    auto t2 = integrate_jacobi(ric2, n - 1.0, 12.0);
    REQUIRE(t1.conjugate_time.has_value());
    REQUIRE(t2.conjugate_time.has_value());
    CHECK(*t1.conjugate_time <= *t2.conjugate_time + 1e-9);
  }
}

TEST_CASE("m decreases strictly until blow-up for positive constant input") {
  auto traj = integrate_jacobi([](double) { return 2.0; }, 2.0, 4.0);
  for (std::size_t i = 1; i < traj.samples.size(); ++i)
    CHECK(traj.samples[i].m < traj.samples[i - 1].m);
}

TEST_CASE("trajectory internal consistency") {
  auto traj = integrate_jacobi([](double t) { return 2.0 / (1.0 + t); }, 2.0, 5.0);
  for (std::size_t i = 0; i < traj.samples.size(); ++i) {
    const auto& s = traj.samples[i];
    CHECK(s.u > 0.0);
    if (i > 0) CHECK(s.t > traj.samples[i - 1].t);
    CHECK(std::abs(s.m * s.u - traj.n_eff * s.du) <= 1e-9 * (1.0 + std::abs(s.m * s.u)));
  }
}

TEST_CASE("interior start: analytic blow-up of the flat Riccati flow") {
  // m' = -m^2/(n-1), m(1) = -4, n = 2: m(t) = 1/(t - 1.25), pole at 1.25.
  auto traj = integrate_riccati_from(-4.0, 1.0, [](double) { return 0.0; }, 1.0, 3.0);
  REQUIRE(traj.blowup_time.has_value());
  CHECK(std::abs(*traj.blowup_time - 1.25) < 1e-9);
  CHECK(traj.samples.front().t == 1.0);
  CHECK(traj.samples.front().m == doctest::Approx(-4.0).epsilon(1e-15));
  for (const auto& s : traj.samples)
    CHECK(s.m == doctest::Approx(1.0 / (s.t - 1.25)).epsilon(1e-9));
}

TEST_CASE("interior start: continuation of the flat solution has no blow-up") {
  auto traj = integrate_riccati_from(2.0, 1.0, [](double) { return 0.0; }, 2.0, 10.0);
  CHECK(!traj.blowup_time.has_value());
  for (const auto& s : traj.samples)
    CHECK(std::abs(s.m - 2.0 / s.t) <= 1e-9 * (1.0 + 2.0 / s.t));
}

TEST_CASE("positive Ricci accelerates the blow-up") {
  auto flat = integrate_riccati_from(-1.0, 1.0, [](double) { return 0.0; }, 2.0, 10.0);
  auto curved = integrate_riccati_from(-1.0, 1.0, [](double) { return 1.0; }, 2.0, 10.0);
  REQUIRE(curved.blowup_time.has_value());
  CHECK(*curved.blowup_time < 10.0);
  // flat case: m(t) = 2/(t - 3), blow-up at t = 3
  REQUIRE(flat.blowup_time.has_value());
  CHECK(std::abs(*flat.blowup_time - 3.0) < 1e-9);
  CHECK(*curved.blowup_time <= *flat.blowup_time);
}

TEST_CASE("parameter and input validation") {
  CHECK_THROWS_AS(integrate_jacobi([](double) { return 1.0; }, 2.0, 1.0, 2.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_jacobi([](double) { return 1.0; }, -1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(integrate_riccati_from(-1.0, 2.0, [](double) { return 0.0; }, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      integrate_jacobi([](double t) { return t > 0.5 ? std::nan("") : 1.0; }, 2.0, 2.0),
      doctest::Contains("non-finite"), std::runtime_error);
}

TEST_CASE("trajectory m interpolation and integral helpers") {
  auto traj = integrate_jacobi([](double) { return 0.0; }, 2.0, 6.0);
  CHECK(traj.m_at(2.0) == doctest::Approx(1.0).epsilon(1e-6));
  // integral of (2/t)^2 over [1, 4] = 4 (1 - 1/4) = 3
  CHECK(traj.integrate_m_squared(1.0, 4.0) == doctest::Approx(3.0).epsilon(1e-5));
  CHECK(traj.integrate_m_squared(2.0, 2.0) == 0.0);
  CHECK_THROWS_AS(traj.integrate_m_squared(0.5, 20.0), std::domain_error);
}
