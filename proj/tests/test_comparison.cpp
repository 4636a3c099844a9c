#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "myers/comparison.hpp"
#include "myers/model_space.hpp"
#include "support.hpp"

using namespace myers;

namespace {

constexpr double pi = std::numbers::pi;

RadialManifold sphere_with(WeightFunction w, int n = 3) {
  return make_manifold(n, WarpProfile::space_form(1.0), std::move(w));
}

}  // namespace

TEST_CASE("thm21 on the round sphere with zero weight reduces to the classical bound") {
  auto rep = verify_thm21(sphere_with(WeightFunction::zero()), 0.01, 1.0);
  CHECK(rep.verdict == ComparisonVerdict::holds);
  CHECK(rep.hypothesis_slack >= -slack_tolerance);
  CHECK(rep.conclusion_slack >= -slack_tolerance);
  CHECK(rep.window_hi == doctest::Approx(pi / 4).epsilon(1e-12));
}

TEST_CASE("thm21 on the weighted sphere family") {
  auto m = sphere_with(WeightFunction::bounded_sine(0.1));
  auto rep = verify_thm21(m, 0.1, 0.95);
  CHECK(rep.verdict == ComparisonVerdict::holds);
  CHECK(rep.hypothesis_slack > 0.0);
  CHECK(rep.conclusion_slack > 0.0);
}

TEST_CASE("thm21 flat case with linear weight") {
  // m_f = 1/t - 1/2 <= (1/t)(1 + 2(t+1)) on every t > 0
  auto m = make_manifold(2, WarpProfile::space_form(0.0), WeightFunction::linear(0.5));
  auto rep = verify_thm21(m, 0.5, 0.0);
  CHECK(rep.verdict == ComparisonVerdict::holds);
  for (const auto& g : rep.grid) {
    CHECK(g.lhs == doctest::Approx(1.0 / g.t - 0.5).epsilon(1e-12));
    CHECK(g.rhs == doctest::Approx((1.0 / g.t) * (1.0 + 2.0 * (g.t + 1.0))).epsilon(1e-12));
  }
}

TEST_CASE("thm22 equality on space forms with zero weight") {
  for (double H : {1.0, 0.0, -1.0}) {
    auto m = make_manifold(3, WarpProfile::space_form(H), WeightFunction::zero());
    auto rep = verify_thm22(m, 0.0, H);
    CHECK(rep.verdict == ComparisonVerdict::holds);
    CHECK(std::abs(rep.conclusion_slack) <= 1e-8);
  }
}

TEST_CASE("thm22 on the weighted sphere and the flat drift case") {
  auto rep = verify_thm22(sphere_with(WeightFunction::bounded_sine(0.1)), 0.1, 0.95);
  CHECK(rep.verdict == ComparisonVerdict::holds);

  // f' = 1 >= 0, a = 0: subtracting a positive drift only helps
  auto e = make_manifold(2, WarpProfile::space_form(0.0), WeightFunction::linear(1.0));
  auto rep2 = verify_thm22(e, 0.0, 0.0);
  CHECK(rep2.verdict == ComparisonVerdict::holds);
  CHECK(rep2.conclusion_slack >= 1.0 - 1e-12);
}

TEST_CASE("hypothesis violation is reported as such, never as a falsification") {
  auto m = make_manifold(3, WarpProfile::space_form(-1.0), WeightFunction::zero());
  auto rep = verify_thm22(m, 0.0, 1.0);
  CHECK(rep.verdict == ComparisonVerdict::hypothesis_violated);
  CHECK(rep.hypothesis_slack < -slack_tolerance);
  auto rep21 = verify_thm21(m, 0.1, 1.0);
  CHECK(rep21.verdict == ComparisonVerdict::hypothesis_violated);
}

TEST_CASE("a lying profile is caught as a conclusion violation") {
  // phi is hyperbolic but the declared curvature claims flatness: the
  // hypothesis margin looks fine while the real mean curvature beats the
  // flat bound. This exercises the conclusion_violated path end to end.
  WarpProfile lying = WarpProfile::space_form(-1.0);
  lying.radial_curvature = [](double) { return 0.0; };
  lying.d2phi = [](double) { return 0.0; };
  lying.known_compact = false;
  auto m = make_manifold(2, lying, WeightFunction::zero());
  auto rep = verify_thm22(m, 0.0, 0.0);
  CHECK(rep.verdict == ComparisonVerdict::conclusion_violated);
  CHECK(rep.conclusion_slack < -slack_tolerance);
  CHECK(rep.hypothesis_slack >= -slack_tolerance);
}

TEST_CASE("delta-monotonicity of the thm21 conclusion slack") {
  auto m = sphere_with(WeightFunction::bounded_sine(0.05));
  double prev = -std::numeric_limits<double>::infinity();
  for (double delta : {0.05, 0.1, 0.2}) {
    auto rep = verify_thm21(m, delta, 0.9);
    CHECK(rep.verdict == ComparisonVerdict::holds);
    CHECK(rep.conclusion_slack >= prev - 1e-12);
    prev = rep.conclusion_slack;
  }
}

TEST_CASE("reduction consistency: thm21 at delta->0 meets thm22 at a=0") {
  for (double H : {0.0, -1.0}) {
    for (auto profile : {WarpProfile::space_form(H), WarpProfile::perturbed_linear(0.05)}) {
      if (H != 0.0 && profile.name == "perturbed_linear") continue;
      auto m = make_manifold(3, profile, WeightFunction::zero());
      auto r21 = verify_thm21(m, 1e-12, H, 1e-2, 20.0);
      auto r22 = verify_thm22(m, 0.0, H, 1e-2, 20.0);
      CHECK(r21.verdict == r22.verdict);
      CHECK(std::abs(r21.conclusion_slack - r22.conclusion_slack) <= 1e-9);
      CHECK(std::abs(r21.hypothesis_slack - r22.hypothesis_slack) <= 1e-9);
    }
  }
  // H > 0: both windows see the equality case on the sphere
  auto s = sphere_with(WeightFunction::zero());
  auto r21 = verify_thm21(s, 1e-12, 1.0);
  auto r22 = verify_thm22(s, 0.0, 1.0);
  CHECK(r21.verdict == r22.verdict);
  CHECK(std::abs(r21.conclusion_slack) <= 1e-9);
  CHECK(std::abs(r22.conclusion_slack) <= 1e-9);
}

TEST_CASE("integrated comparison chain slack") {
  auto s = sphere_with(WeightFunction::bounded_sine(0.1));
  CHECK(verify_ibp_chain(s, 0.1, 0.95, 0.5) > 0.0);
  // boundary of the window
  const double t_end = valid_range(0.95, RangeVariant::thm21);
  CHECK(verify_ibp_chain(s, 0.1, 0.95, t_end) >= -slack_tolerance);

  // near-zero delta collapses to the classical sn^2 (m_H - m) >= 0
  auto z = sphere_with(WeightFunction::zero());
  CHECK(verify_ibp_chain(z, 1e-12, 1.0, 0.5) >= -slack_tolerance);

  CHECK_THROWS_AS(verify_ibp_chain(s, 0.1, 0.95, 5.0), std::domain_error);
  CHECK_THROWS_AS(verify_ibp_chain(s, 0.1, 0.95, 0.0), std::domain_error);
}

TEST_CASE("two-sided m_f bounds on rays") {
  auto e = make_manifold(2, WarpProfile::space_form(0.0), WeightFunction::zero());
  auto rep = verify_mf_bounds(e, 0.01);
  CHECK(rep.verdict == ComparisonVerdict::holds);
  for (const auto& g : rep.grid) {
    CHECK(g.lhs == doctest::Approx(1.0 / g.t).epsilon(1e-12));
    CHECK(g.rhs == doctest::Approx((1.0 + 0.04 * (g.t + 1.0)) / g.t).epsilon(1e-12));
  }

  // The perturbed-linear profile has a sign-indefinite radial Ricci (its
  // curvature dips below zero near the pole for beta > 0), so the Ric_f > 0
  // hypothesis cannot hold there with a linear weight and the check must say
  // so rather than judge the conclusion.
  auto p = make_manifold(3, WarpProfile::perturbed_linear(0.05), WeightFunction::linear(0.1));
  auto rep2 = verify_mf_bounds(p, 0.1, 1e-2, 50.0);
  CHECK(rep2.verdict == ComparisonVerdict::hypothesis_violated);
  CHECK(p.ric_f(0.1) < 0.0);

  // A weight with strictly positive f'' and sub-linear |f| gives an honest
  // positive case on the flat profile: Ric_f = delta e^{-r} > 0.
  auto w = WeightFunction::custom(
      "exp_saturating", [](double r) { return 0.1 * (r + std::exp(-r) - 1.0); },
      [](double r) { return 0.1 * (1.0 - std::exp(-r)); },
      [](double r) { return 0.1 * std::exp(-r); });
  auto q = make_manifold(3, WarpProfile::space_form(0.0), w);
  auto rep4 = verify_mf_bounds(q, 0.1, 1e-2, 50.0);
  CHECK(rep4.verdict == ComparisonVerdict::holds);
  CHECK(rep4.hypothesis_slack > 0.0);

  // large-t tail of the upper bound
  auto rep3 = verify_mf_bounds(e, 0.01, 1e-1, 100.0);
  CHECK(rep3.verdict == ComparisonVerdict::holds);
  CHECK(rep3.grid.back().t == doctest::Approx(100.0));
  CHECK(rep3.grid.back().rhs - rep3.grid.back().lhs >= 0.0);
}

TEST_CASE("m_f bounds preconditions") {
  auto s = sphere_with(WeightFunction::zero());
  CHECK_THROWS_AS(verify_mf_bounds(s, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(verify_mf_bounds_k(s, 1.0), std::invalid_argument);

  std::vector<double> r, y;
  for (int i = 0; i <= 300; ++i) {
    r.push_back(10.0 * i / 300.0);
    y.push_back(r.back());
  }
  auto tab = make_manifold(2, WarpProfile::tabulated(r, y), WeightFunction::zero());
  CHECK(!tab.known_compact.has_value());
  CHECK_THROWS_AS(verify_mf_bounds(tab, 0.1), std::invalid_argument);
}

TEST_CASE("k-version of the m_f bounds") {
  auto e = make_manifold(2, WarpProfile::space_form(0.0), WeightFunction::zero());
  for (double k : {0.5, 1.0, 10.0}) {
    auto rep = verify_mf_bounds_k(e, k);
    CHECK(rep.verdict == ComparisonVerdict::holds);
  }

  // f' = 0.1 (1 - e^{-r}): the k = 1 hypothesis holds only on a finite window
  auto w = WeightFunction::custom(
      "saturating_drift", [](double r) { return 0.1 * (r + std::exp(-r) - 1.0); },
      [](double r) { return 0.1 * (1.0 - std::exp(-r)); },
      [](double r) { return 0.1 * std::exp(-r); });
  auto m = make_manifold(2, WarpProfile::space_form(0.0), w);
  auto ok = verify_mf_bounds_k(m, 1.0, 1e-2, 2.0);
  CHECK(ok.verdict == ComparisonVerdict::holds);
  CHECK(ok.hypothesis_slack >= 0.0);
  auto bad = verify_mf_bounds_k(m, 1.0, 1e-2, 50.0);
  CHECK(bad.verdict == ComparisonVerdict::hypothesis_violated);
}

TEST_CASE("k -> infinity: the hypothesis side of the k-bounds meets the delta->0 bounds") {
  auto e = make_manifold(2, WarpProfile::space_form(0.0), WeightFunction::zero());
  auto rk = verify_mf_bounds_k(e, 1e12);
  auto rd = verify_mf_bounds(e, 1e-9);
  CHECK(rk.verdict == rd.verdict);
  CHECK(std::abs(rk.hypothesis_slack - rd.hypothesis_slack) <= 1e-6);
}

TEST_CASE("empty window status") {
  auto s = sphere_with(WeightFunction::zero());
  auto rep = verify_thm21(s, 0.1, 1e30);
  CHECK(rep.verdict == ComparisonVerdict::empty_window);
}

TEST_CASE("parameter validation") {
  auto s = sphere_with(WeightFunction::zero());
  CHECK_THROWS_AS(verify_thm21(s, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm21(s, 0.1, 1.0, -1e-2), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm22(s, -0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(verify_mf_bounds_k(s, 0.0), std::invalid_argument);
}
