#include "myers/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "myers/model_space.hpp"
#include "myers/numerics.hpp"

namespace myers {

namespace {

constexpr double domain_margin = 1.0 - 1e-6;  // stay strictly inside open domains

std::vector<double> build_grid(double lo, double hi, double step) {
  // Windows with fewer than 10 points are widened by shrinking the step.
  const int n = std::max(10, static_cast<int>(std::floor((hi - lo) / step)) + 1);
  return linspace(lo, hi, n);
}

ComparisonVerdict judge(double hypothesis_slack, double conclusion_slack) {
  if (hypothesis_slack < -slack_tolerance) return ComparisonVerdict::hypothesis_violated;
  if (conclusion_slack < -slack_tolerance) return ComparisonVerdict::conclusion_violated;
  return ComparisonVerdict::holds;
}

double comparison_window_end(const RadialManifold& m, double H, RangeVariant variant,
                             double r_max_test) {
  const double geom = domain_margin * std::min(m.r_domain(), m.profile.first_phi_zero);
  return std::min({r_max_test, valid_range(H, variant), geom});
}

}  // namespace

ComparisonReport verify_thm21(const RadialManifold& m, double delta, double H,
                              double grid_step, double r_max_test) {
  if (!(delta > 0)) throw std::invalid_argument("verify_thm21: delta must be positive");
  if (!(grid_step > 0)) throw std::invalid_argument("verify_thm21: grid_step must be positive");

  ComparisonReport rep;
  rep.window_lo = pole_radius;
  rep.window_hi = comparison_window_end(m, H, RangeVariant::thm21, r_max_test);
  if (!(rep.window_hi > rep.window_lo)) {
    rep.verdict = ComparisonVerdict::empty_window;
    rep.note = "empty verification window";
    return rep;
  }

  double hyp = std::numeric_limits<double>::infinity();
  double concl = std::numeric_limits<double>::infinity();
  for (double t : build_grid(rep.window_lo, rep.window_hi, grid_step)) {
    const double lhs = m.m_f(t);
    const double rhs = m_h_effective(m.n, delta, H, t);
    hyp = std::min({hyp, m.ric_f(t) - (m.n - 1) * H,
                    delta * (t + 1.0) - std::abs(m.weight.f(t))});
    concl = std::min(concl, rhs - lhs);
    rep.grid.push_back({t, lhs, rhs});
  }
  rep.hypothesis_slack = hyp;
  rep.conclusion_slack = concl;
  rep.verdict = judge(hyp, concl);
  return rep;
}

ComparisonReport verify_thm22(const RadialManifold& m, double a, double H,
                              double grid_step, double r_max_test) {
  if (!(a >= 0)) throw std::invalid_argument("verify_thm22: a must be >= 0");
  if (!(grid_step > 0)) throw std::invalid_argument("verify_thm22: grid_step must be positive");

  ComparisonReport rep;
  rep.window_lo = pole_radius;
  rep.window_hi = comparison_window_end(m, H, RangeVariant::thm22, r_max_test);
  if (!(rep.window_hi > rep.window_lo)) {
    rep.verdict = ComparisonVerdict::empty_window;
    rep.note = "empty verification window";
    return rep;
  }

  double hyp = std::numeric_limits<double>::infinity();
  double concl = std::numeric_limits<double>::infinity();
  for (double t : build_grid(rep.window_lo, rep.window_hi, grid_step)) {
    const double lhs = m.m_f(t);
    const double rhs = m_h({m.n, H}, t) + a;
    hyp = std::min({hyp, m.ric_f(t) - (m.n - 1) * H, m.weight.df(t) + a});
    concl = std::min(concl, rhs - lhs);
    rep.grid.push_back({t, lhs, rhs});
  }
  rep.hypothesis_slack = hyp;
  rep.conclusion_slack = concl;
  rep.verdict = judge(hyp, concl);
  return rep;
}

double verify_ibp_chain(const RadialManifold& m, double delta, double H, double t) {
  if (!(delta > 0)) throw std::invalid_argument("verify_ibp_chain: delta must be positive");
  const double hi = comparison_window_end(m, H, RangeVariant::thm21,
                                          std::numeric_limits<double>::infinity());
  if (!(t >= pole_radius) || !(t <= hi))
    throw std::domain_error("verify_ibp_chain: t outside the verification window");

  const double sn = sn_h(H, t);
  const double snp = sn_h_prime(H, t);
  const double sn2 = sn * sn;
  const double lhs = sn2 * m.m_f(t);
  const double rhs = sn2 * m_h({m.n, H}, t) + 2.0 * delta * (t + 1.0) * (2.0 * sn * snp) -
                     delta * sn2;
  return rhs - lhs;
}

ComparisonReport verify_mf_bounds(const RadialManifold& m, double delta,
                                  double grid_step, double r_max_test) {
  if (!(delta > 0)) throw std::invalid_argument("verify_mf_bounds: delta must be positive");
  if (m.known_compact.value_or(true))
    throw std::invalid_argument(
        "verify_mf_bounds: applies to catalog manifolds marked non-compact (ray bound)");

  ComparisonReport rep;
  rep.window_lo = pole_radius;
  rep.window_hi = std::min(r_max_test,
                           domain_margin * std::min(m.r_domain(), m.profile.first_phi_zero));
  if (!(rep.window_hi > rep.window_lo)) {
    rep.verdict = ComparisonVerdict::empty_window;
    rep.note = "empty verification window";
    return rep;
  }

  double hyp = std::numeric_limits<double>::infinity();
  double concl = std::numeric_limits<double>::infinity();
  for (double t : build_grid(rep.window_lo, rep.window_hi, grid_step)) {
    const double mf = m.m_f(t);
    const double upper = (m.n + 4.0 * delta * (t + 1.0) - 1.0) / t;
    hyp = std::min({hyp, m.ric_f(t), delta * (t + 1.0) - std::abs(m.weight.f(t))});
    concl = std::min({concl, mf + 4.0 * delta, upper - mf});
    rep.grid.push_back({t, mf, upper});
  }
  rep.hypothesis_slack = hyp;
  rep.conclusion_slack = concl;
  rep.verdict = judge(hyp, concl);
  return rep;
}

ComparisonReport verify_mf_bounds_k(const RadialManifold& m, double k,
                                    double grid_step, double r_max_test) {
  if (!(k > 0)) throw std::invalid_argument("verify_mf_bounds_k: k must be positive");
  if (m.known_compact.value_or(true))
    throw std::invalid_argument(
        "verify_mf_bounds_k: applies to catalog manifolds marked non-compact (ray bound)");

  ComparisonReport rep;
  rep.window_lo = pole_radius;
  rep.window_hi = std::min(r_max_test,
                           domain_margin * std::min(m.r_domain(), m.profile.first_phi_zero));
  if (!(rep.window_hi > rep.window_lo)) {
    rep.verdict = ComparisonVerdict::empty_window;
    rep.note = "empty verification window";
    return rep;
  }

  double hyp = std::numeric_limits<double>::infinity();
  double concl = std::numeric_limits<double>::infinity();
  for (double t : build_grid(rep.window_lo, rep.window_hi, grid_step)) {
    const double mf = m.m_f(t);
    const double upper = (m.n + k - 1.0) / t;
    hyp = std::min(hyp, m.ric_f_k(k, t));
    concl = std::min({concl, mf, upper - mf});
    rep.grid.push_back({t, mf, upper});
  }
  rep.hypothesis_slack = hyp;
  rep.conclusion_slack = concl;
  rep.verdict = judge(hyp, concl);
  return rep;
}

}  // namespace myers
