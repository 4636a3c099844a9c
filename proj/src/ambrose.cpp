#include "myers/ambrose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "myers/numerics.hpp"

namespace myers {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

double quad_ric_f(const RadialManifold& m, double a, double b) {
  const double r_cap = (1.0 - 1e-12) * m.r_domain();
  auto f = [&m, r_cap](double r) { return m.ric_f(std::clamp(r, pole_radius, r_cap)); };
  return adaptive_simpson(f, a, b, 1e-10);
}

}  // namespace

double check_fprime_condition(const WeightFunction& w, double C, double alpha,
                              double t_max, int grid_points) {
  if (!(C > 0)) throw std::invalid_argument("check_fprime_condition: C must be positive");
  if (!(alpha > 1))
    throw std::invalid_argument("check_fprime_condition: alpha must exceed 1");
  if (!(t_max > 1)) throw std::invalid_argument("check_fprime_condition: t_max must exceed 1");

  double slack = inf;
  for (double t : linspace(1.0, t_max, std::max(grid_points, 10)))
    slack = std::min(slack, C * (1.0 - std::pow(t, -alpha)) - w.df(t));
  return slack;
}

double partial_ricci_integral(const RadialManifold& m, double T) {
  if (!(T > pole_radius))
    throw std::domain_error("partial_ricci_integral: T must exceed the pole cutoff");
  if (T > m.r_domain())
    throw std::domain_error("partial_ricci_integral: T beyond the manifold domain");
  return quad_ric_f(m, pole_radius, T) + m.ric_f(pole_radius) * pole_radius;
}

BlowupSequenceReport blowup_sequence_verify(const RiccatiTrajectory& traj, int n,
                                            double t1) {
  if (n < 2) throw std::invalid_argument("blowup_sequence_verify: n must be >= 2");
  if (!(t1 >= 1.0))
    throw std::invalid_argument("blowup_sequence_verify: t1 must be >= 1");

  BlowupSequenceReport rep;
  rep.t1 = t1;
  rep.T = t1 + 2.0;

  if (traj.samples.size() < 2 || traj.samples.front().t > 1.0 + 1e-9 ||
      traj.samples.back().t < t1 - 1e-9) {
    rep.status = SequenceStatus::truncated;
    rep.note = "trajectory does not cover [1, t1]";
    return rep;
  }

  // Base inequality at t1: -m(t1) >= integral of m^2 over [1, t1] / (n-1) + 2n.
  // Tolerance covers the trapezoid quadrature of the sampled integrand.
  const double base_lhs = -traj.m_at(t1);
  const double base_rhs = traj.integrate_m_squared(1.0, t1) / (n - 1.0) + 2.0 * n;
  if (base_lhs < base_rhs - 1e-6) {
    rep.status = SequenceStatus::precondition_failed;
    std::ostringstream os;
    os << "base inequality fails at t1: -m(t1)=" << base_lhs << " < " << base_rhs;
    rep.note = os.str();
    return rep;
  }

  if (traj.blowup_time && *traj.blowup_time <= rep.T) rep.blowup_time = traj.blowup_time;

  const double coverage = traj.samples.back().t;
  const double resolution = std::max(traj.sample_resolution(), 1e-9);
  double t_ell = t1;
  for (int ell = 1; ell <= 50; ++ell) {
    if (t_ell > coverage + 1e-12) break;
    if (ell > 1 && std::pow(2.0, 2 - ell) < resolution) break;  // below sample resolution
    const double observed = -traj.m_at(std::min(t_ell, coverage));
    const double bound = std::pow(2.0, ell) * n;
    rep.terms.push_back({ell, t_ell, bound, observed, observed >= bound - 1e-9});
    t_ell += std::pow(2.0, 1 - ell);
  }

  const bool smooth_through_T = !rep.blowup_time && coverage >= rep.T - 1e-9;
  const bool all_satisfied =
      std::all_of(rep.terms.begin(), rep.terms.end(),
                  [](const BlowupTerm& t) { return t.satisfied; });
  if (rep.blowup_time) {
    rep.status = SequenceStatus::ok;
    rep.note = "finite-time blow-up inside (t1, T]";
  } else if (smooth_through_T && all_satisfied) {
    rep.status = SequenceStatus::contradiction;
    rep.note = "trajectory smooth through T with every resolvable term satisfied";
  } else if (!smooth_through_T) {
    rep.status = SequenceStatus::truncated;
    rep.note = "trajectory ends before T without blow-up";
  } else {
    rep.status = SequenceStatus::ok;
    rep.note = "sequence terms break down before T";
  }
  return rep;
}

AmbroseReport ambrose_diagnosis(const RadialManifold& m, double C, double alpha,
                                double T_probe) {
  if (!(T_probe > 0)) throw std::invalid_argument("ambrose_diagnosis: T_probe must be positive");
  AmbroseReport rep;
  std::ostringstream notes;

  const double r_dom = m.r_domain();
  const double probe_cap = std::min(T_probe, 0.98 * r_dom);
  if (probe_cap < T_probe) notes << "probes capped at 0.98 r_dom=" << probe_cap << "; ";

  if (probe_cap > 1.0) {
    rep.fprime_slack = check_fprime_condition(m.weight, C, alpha, probe_cap);
    rep.fprime_ok = rep.fprime_slack >= -1e-9;
  } else {
    rep.fprime_slack = -inf;
    rep.fprime_ok = false;
    notes << "f' window [1, T] empty; ";
  }

  // Partial integrals at T, 2T, 4T. Increments are integrated per window so
  // that a large common bulk does not drown them.
  const double Tb = probe_cap / 4.0;
  const double I1 = partial_ricci_integral(m, Tb);
  const double dA = quad_ric_f(m, Tb, 2.0 * Tb);
  const double dB = quad_ric_f(m, 2.0 * Tb, 4.0 * Tb);
  rep.integral_probes = {{Tb, I1}, {2.0 * Tb, I1 + dA}, {4.0 * Tb, I1 + dA + dB}};
  const double atol = 1e-12 * (1.0 + std::abs(I1));
  if (std::abs(dA) <= atol && std::abs(dB) <= atol)
    rep.trend = IntegralTrend::converging;
  else if (dA <= atol)
    rep.trend = IntegralTrend::inconclusive;
  else
    rep.trend = (dB / dA > 0.5) ? IntegralTrend::diverging : IntegralTrend::converging;

  // Conjugate-point search along the ray; the catalog curvature forms extend
  // smoothly past the first zero of phi, so the search window may poke beyond
  // r_dom to resolve a conjugate point sitting exactly at the domain end.
  double search_end;
  if (std::isfinite(m.profile.first_phi_zero))
    search_end = 1.05 * m.profile.first_phi_zero + 0.1;
  else
    search_end = std::max(2.0 * T_probe, 10.0);
  search_end = std::min(search_end, m.profile.curvature_domain_end);
  const int n = m.n;
  const auto& curv = m.profile.radial_curvature;
  const double curv_cap = std::min(search_end, (1.0 - 1e-12) * m.profile.curvature_domain_end);
  auto ric = [n, &curv, curv_cap](double t) {
    return (n - 1) * curv(std::clamp(t, pole_radius, curv_cap));
  };
  const auto traj = integrate_jacobi(ric, n - 1.0, search_end);
  rep.conjugate_time = traj.conjugate_time;
  rep.compact_signature = traj.conjugate_time.has_value();

  notes << "trend classification is a finite-data heuristic (increment ratio > 0.5 "
           "reads as diverging)";
  rep.notes = notes.str();
  return rep;
}

}  // namespace myers
