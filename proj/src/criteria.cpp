#include "myers/criteria.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "myers/comparison.hpp"
#include "myers/numerics.hpp"
#include "myers/riccati.hpp"

namespace myers {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_free_constants(double eps, double eps1) {
  if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
  if (!(eps1 > 0)) throw std::invalid_argument("eps1 must be positive");
}

}  // namespace

double tail_integral(const GrowthFunction& h, double eps) {
  if (!(eps > 0)) throw std::invalid_argument("tail_integral: eps must be positive");
  if (h.analytic_tail) return (*h.analytic_tail)(eps);
  // No closed form: any positive continuous extension of the data beyond its
  // range has a divergent tail.
  return inf;
}

double const_c1(const GrowthFunction& h, int n, double delta, double eps, double eps1) {
  require_free_constants(eps, eps1);
  if (!(delta > 0)) throw std::invalid_argument("const_c1: delta must be positive");
  const double tail = tail_integral(h, eps);
  if (std::isinf(tail)) return eps1;
  return (4.0 * delta + (n + 4.0 * delta * (eps + 1.0) - 1.0) / eps) / tail + eps1;
}

double const_c2(int n, double b, double r0, double delta, double eps, double eps1) {
  require_free_constants(eps, eps1);
  if (!(r0 > 0)) throw std::invalid_argument("const_c2: r0 must be positive");
  if (b <= 1.0) return eps1;
  return (4.0 * delta + (n + 4.0 * delta * (eps + 1.0) - 1.0) / eps) *
             ((b - 1.0) * std::pow(r0 + eps, b - 1.0)) +
         eps1;
}

double const_c3(const GrowthFunction& h, int n, double a, double eps, double eps1,
                C3Convention convention) {
  require_free_constants(eps, eps1);
  if (!(a >= 0)) throw std::invalid_argument("const_c3: a must be >= 0");
  const double tail = tail_integral(h, eps);
  if (std::isinf(tail)) return eps1;
  const double drift = (convention == C3Convention::proof) ? 2.0 * a : a;
  return (drift + (n - 1.0) / eps) / tail + eps1;
}

double const_c4(int n, double b, double r0, double a, double eps, double eps1) {
  require_free_constants(eps, eps1);
  if (!(r0 > 0)) throw std::invalid_argument("const_c4: r0 must be positive");
  if (!(a >= 0)) throw std::invalid_argument("const_c4: a must be >= 0");
  if (b > 2.0) {
    // eps is fixed at r0/(b-2) inside this branch.
    return (2.0 * a * r0 + (n - 1.0) * (b - 2.0)) * std::pow(r0, b - 2.0) *
           std::pow(b - 1.0, b) / std::pow(b - 2.0, b - 1.0);
  }
  if (b > 1.0)
    return (2.0 * a + (n - 1.0) / eps) * (b - 1.0) * std::pow(r0 + eps, b - 1.0) + eps1;
  return eps1;
}

double const_c5(const GrowthFunction& h, int n, double k, double eps, double eps1) {
  require_free_constants(eps, eps1);
  if (!(k >= 0)) throw std::invalid_argument("const_c5: k must be >= 0");
  const double tail = tail_integral(h, eps);
  if (std::isinf(tail)) return eps1;
  return (n + k - 1.0) / eps / tail + eps1;
}

double const_c6(int n, double k, double b, double r0, double eps, double eps1) {
  require_free_constants(eps, eps1);
  if (!(r0 > 0)) throw std::invalid_argument("const_c6: r0 must be positive");
  if (!(k >= 0)) throw std::invalid_argument("const_c6: k must be >= 0");
  if (b > 2.0)
    return (n + k - 1.0) * std::pow(b - 1.0, b) / std::pow(b - 2.0, b - 2.0) *
           std::pow(r0, b - 2.0);
  if (b > 1.0)
    return (n + k - 1.0) / eps * (b - 1.0) * std::pow(r0 + eps, b - 1.0) + eps1;
  return eps1;
}

double wan_constant(int n, double b, double r0, double eps) {
  if (!(r0 > 0)) throw std::invalid_argument("wan_constant: r0 must be positive");
  if (b > 2.0)
    return (n - 1.0) * std::pow(b - 1.0, b) / std::pow(b - 2.0, b - 2.0) *
           std::pow(r0, b - 2.0);
  if (b == 2.0) {
    if (!(eps > 0)) throw std::invalid_argument("wan_constant: eps must be positive");
    return (n - 1.0) * (1.0 + r0 / eps);
  }
  throw std::invalid_argument("wan_constant: defined for b >= 2");
}

double qiu_delta2(const GrowthFunction& h, int n, double delta1, double eps, double eps1) {
  require_free_constants(eps, eps1);
  const double tail = tail_integral(h, eps);
  if (std::isinf(tail)) return eps1;
  return ((n - 1.0) / eps + 2.0 * delta1) / tail + eps1;
}

double cgt_diameter(double r0, double nu) {
  if (!(r0 > 0)) throw std::invalid_argument("cgt_diameter: r0 must be positive");
  if (!(nu > 0)) throw std::invalid_argument("cgt_diameter: nu must be positive");
  return r0 * std::exp(std::numbers::pi / nu);
}

EpsilonOptimum epsilon_optimize(CriterionVariant variant, int n, double k, double b,
                                double r0, double a) {
  if (variant != CriterionVariant::C4 && variant != CriterionVariant::C6)
    throw std::invalid_argument("epsilon_optimize: applies to C4 and C6");
  if (!(b > 2.0)) throw std::invalid_argument("epsilon_optimize: requires b > 2");
  if (!(r0 > 0)) throw std::invalid_argument("epsilon_optimize: r0 must be positive");

  auto bound = [=](double eps) {
    const double coeff = (variant == CriterionVariant::C4) ? (2.0 * a + (n - 1.0) / eps)
                                                           : ((n + k - 1.0) / eps);
    return coeff * (b - 1.0) * std::pow(r0 + eps, b - 1.0);
  };
  const auto res = minimize_scan_golden(bound, 1e-6, 1e3 * r0);
  return {res.x, res.value};
}

namespace {

double criterion_constant(const CriterionParams& p, const GrowthFunction& h) {
  switch (p.variant) {
    case CriterionVariant::C1: return const_c1(h, p.n, p.delta, p.eps, p.eps1);
    case CriterionVariant::C2: return const_c2(p.n, p.b, p.r0, p.delta, p.eps, p.eps1);
    case CriterionVariant::C3:
      return const_c3(h, p.n, p.a, p.eps, p.eps1, p.c3_convention);
    case CriterionVariant::C4: return const_c4(p.n, p.b, p.r0, p.a, p.eps, p.eps1);
    case CriterionVariant::C5: return const_c5(h, p.n, p.k, p.eps, p.eps1);
    case CriterionVariant::C6: return const_c6(p.n, p.k, p.b, p.r0, p.eps, p.eps1);
    default:
      throw std::invalid_argument("evaluate_criterion: variant must be one of C1..C6");
  }
}

bool power_law_variant(CriterionVariant v) {
  return v == CriterionVariant::C2 || v == CriterionVariant::C4 ||
         v == CriterionVariant::C6;
}

bool k_variant(CriterionVariant v) {
  return v == CriterionVariant::C5 || v == CriterionVariant::C6;
}

const char* variant_name(CriterionVariant v) {
  switch (v) {
    case CriterionVariant::C1: return "C1";
    case CriterionVariant::C2: return "C2";
    case CriterionVariant::C3: return "C3";
    case CriterionVariant::C4: return "C4";
    case CriterionVariant::C5: return "C5";
    case CriterionVariant::C6: return "C6";
    case CriterionVariant::Wan: return "wan";
    case CriterionVariant::Qiu: return "qiu";
    case CriterionVariant::CGT: return "cgt";
  }
  return "?";
}

}  // namespace

CompactnessVerdict evaluate_criterion(const RadialManifold& m, const CriterionParams& p,
                                      const GrowthFunction& h, double r_max_test,
                                      int grid_points) {
  if (grid_points < 10)
    throw std::invalid_argument("evaluate_criterion: grid needs at least 10 points");
  if (power_law_variant(p.variant)) {
    if (h.kind != GrowthFunction::Kind::power_law || h.b != p.b || h.r0 != p.r0)
      throw std::invalid_argument(
          "evaluate_criterion: power-law variants require the matching power-law h");
  }
  if (k_variant(p.variant) && !(p.k > 0))
    throw std::invalid_argument("evaluate_criterion: k must be positive for C5/C6");

  CompactnessVerdict verdict;
  verdict.known_compact = m.known_compact;
  verdict.constant_used = criterion_constant(p, h);
  verdict.window_lo = pole_radius;
  verdict.window_hi = std::min(r_max_test, (1.0 - 1e-6) * m.r_domain());
  if (!(verdict.window_hi > verdict.window_lo))
    throw std::invalid_argument("evaluate_criterion: empty evaluation window");

  const bool uses_delta_hypothesis =
      p.variant == CriterionVariant::C1 || p.variant == CriterionVariant::C2;
  const bool uses_drift_hypothesis =
      p.variant == CriterionVariant::C3 || p.variant == CriterionVariant::C4;
  if (uses_delta_hypothesis && !(p.delta > 0))
    throw std::invalid_argument("evaluate_criterion: delta must be positive for C1/C2");
  if (uses_drift_hypothesis && !(p.a >= 0))
    throw std::invalid_argument("evaluate_criterion: a must be >= 0 for C3/C4");

  double min_margin = inf;
  double hyp_slack = inf;
  double hyp_worst_r = 0.0;
  int hyp_failures = 0;
  for (double r : linspace(verdict.window_lo, verdict.window_hi, grid_points)) {
    const double tensor = k_variant(p.variant) ? m.ric_f_k(p.k, r) : m.ric_f(r);
    min_margin = std::min(min_margin, tensor - verdict.constant_used * h.h(r));
    double slack = inf;
    if (uses_delta_hypothesis) slack = p.delta * (r + 1.0) - std::abs(m.weight.f(r));
    if (uses_drift_hypothesis) slack = m.weight.df(r) + p.a;
    if (slack < hyp_slack) {
      hyp_slack = slack;
      hyp_worst_r = r;
    }
    if (slack < -slack_tolerance) ++hyp_failures;
  }

  verdict.min_margin = min_margin;
  verdict.hypothesis_ok = hyp_slack >= -slack_tolerance;
  verdict.criterion_met = verdict.hypothesis_ok && min_margin >= 0.0;
  verdict.predicted_compact = verdict.criterion_met;
  verdict.falsification_alarm =
      verdict.criterion_met && m.known_compact.has_value() && !*m.known_compact;

  // Model trajectory driven by the criterion's lower-bound curve.
  const double n_eff = k_variant(p.variant) ? (p.n + p.k - 1.0) : (p.n - 1.0);
  const double C = verdict.constant_used;
  const auto& hf = h.h;
  const auto traj = integrate_jacobi([C, &hf](double t) { return C * hf(t); }, n_eff,
                                     r_max_test);
  verdict.cross_check_conjugate_time = traj.conjugate_time;

  std::ostringstream notes;
  notes << "variant=" << variant_name(p.variant) << " window=[" << verdict.window_lo << ","
        << verdict.window_hi << "] points=" << grid_points
        << "; criterion tested on this window only";
  if (!verdict.hypothesis_ok) {
    notes << "; weight hypothesis violated at " << hyp_failures
          << " grid points (worst slack " << hyp_slack << " at r=" << hyp_worst_r << ")";
  }
  if ((p.variant == CriterionVariant::C1 || p.variant == CriterionVariant::C3 ||
       p.variant == CriterionVariant::C5) &&
      std::isinf(tail_integral(h, p.eps)))
    notes << "; divergent growth tail: constant equals eps1";
  if (verdict.falsification_alarm)
    notes << "; ALARM: criterion met on a catalog manifold known to be non-compact";
  verdict.notes = notes.str();
  return verdict;
}

}  // namespace myers
