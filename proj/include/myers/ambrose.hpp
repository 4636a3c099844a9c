#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "myers/radial_manifold.hpp"
#include "myers/riccati.hpp"

namespace myers {

/// Minimum over t in [1, t_max] of C(1 - t^{-alpha}) - f'(t). Requires C > 0
/// and alpha > 1; the boundary case alpha = 1 is rejected.
double check_fprime_condition(const WeightFunction& w, double C, double alpha,
                              double t_max, int grid_points = 2000);

/// Quadrature of Ric_f along the radial ray over [pole_radius, T], plus the
/// first-order pole patch Ric_f(pole_radius) * pole_radius.
double partial_ricci_integral(const RadialManifold& m, double T);

enum class SequenceStatus { ok, precondition_failed, truncated, contradiction };

struct BlowupTerm {
  int ell;
  double t_ell;
  double lower_bound;     // 2^ell * n
  double observed_neg_m;  // -m(t_ell) interpolated from the trajectory
  bool satisfied;
};

/// Doubling-sequence record: t_{ell+1} = t_ell + 2^{1-ell}, converging to
/// T = t1 + 2. A trajectory that stays smooth through T while every resolvable
/// term is satisfied is flagged `contradiction`; the expected outcome for a
/// genuine trajectory is blow-up strictly before T.
struct BlowupSequenceReport {
  double t1 = 0.0;
  double T = 0.0;
  SequenceStatus status = SequenceStatus::ok;
  std::vector<BlowupTerm> terms;
  std::optional<double> blowup_time;
  std::string note;
};

BlowupSequenceReport blowup_sequence_verify(const RiccatiTrajectory& traj, int n, double t1);

enum class IntegralTrend { diverging, converging, inconclusive };

struct AmbroseReport {
  double fprime_slack = 0.0;
  bool fprime_ok = false;
  std::vector<std::pair<double, double>> integral_probes;  // (T, integral)
  IntegralTrend trend = IntegralTrend::inconclusive;
  std::optional<double> conjugate_time;
  bool compact_signature = false;
  std::string notes;
};

/// Bundles the f' growth check, partial Ricci integrals over doubling windows
/// (trend classification is an explicitly labeled finite-data heuristic), and
/// a conjugate-point search along the ray.
AmbroseReport ambrose_diagnosis(const RadialManifold& m, double C, double alpha,
                                double T_probe);

}  // namespace myers
