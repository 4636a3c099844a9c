#pragma once

#include <string>
#include <vector>

#include "myers/radial_manifold.hpp"

namespace myers {

/// Grid slack below this is a violation; above it, floating-point noise.
inline constexpr double slack_tolerance = 1e-9;

enum class ComparisonVerdict { holds, hypothesis_violated, conclusion_violated, empty_window };

struct GridPoint {
  double t, lhs, rhs;
};

/// Grid verification record of one comparison statement. When the hypothesis
/// is violated the conclusion slack is still reported but not judged.
struct ComparisonReport {
  ComparisonVerdict verdict = ComparisonVerdict::holds;
  double hypothesis_slack = 0.0;  // min over the grid of the hypothesis margin
  double conclusion_slack = 0.0;  // min over the grid of (rhs - lhs)
  double window_lo = 0.0, window_hi = 0.0;
  std::vector<GridPoint> grid;
  std::string note;
};

/// m_f(t) <= m_H^{n+4 delta (t+1)}(t) under Ric_f >= (n-1)H and |f| <= delta(r+1),
/// checked on [pole_radius, min(r_dom, pi/(4 sqrt H), r_max_test)].
ComparisonReport verify_thm21(const RadialManifold& m, double delta, double H,
                              double grid_step = 1e-2, double r_max_test = 50.0);

/// m_f(t) <= m_H(t) + a under Ric_f >= (n-1)H and f' >= -a, window end pi/(2 sqrt H).
ComparisonReport verify_thm22(const RadialManifold& m, double a, double H,
                              double grid_step = 1e-2, double r_max_test = 50.0);

/// Slack (rhs - lhs) of the integrated comparison inequality
///   sn_H^2 m_f <= sn_H^2 m_H + 2 delta (t+1)(sn_H^2)' - delta sn_H^2
/// at a single t inside the thm21 window.
double verify_ibp_chain(const RadialManifold& m, double delta, double H, double t);

/// Two-sided bound -4 delta <= m_f(t) <= (n + 4 delta (t+1) - 1)/t for rays on
/// catalog manifolds marked non-compact with Ric_f > 0.
ComparisonReport verify_mf_bounds(const RadialManifold& m, double delta,
                                  double grid_step = 1e-2, double r_max_test = 50.0);

/// Two-sided bound 0 <= m_f(t) <= (n + k - 1)/t under Ric_f^k >= 0.
ComparisonReport verify_mf_bounds_k(const RadialManifold& m, double k,
                                    double grid_step = 1e-2, double r_max_test = 50.0);

}  // namespace myers
