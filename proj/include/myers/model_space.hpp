#pragma once

#include <limits>

namespace myers {

/// Parameters of the simply connected constant-curvature model space.
struct ModelSpaceParams {
  int n;     // dimension, n >= 2
  double H;  // sectional curvature constant [1/length^2]
};

/// Hypothesis windows of the two comparison bounds, and the conjugate radius.
enum class RangeVariant { thm21, thm22, conjugate };

inline constexpr double infinite_range = std::numeric_limits<double>::infinity();

/// Solution of w'' + H w = 0 with w(0) = 0, w'(0) = 1.
double sn_h(double H, double t);

/// d/dt of sn_h.
double sn_h_prime(double H, double t);

/// Mean curvature of the geodesic sphere of radius t in the model space,
/// (n-1) sn'_H / sn_H. Domain: 0 < t, and t below the conjugate radius for H > 0.
double m_h(const ModelSpaceParams& params, double t);

/// The dimension-scaled bound m_H * (1 + 4 delta (t+1) / (n-1)); equals m_h at delta = 0.
double m_h_effective(int n, double delta, double H, double t);

/// Upper end of the t-window for the given variant; +infinity when H <= 0.
double valid_range(double H, RangeVariant variant);

}  // namespace myers
