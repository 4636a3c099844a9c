#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace myers {

using TimeFn = std::function<double(double)>;

struct RiccatiSample {
  double t, u, du, m;  // m = n_eff * du / u
};

/// Sampled solution of the Jacobi-form linear equation
///   u'' + (ric(t)/n_eff) u = 0,
/// together with the derived mean-curvature trajectory m = n_eff u'/u.
/// Zeros of u are located by bisection to 1e-10 in t; a zero after the start
/// is a conjugate point (start at the pole) or a Riccati blow-up (interior
/// start). Samples keep u > 0 throughout.
struct RiccatiTrajectory {
  std::vector<RiccatiSample> samples;
  double n_eff = 0.0;
  double t_start = 0.0;
  std::optional<double> conjugate_time;
  std::optional<double> blowup_time;

  /// Shape-preserving interpolation of m between samples.
  double m_at(double t) const;
  /// Trapezoid integral of m^2 over [a, b] within the sampled range.
  double integrate_m_squared(double a, double b) const;
  /// Smallest spacing between adjacent samples.
  double sample_resolution() const;
};

inline constexpr double default_riccati_step = 1e-3;

/// Integrates from the pole: u(0) = 0, u'(0) = 1. The integration is always
/// performed in the linear u-variable; blow-up of m is a benign zero of u.
RiccatiTrajectory integrate_jacobi(const TimeFn& ric, double n_eff, double t_max,
                                   double step = default_riccati_step);

/// Integrates from interior data m(t0) = m0 via u(t0) = 1, u'(t0) = m0/n_eff.
/// The first zero of u after t0 is recorded as blowup_time.
RiccatiTrajectory integrate_riccati_from(double m0, double t0, const TimeFn& ric,
                                         double n_eff, double t_max,
                                         double step = default_riccati_step);

/// Closed-form m_H(t) used as the analytic oracle for constant Ricci input.
double constant_ric_oracle(double H, int n, double t);

}  // namespace myers
