#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace myers {

/// Curvature and mean-curvature evaluation stays away from the coordinate
/// pole; for r below this cutoff callers use the (n-1)/r asymptote directly.
inline constexpr double pole_radius = 1e-6;

using RadialFn = std::function<double(double)>;

/// Warp factor phi of the rotationally symmetric metric dr^2 + phi(r)^2 g_S.
/// Catalog profiles carry analytic derivatives and a pole-safe closed form of
/// the radial curvature K = -phi''/phi; tabulated profiles interpolate with a
/// natural cubic spline and finite-difference second derivatives.
struct WarpProfile {
  std::string name;
  double r_max = std::numeric_limits<double>::infinity();
  double first_phi_zero = std::numeric_limits<double>::infinity();
  // Radius up to which radial_curvature can be evaluated (the closed forms of
  // the catalog extend past first_phi_zero; tabulated data does not).
  double curvature_domain_end = std::numeric_limits<double>::infinity();
  RadialFn phi, dphi, d2phi;
  RadialFn radial_curvature;
  std::optional<bool> known_compact;

  static WarpProfile space_form(double H);
  static WarpProfile perturbed_sine(double beta);
  static WarpProfile perturbed_linear(double beta);
  static WarpProfile tabulated(std::vector<double> r, std::vector<double> phi_values,
                               std::string origin = "<table>");
  static WarpProfile tabulated_from_file(const std::string& path);
};

/// Radial weight f of the measure e^{-f} dv.
struct WeightFunction {
  std::string name;
  double r_max = std::numeric_limits<double>::infinity();
  RadialFn f, df, d2f;

  static WeightFunction zero();
  static WeightFunction linear(double delta);        // f = delta * r
  static WeightFunction bounded_sine(double delta);  // f = delta * sin r
  static WeightFunction log_growth(double c);        // f = c * log(1 + r)
  static WeightFunction tabulated(std::vector<double> r, std::vector<double> f_values,
                                  std::string origin = "<table>");
  static WeightFunction tabulated_from_file(const std::string& path);
  static WeightFunction custom(std::string name, RadialFn f, RadialFn df, RadialFn d2f);
};

/// Rotationally symmetric smooth metric measure space restricted to a radial
/// geodesic from the pole. Immutable after construction; evaluators are pure.
struct RadialManifold {
  int n = 3;
  WarpProfile profile;
  WeightFunction weight;
  std::optional<bool> known_compact;

  double r_domain() const { return std::min(profile.r_max, weight.r_max); }

  double ricci_radial(double r) const;     // -(n-1) phi''/phi
  double mean_curv(double r) const;        // (n-1) phi'/phi
  double m_f(double r) const;              // mean_curv - f'
  double ric_f(double r) const;            // ricci_radial + f''
  double ric_f_k(double k, double r) const;  // ric_f - f'^2/k
};

RadialManifold make_manifold(int n, WarpProfile profile, WeightFunction weight);

/// Positive growth function h in the curvature lower bounds.
struct GrowthFunction {
  enum class Kind { constant, power_law, tabulated, custom };
  Kind kind = Kind::custom;
  std::string name;
  RadialFn h;
  double b = 0.0, r0 = 0.0, c = 0.0;
  // eps -> integral of h over [eps, infinity); may return +infinity. Absent
  // means no closed form is known and the tail is treated as divergent
  // (any positive continuous extension of the data has a divergent tail).
  std::optional<std::function<double(double)>> analytic_tail;

  static GrowthFunction constant(double c);
  static GrowthFunction power_law(double b, double r0);
  static GrowthFunction tabulated_from_file(const std::string& path);
};

}  // namespace myers
