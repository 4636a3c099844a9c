#pragma once

#include <optional>
#include <string>

#include "myers/radial_manifold.hpp"

namespace myers {

enum class CriterionVariant { C1, C2, C3, C4, C5, C6, Wan, Qiu, CGT };

/// The printed statement of the a-offset criterion carries (a + (n-1)/eps);
/// its derivation chain carries (2a + (n-1)/eps). The proof convention is the
/// default: it is the bound the chain actually supports.
enum class C3Convention { statement, proof };

struct CriterionParams {
  CriterionVariant variant = CriterionVariant::C1;
  int n = 3;
  double delta = 0.0;   // C1/C2: |f| <= delta (r+1)
  double a = 0.0;       // C3/C4: f' >= -a
  double k = 0.0;       // C5/C6: k-Bakry-Emery parameter
  double b = 0.0;       // power-law decay exponent
  double r0 = 0.0;      // power-law offset
  double nu = 0.0;      // CGT parameter
  double delta1 = 0.0;  // Qiu drift bound
  double eps = 1.0;     // free positive constant
  double eps1 = 0.01;   // free positive constant
  C3Convention c3_convention = C3Convention::proof;
};

/// Integral of h over [eps, infinity); +infinity when divergent.
double tail_integral(const GrowthFunction& h, double eps);

double const_c1(const GrowthFunction& h, int n, double delta, double eps, double eps1);
double const_c2(int n, double b, double r0, double delta, double eps, double eps1);
double const_c3(const GrowthFunction& h, int n, double a, double eps, double eps1,
                C3Convention convention = C3Convention::proof);
double const_c4(int n, double b, double r0, double a, double eps, double eps1);
double const_c5(const GrowthFunction& h, int n, double k, double eps, double eps1);
double const_c6(int n, double k, double b, double r0, double eps, double eps1);
double wan_constant(int n, double b, double r0, double eps);
double qiu_delta2(const GrowthFunction& h, int n, double delta1, double eps, double eps1);
double cgt_diameter(double r0, double nu);

struct EpsilonOptimum {
  double eps;
  double value;
};

/// Minimizes the eps-parametrized power-law bound (b > 2 branch of C4/C6)
/// numerically; cross-checks the closed forms, which fix eps = r0/(b-2).
EpsilonOptimum epsilon_optimize(CriterionVariant variant, int n, double k, double b,
                                double r0, double a);

struct CompactnessVerdict {
  double constant_used = 0.0;
  double min_margin = 0.0;  // min over the grid of (tensor(r) - C h(r))
  bool hypothesis_ok = false;
  bool criterion_met = false;
  bool predicted_compact = false;
  std::optional<bool> known_compact;
  bool falsification_alarm = false;
  std::optional<double> cross_check_conjugate_time;
  double window_lo = 0.0, window_hi = 0.0;
  std::string notes;
};

/// Checks variant's tensor lower bound tensor(r) >= C h(r) on a grid over
/// [pole_radius, min(r_max_test, r_dom)], with the variant's weight hypothesis.
/// The cross check integrates the Jacobi equation with Ricci input C h(t).
CompactnessVerdict evaluate_criterion(const RadialManifold& m, const CriterionParams& p,
                                      const GrowthFunction& h, double r_max_test = 50.0,
                                      int grid_points = 2000);

}  // namespace myers
