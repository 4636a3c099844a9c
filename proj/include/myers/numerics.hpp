#pragma once

#include <functional>
#include <vector>

namespace myers {

/// Adaptive Simpson quadrature on [a, b]. The tolerance is the larger of
/// `abs_tol` and a small multiple of the coarse whole-interval estimate, so
/// integrals of widely varying magnitude terminate.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-10, int max_depth = 30);

struct MinimizeResult {
  double x;
  double value;
};

/// Global coarse scan on a geometric grid over [lo, hi] (lo > 0), then
/// golden-section refinement inside the bracketing neighbours.
MinimizeResult minimize_scan_golden(const std::function<double(double)>& f, double lo,
                                    double hi, int scan_points = 200,
                                    double xtol_rel = 1e-10);

/// n evenly spaced points from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

}  // namespace myers
