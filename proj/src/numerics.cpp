#include "myers/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace myers {

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double simpson_recurse(const std::function<double(double)>& f, double a, double b,
                       double fa, double fm, double fb, double whole, double tol,
                       int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth) {
  if (!(b >= a)) throw std::invalid_argument("adaptive_simpson: b must be >= a");
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  const double tol = std::max(abs_tol, 1e-12 * std::abs(whole));
  return simpson_recurse(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

MinimizeResult minimize_scan_golden(const std::function<double(double)>& f, double lo,
                                    double hi, int scan_points, double xtol_rel) {
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("minimize_scan_golden: need 0 < lo < hi");
  if (scan_points < 3) scan_points = 3;

  const double ratio = std::pow(hi / lo, 1.0 / (scan_points - 1));
  std::vector<double> xs(scan_points);
  double best_x = lo, best_f = f(lo);
  int best_i = 0;
  for (int i = 0; i < scan_points; ++i) {
    xs[i] = (i == scan_points - 1) ? hi : lo * std::pow(ratio, i);
    const double v = f(xs[i]);
    if (v < best_f) {
      best_f = v;
      best_x = xs[i];
      best_i = i;
    }
  }

  double a = xs[best_i > 0 ? best_i - 1 : 0];
  double b = xs[best_i + 1 < scan_points ? best_i + 1 : scan_points - 1];
  if (a == b) return {best_x, best_f};

  const double inv = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv * (b - a), x2 = a + inv * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 400 && (b - a) > xtol_rel * (std::abs(a) + std::abs(b)); ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv * (b - a);
      f2 = f(x2);
    }
  }
  const double x = 0.5 * (a + b);
  return {x, f(x)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 2) throw std::invalid_argument("linspace: need at least 2 points");
  std::vector<double> out(n);
  const double h = (hi - lo) / (n - 1);
  for (int i = 0; i < n; ++i) out[i] = lo + i * h;
  out.back() = hi;
  return out;
}

}  // namespace myers
