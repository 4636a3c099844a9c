#include "myers/radial_manifold.hpp"

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

#include "myers/interp.hpp"
#include "myers/model_space.hpp"

namespace myers {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_pole_smoothness(const WarpProfile& p, const std::string& origin) {
  const double probe = 1e-8;
  const double v = p.phi(probe);
  const double dv = p.dphi(probe);
  if (std::abs(v) > 1e-6 || std::abs(dv - 1.0) > 1e-6)
    throw std::invalid_argument(origin +
                                ": warp profile must satisfy phi(0)=0, phi'(0)=1 "
                                "(metric smooth at the pole)");
}

// Probe-grid consistency between f and its declared derivative.
void check_weight_consistency(const WeightFunction& w, double lo, double hi) {
  const double h = 1e-4;
  for (int i = 0; i <= 50; ++i) {
    const double r = lo + (hi - lo) * i / 50.0;
    const double fd = (w.f(r + h) - w.f(r - h)) / (2.0 * h);
    if (std::abs(fd - w.df(r)) > 1e-5)
      throw std::invalid_argument(w.name + ": weight derivative inconsistent with f near r=" +
                                  std::to_string(r));
  }
}

}  // namespace

WarpProfile WarpProfile::space_form(double H) {
  WarpProfile p;
  p.name = "space_form";
  p.r_max = H > 0 ? std::numbers::pi / std::sqrt(H) : inf;
  p.first_phi_zero = p.r_max;
  p.curvature_domain_end = inf;
  p.phi = [H](double r) { return sn_h(H, r); };
  p.dphi = [H](double r) { return sn_h_prime(H, r); };
  p.d2phi = [H](double r) { return -H * sn_h(H, r); };
  p.radial_curvature = [H](double) { return H; };
  p.known_compact = H > 0;
  return p;
}

WarpProfile WarpProfile::perturbed_sine(double beta) {
  if (!(std::abs(beta) < 0.2))
    throw std::invalid_argument("perturbed_sine: beta must lie in (-0.2, 0.2)");
  WarpProfile p;
  p.name = "perturbed_sine";
  p.r_max = std::numbers::pi;
  p.first_phi_zero = std::numbers::pi;
  p.curvature_domain_end = inf;
  // phi = sin r (1 + beta sin^2 r); phi'' carries an overall factor sin r,
  // so the curvature ratio below is smooth through the poles.
  p.phi = [beta](double r) {
    const double s = std::sin(r);
    return s * (1.0 + beta * s * s);
  };
  p.dphi = [beta](double r) {
    const double s = std::sin(r), c = std::cos(r);
    return c * (1.0 + 3.0 * beta * s * s);
  };
  p.d2phi = [beta](double r) {
    const double s = std::sin(r), c = std::cos(r);
    return s * (6.0 * beta * c * c - (1.0 + 3.0 * beta * s * s));
  };
  p.radial_curvature = [beta](double r) {
    const double s = std::sin(r), c = std::cos(r);
    return ((1.0 + 3.0 * beta * s * s) - 6.0 * beta * c * c) / (1.0 + beta * s * s);
  };
  p.known_compact = true;
  return p;
}

WarpProfile WarpProfile::perturbed_linear(double beta) {
  if (!(std::abs(beta) <= 0.5))
    throw std::invalid_argument("perturbed_linear: beta must lie in [-0.5, 0.5]");
  WarpProfile p;
  p.name = "perturbed_linear";
  p.r_max = inf;
  p.first_phi_zero = inf;
  p.curvature_domain_end = inf;
  // phi = r (1 + beta r^2 e^{-r})
  p.phi = [beta](double r) { return r * (1.0 + beta * r * r * std::exp(-r)); };
  p.dphi = [beta](double r) {
    return 1.0 + beta * std::exp(-r) * (3.0 * r * r - r * r * r);
  };
  p.d2phi = [beta](double r) {
    return beta * std::exp(-r) * (6.0 * r - 6.0 * r * r + r * r * r);
  };
  p.radial_curvature = [beta](double r) {
    const double e = std::exp(-r);
    return -beta * e * (6.0 - 6.0 * r + r * r) / (1.0 + beta * r * r * e);
  };
  p.known_compact = false;
  return p;
}

WarpProfile WarpProfile::tabulated(std::vector<double> r, std::vector<double> phi_values,
                                   std::string origin) {
  if (r.empty() || r.front() != 0.0)
    throw std::invalid_argument(origin + ": tabulated warp profile must start at r = 0");
  auto spline = std::make_shared<CubicSpline>(std::move(r), std::move(phi_values));
  WarpProfile p;
  p.name = "tabulated";
  p.r_max = spline->x_back();
  p.curvature_domain_end = spline->x_back();
  p.first_phi_zero = inf;
  p.phi = [spline](double x) { return spline->value(x); };
  p.dphi = [spline](double x) { return spline->derivative(x); };
  p.d2phi = [spline](double x) {
    const double h = 1e-5;
    const double xl = std::max(x - h, spline->x_front());
    const double xr = std::min(x + h, spline->x_back());
    return (spline->derivative(xr) - spline->derivative(xl)) / (xr - xl);
  };
  const auto d2 = p.d2phi;
  const auto phi = p.phi;
  p.radial_curvature = [d2, phi](double x) { return -d2(x) / phi(x); };
  p.known_compact = std::nullopt;
  check_pole_smoothness(p, origin);
  return p;
}

WarpProfile WarpProfile::tabulated_from_file(const std::string& path) {
  auto table = load_two_column_table(path);
  // Locate the first interior sign change before building (spline zeros track
  // the data zeros closely enough for domain bookkeeping).
  double first_zero = inf;
  for (std::size_t i = 1; i < table.x.size(); ++i) {
    if (table.y[i] <= 0.0) {
      first_zero = table.x[i];
      break;
    }
  }
  auto p = tabulated(std::move(table.x), std::move(table.y), path);
  p.first_phi_zero = std::min(first_zero, p.r_max);
  return p;
}

WeightFunction WeightFunction::zero() {
  WeightFunction w;
  w.name = "zero";
  w.f = [](double) { return 0.0; };
  w.df = [](double) { return 0.0; };
  w.d2f = [](double) { return 0.0; };
  return w;
}

WeightFunction WeightFunction::linear(double delta) {
  WeightFunction w;
  w.name = "linear";
  w.f = [delta](double r) { return delta * r; };
  w.df = [delta](double) { return delta; };
  w.d2f = [](double) { return 0.0; };
  return w;
}

WeightFunction WeightFunction::bounded_sine(double delta) {
  WeightFunction w;
  w.name = "bounded_sine";
  w.f = [delta](double r) { return delta * std::sin(r); };
  w.df = [delta](double r) { return delta * std::cos(r); };
  w.d2f = [delta](double r) { return -delta * std::sin(r); };
  return w;
}

WeightFunction WeightFunction::log_growth(double c) {
  WeightFunction w;
  w.name = "log_growth";
  w.f = [c](double r) { return c * std::log1p(r); };
  w.df = [c](double r) { return c / (1.0 + r); };
  w.d2f = [c](double r) { return -c / ((1.0 + r) * (1.0 + r)); };
  return w;
}

WeightFunction WeightFunction::tabulated(std::vector<double> r, std::vector<double> f_values,
                                         std::string origin) {
  if (r.empty() || r.front() != 0.0)
    throw std::invalid_argument(origin + ": tabulated weight must start at r = 0");
  auto spline = std::make_shared<CubicSpline>(std::move(r), std::move(f_values));
  WeightFunction w;
  w.name = "tabulated";
  w.r_max = spline->x_back();
  w.f = [spline](double x) { return spline->value(x); };
  w.df = [spline](double x) { return spline->derivative(x); };
  w.d2f = [spline](double x) {
    const double h = 1e-5;
    const double xl = std::max(x - h, spline->x_front());
    const double xr = std::min(x + h, spline->x_back());
    return (spline->derivative(xr) - spline->derivative(xl)) / (xr - xl);
  };
  check_weight_consistency(w, 1e-3, w.r_max - 1e-3);
  return w;
}

WeightFunction WeightFunction::tabulated_from_file(const std::string& path) {
  auto table = load_two_column_table(path);
  return tabulated(std::move(table.x), std::move(table.y), path);
}

WeightFunction WeightFunction::custom(std::string name, RadialFn f, RadialFn df, RadialFn d2f) {
  WeightFunction w;
  w.name = std::move(name);
  w.f = std::move(f);
  w.df = std::move(df);
  w.d2f = std::move(d2f);
  return w;
}

namespace {

void check_radius(double r, double r_end, const char* what) {
  if (!(r >= pole_radius))
    throw std::domain_error(std::string(what) + ": r below the pole cutoff");
  if (!(r < r_end)) throw std::domain_error(std::string(what) + ": r outside the domain");
}

}  // namespace

double RadialManifold::ricci_radial(double r) const {
  check_radius(r, r_domain(), "ricci_radial");
  return (n - 1) * profile.radial_curvature(r);
}

double RadialManifold::mean_curv(double r) const {
  check_radius(r, std::min(r_domain(), profile.first_phi_zero), "mean_curv");
  return (n - 1) * profile.dphi(r) / profile.phi(r);
}

double RadialManifold::m_f(double r) const { return mean_curv(r) - weight.df(r); }

double RadialManifold::ric_f(double r) const { return ricci_radial(r) + weight.d2f(r); }

double RadialManifold::ric_f_k(double k, double r) const {
  if (!(k > 0)) throw std::invalid_argument("ric_f_k: k must be positive");
  const double dfr = weight.df(r);
  return ric_f(r) - dfr * dfr / k;
}

RadialManifold make_manifold(int n, WarpProfile profile, WeightFunction weight) {
  if (n < 2) throw std::invalid_argument("manifold dimension must be >= 2");
  RadialManifold m;
  m.n = n;
  m.known_compact = profile.known_compact;
  m.profile = std::move(profile);
  m.weight = std::move(weight);
  return m;
}

GrowthFunction GrowthFunction::constant(double c) {
  if (!(c > 0)) throw std::invalid_argument("growth function must be positive");
  GrowthFunction g;
  g.kind = Kind::constant;
  g.name = "constant";
  g.c = c;
  g.h = [c](double) { return c; };
  g.analytic_tail = [](double) { return inf; };
  return g;
}

GrowthFunction GrowthFunction::power_law(double b, double r0) {
  if (!(r0 > 0)) throw std::invalid_argument("power_law: r0 must be positive");
  GrowthFunction g;
  g.kind = Kind::power_law;
  g.name = "power_law";
  g.b = b;
  g.r0 = r0;
  g.h = [b, r0](double s) { return std::pow(r0 + s, -b); };
  g.analytic_tail = [b, r0](double eps) {
    if (b <= 1.0) return inf;
    return std::pow(r0 + eps, 1.0 - b) / (b - 1.0);
  };
  return g;
}

GrowthFunction GrowthFunction::tabulated_from_file(const std::string& path) {
  auto table = load_two_column_table(path);
  for (std::size_t i = 0; i < table.y.size(); ++i)
    if (!(table.y[i] > 0))
      throw std::runtime_error(path + ": growth function values must be positive");
  auto spline = std::make_shared<CubicSpline>(std::move(table.x), std::move(table.y));
  GrowthFunction g;
  g.kind = Kind::tabulated;
  g.name = "tabulated";
  // Constant extension beyond the table keeps h positive and continuous.
  g.h = [spline](double s) { return std::max(spline->value(s), 1e-300); };
  return g;
}

}  // namespace myers
