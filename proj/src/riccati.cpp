#include "myers/riccati.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "myers/interp.hpp"
#include "myers/model_space.hpp"

namespace myers {

namespace {

struct State {
  double u, v;
};

class JacobiIntegrator {
 public:
  JacobiIntegrator(const TimeFn& ric, double n_eff) : ric_(ric), n_eff_(n_eff) {}

  double q(double t) const {
    const double v = ric_(t);
    if (!std::isfinite(v))
      throw std::runtime_error("riccati: non-finite Ricci input at t = " + std::to_string(t));
    return v / n_eff_;
  }

  State step(double t, State y, double h) const {
    const double k1u = y.v, k1v = -q(t) * y.u;
    const double k2u = y.v + 0.5 * h * k1v, k2v = -q(t + 0.5 * h) * (y.u + 0.5 * h * k1u);
    const double k3u = y.v + 0.5 * h * k2v, k3v = -q(t + 0.5 * h) * (y.u + 0.5 * h * k2u);
    const double k4u = y.v + h * k3v, k4v = -q(t + h) * (y.u + h * k3u);
    return {y.u + h / 6.0 * (k1u + 2.0 * (k2u + k3u) + k4u),
            y.v + h / 6.0 * (k1v + 2.0 * (k2v + k3v) + k4v)};
  }

 private:
  const TimeFn& ric_;
  double n_eff_;
};

RiccatiTrajectory integrate_core(double t0, State y0, const TimeFn& ric, double n_eff,
                                 double t_max, double step, bool starts_at_zero) {
  if (!(n_eff > 0)) throw std::invalid_argument("riccati: n_eff must be positive");
  if (!(step > 0) || step >= t_max - t0)
    throw std::invalid_argument("riccati: step must lie in (0, t_max - t0)");
  if (!std::isfinite(y0.u) || !std::isfinite(y0.v))
    throw std::invalid_argument("riccati: non-finite initial data");

  JacobiIntegrator integ(ric, n_eff);
  RiccatiTrajectory traj;
  traj.n_eff = n_eff;
  traj.t_start = t0;

  const long nsteps = static_cast<long>(std::ceil((t_max - t0) / step - 1e-12));
  traj.samples.reserve(static_cast<std::size_t>(nsteps) + 1);
  if (!starts_at_zero)
    traj.samples.push_back({t0, y0.u, y0.v, n_eff * y0.v / y0.u});

  double t = t0;
  State y = y0;
  for (long i = 1; i <= nsteps; ++i) {
    const double tn = (i == nsteps) ? t_max : t0 + i * step;
    const State yn = integ.step(t, y, tn - t);
    if (yn.u <= 0.0) {
      if (starts_at_zero && i == 1)
        throw std::runtime_error("riccati: step too large, u vanished within the first step");
      // Refine the zero crossing in (t, tn] by bisection, re-integrating a
      // single step from the moving left endpoint.
      double lo = t, hi = tn;
      State ylo = y;
      for (int it = 0; it < 200 && (hi - lo) > 1e-10; ++it) {
        const double mid = 0.5 * (lo + hi);
        const State ym = integ.step(lo, ylo, mid - lo);
        if (ym.u <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          ylo = ym;
        }
      }
      const double event = 0.5 * (lo + hi);
      if (starts_at_zero)
        traj.conjugate_time = event;
      else
        traj.blowup_time = event;
      return traj;
    }
    t = tn;
    y = yn;
    traj.samples.push_back({t, y.u, y.v, n_eff * y.v / y.u});
  }
  return traj;
}

}  // namespace

RiccatiTrajectory integrate_jacobi(const TimeFn& ric, double n_eff, double t_max,
                                   double step) {
  if (!(t_max > 0)) throw std::invalid_argument("integrate_jacobi: t_max must be positive");
  return integrate_core(0.0, {0.0, 1.0}, ric, n_eff, t_max, step, true);
}

RiccatiTrajectory integrate_riccati_from(double m0, double t0, const TimeFn& ric,
                                         double n_eff, double t_max, double step) {
  if (!(t0 > 0)) throw std::invalid_argument("integrate_riccati_from: t0 must be positive");
  if (!(t0 < t_max)) throw std::invalid_argument("integrate_riccati_from: need t0 < t_max");
  if (!std::isfinite(m0)) throw std::invalid_argument("integrate_riccati_from: m0 must be finite");
  return integrate_core(t0, {1.0, m0 / n_eff}, ric, n_eff, t_max, step, false);
}

double constant_ric_oracle(double H, int n, double t) { return m_h({n, H}, t); }

double RiccatiTrajectory::m_at(double t) const {
  if (samples.size() < 2) throw std::domain_error("m_at: trajectory has too few samples");
  if (t < samples.front().t - 1e-9 || t > samples.back().t + 1e-9)
    throw std::domain_error("m_at: t outside the sampled range");
  std::vector<double> ts, ms;
  ts.reserve(samples.size());
  ms.reserve(samples.size());
  for (const auto& s : samples) {
    ts.push_back(s.t);
    ms.push_back(s.m);
  }
  return MonotoneCubic(std::move(ts), std::move(ms)).value(t);
}

double RiccatiTrajectory::integrate_m_squared(double a, double b) const {
  if (samples.size() < 2) throw std::domain_error("integrate_m_squared: too few samples");
  if (a > b) throw std::invalid_argument("integrate_m_squared: need a <= b");
  if (a < samples.front().t - 1e-9 || b > samples.back().t + 1e-9)
    throw std::domain_error("integrate_m_squared: range outside the sampled trajectory");
  if (a == b) return 0.0;

  auto sq = [](double x) { return x * x; };
  double total = 0.0;
  double prev_t = a, prev_m2 = sq(m_at(a));
  for (const auto& s : samples) {
    if (s.t <= a) continue;
    if (s.t >= b) break;
    total += 0.5 * (prev_m2 + sq(s.m)) * (s.t - prev_t);
    prev_t = s.t;
    prev_m2 = sq(s.m);
  }
  total += 0.5 * (prev_m2 + sq(m_at(b))) * (b - prev_t);
  return total;
}

double RiccatiTrajectory::sample_resolution() const {
  double res = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < samples.size(); ++i)
    res = std::min(res, samples[i].t - samples[i - 1].t);
  return res;
}

}  // namespace myers
