#include "myers/model_space.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace myers {

namespace {

// Below this the closed forms are evaluated on their flat branch; the
// singularity at H = 0 is removable and the cutover error is O(|H| t^3).
constexpr double flat_cutoff = 1e-12;

bool effectively_flat(double H, double t) { return std::abs(H) * t * t < flat_cutoff; }

}  // namespace

double sn_h(double H, double t) {
  if (effectively_flat(H, t)) return t;
  if (H > 0) {
    const double s = std::sqrt(H);
    return std::sin(s * t) / s;
  }
  const double s = std::sqrt(-H);
  return std::sinh(s * t) / s;
}

double sn_h_prime(double H, double t) {
  if (effectively_flat(H, t)) return 1.0;
  if (H > 0) return std::cos(std::sqrt(H) * t);
  return std::cosh(std::sqrt(-H) * t);
}

double m_h(const ModelSpaceParams& params, double t) {
  if (params.n < 2) throw std::invalid_argument("m_h: dimension must be >= 2");
  if (!std::isfinite(params.H)) throw std::invalid_argument("m_h: H must be finite");
  if (!(t > 0)) throw std::domain_error("m_h: t must be positive");
  if (params.H > 0 && t >= valid_range(params.H, RangeVariant::conjugate))
    throw std::domain_error("m_h: t at or beyond the first zero of sn_H");
  if (effectively_flat(params.H, t)) return (params.n - 1) / t;
  return (params.n - 1) * sn_h_prime(params.H, t) / sn_h(params.H, t);
}

double m_h_effective(int n, double delta, double H, double t) {
  if (delta < 0) throw std::invalid_argument("m_h_effective: delta must be >= 0");
  return m_h({n, H}, t) * (1.0 + 4.0 * delta * (t + 1.0) / (n - 1));
}

double valid_range(double H, RangeVariant variant) {
  if (H <= 0) return infinite_range;
  const double s = std::sqrt(H);
  switch (variant) {
    case RangeVariant::thm21: return std::numbers::pi / (4.0 * s);
    case RangeVariant::thm22: return std::numbers::pi / (2.0 * s);
    case RangeVariant::conjugate: return std::numbers::pi / s;
  }
  return infinite_range;
}

}  // namespace myers
