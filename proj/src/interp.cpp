#include "myers/interp.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace myers {

namespace {

void check_knots(const std::vector<double>& x, const std::vector<double>& y,
                 const char* what) {
  if (x.size() != y.size()) throw std::invalid_argument(std::string(what) + ": size mismatch");
  if (x.size() < 2) throw std::invalid_argument(std::string(what) + ": need at least 2 knots");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      throw std::invalid_argument(std::string(what) + ": knots must be strictly increasing");
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_knots(x_, y_, "CubicSpline");
  const std::size_t n = x_.size();
  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  // Natural boundary: second derivatives vanish at both ends. Tridiagonal
  // solve (Thomas) for the interior second derivatives M_i.
  std::vector<double> M(n, 0.0);
  if (n > 2) {
    std::vector<double> diag(n - 2), rhs(n - 2), upper(n - 2);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      diag[i - 1] = 2.0 * (h[i - 1] + h[i]);
      upper[i - 1] = h[i];
      rhs[i - 1] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
    }
    for (std::size_t i = 1; i < n - 2; ++i) {
      const double w = h[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i-- > 0;) {
      double v = rhs[i];
      if (i + 1 < n - 2) v -= upper[i] * M[i + 2];
      M[i + 1] = v / diag[i];
    }
  }

  b_.resize(n - 1);
  c_.resize(n - 1);
  d_.resize(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * M[i] + M[i + 1]) / 6.0;
    c_[i] = M[i] / 2.0;
    d_[i] = (M[i + 1] - M[i]) / (6.0 * h[i]);
  }
}

std::size_t CubicSpline::segment(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double CubicSpline::value(double x) const {
  const std::size_t i = segment(x);
  const double d = std::clamp(x, x_.front(), x_.back()) - x_[i];
  return y_[i] + d * (b_[i] + d * (c_[i] + d * d_[i]));
}

double CubicSpline::derivative(double x) const {
  const std::size_t i = segment(x);
  const double d = std::clamp(x, x_.front(), x_.back()) - x_[i];
  return b_[i] + d * (2.0 * c_[i] + 3.0 * d * d_[i]);
}

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  check_knots(x_, y_, "MonotoneCubic");
  const std::size_t n = x_.size();
  std::vector<double> h(n - 1), s(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    s[i] = (y_[i + 1] - y_[i]) / h[i];
  }
  t_.assign(n, 0.0);
  t_.front() = s.front();
  t_.back() = s.back();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (s[i - 1] * s[i] <= 0.0) {
      t_[i] = 0.0;  // local extremum: flat tangent preserves shape
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      t_[i] = (w1 + w2) / (w1 / s[i - 1] + w2 / s[i]);
    }
  }
}

double MonotoneCubic::value(double x) const {
  if (x <= x_.front()) return y_.front();
  if (x >= x_.back()) return y_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double h = x_[i + 1] - x_[i];
  const double u = (x - x_[i]) / h;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u);
  const double h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u);
  const double h11 = u * u * (u - 1);
  return h00 * y_[i] + h10 * h * t_[i] + h01 * y_[i + 1] + h11 * h * t_[i + 1];
}

TwoColumnTable load_two_column_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open file");
  TwoColumnTable table;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream iss(line);
    double a, b;
    if (!(iss >> a) || !(iss >> b))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": expected two numeric columns");
    std::string trailing;
    if (iss >> trailing)
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": unexpected extra column");
    if (!table.x.empty() && !(a > table.x.back()))
      throw std::runtime_error(path + ":" + std::to_string(lineno) +
                               ": r values must be strictly increasing");
    table.x.push_back(a);
    table.y.push_back(b);
  }
  if (table.x.size() < 4)
    throw std::runtime_error(path + ": expected at least 4 data rows, found " +
                             std::to_string(table.x.size()));
  return table;
}

}  // namespace myers
