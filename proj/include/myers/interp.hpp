#pragma once

#include <string>
#include <vector>

namespace myers {

/// Natural cubic spline through (x_i, y_i); x strictly increasing, >= 2 knots.
/// Queries outside [x_front, x_back] are clamped to the boundary segment.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double value(double x) const;
  double derivative(double x) const;
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;
  std::vector<double> x_, y_, b_, c_, d_;
};

/// Shape-preserving piecewise cubic (weighted-harmonic-mean tangents).
/// Queries outside the knot range return the boundary values.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);
  double value(double x) const;

 private:
  std::vector<double> x_, y_, t_;
};

struct TwoColumnTable {
  std::vector<double> x, y;
};

/// Parses whitespace-separated "x y" rows. Blank lines and '#' comments are
/// allowed. Requires strictly increasing x and at least 4 data rows.
/// Errors carry the offending 1-based line number.
TwoColumnTable load_two_column_table(const std::string& path);

}  // namespace myers
