#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <string>

// Shared helpers for the test suites: independent high-precision oracles and
// finite-difference derivatives used to check implementations from a second
// route.
namespace testsupport {

// Maclaurin solution of w'' + H w = 0 with w(0)=0, w'(0)=1, evaluated by the
// coefficient recurrence in long double. Independent of the closed forms.
inline long double ode_series_sn(long double H, long double t) {
  long double term = t, sum = t;
  for (int k = 1; k < 400; ++k) {
    term *= -H * t * t / ((2.0L * k) * (2.0L * k + 1.0L));
    sum += term;
    if (std::fabs(term) < 1e-25L * (1.0L + std::fabs(sum))) break;
  }
  return sum;
}

inline long double ode_series_sn_prime(long double H, long double t) {
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 400; ++k) {
    term *= -H * t * t / ((2.0L * k - 1.0L) * (2.0L * k));
    sum += term;
    if (std::fabs(term) < 1e-25L * (1.0L + std::fabs(sum))) break;
  }
  return sum;
}

inline double central_d1(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

inline double central_d2(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

// Scratch directory for tests that exercise file I/O.
class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    for (int i = 0; i < 10000; ++i) {
      auto candidate = base / ("myers_test_" + std::to_string(::getpid()) + "_" +
                               std::to_string(counter_++));
      std::error_code ec;
      if (std::filesystem::create_directory(candidate, ec)) {
        path_ = candidate;
        return;
      }
    }
    throw std::runtime_error("cannot create temp directory");
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream os(file(name));
    os << content;
  }

 private:
  static inline int counter_ = 0;
  std::filesystem::path path_;
};

}  // namespace testsupport
