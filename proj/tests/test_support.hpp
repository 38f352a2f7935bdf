#pragma once

// Shared helpers for the unit-test binaries: tolerance comparisons on
// quaternions/complex values and a deterministic sampler so every test run
// sees the same inputs.

#include <complex>
#include <random>

#include "qct/quaternion.hpp"

namespace qct::testing {

inline bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool near(const std::complex<double>& a, const std::complex<double>& b,
                 double tol) {
  return std::abs(a - b) <= tol;
}

inline bool near(const Quat& a, const Quat& b, double tol) {
  return distance(a, b) <= tol;
}

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : eng_(seed) {}

  double uniform(double lo, double hi) {
    const double u = double(eng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  Quat quaternion(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width),
            uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

  std::complex<double> complex_point(double half_width) {
    return {uniform(-half_width, half_width), uniform(-half_width, half_width)};
  }

  ImaginaryUnit<double> unit() {
    while (true) {
      const double a = uniform(-1, 1), b = uniform(-1, 1), c = uniform(-1, 1);
      const double n = std::hypot(a, b, c);
      if (n > 0.1 && n <= 1.0) return ImaginaryUnit<double>::from_vector(a, b, c);
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace qct::testing
