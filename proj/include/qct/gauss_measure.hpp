#pragma once

// Quadrature for the Gaussian measure on the quaternions used throughout:
//
//   integral_H f dmu = integral over the half-sphere of slice directions I
//                      (surface measure normalized to total mass A) of
//                      integral_{C_I} f(x + I y) e^{-(x^2+y^2)} dx dy.
//
// Every slice plane carries the full planar Gaussian measure (mass pi), each
// plane is counted once (half-sphere of directions), so the total mass is
// pi * A.  In polar slice coordinates q = sqrt(t) e^{I theta},
//
//   integral_{C_I} f dmu_I = (1/2) integral_0^inf integral_0^{2 pi}
//                            f(sqrt(t) e^{I theta}) e^{-t} dtheta dt,
//
// evaluated with Gauss-Laguerre in t (absorbing e^{-t} exactly) and the
// trapezoidal rule in theta (spectrally exact for trigonometric polynomials).
// The half-sphere is parametrized by u = cos(phi) in [-1,1] and psi in
// [0, pi] (axis components (u, sin(phi) cos(psi), sin(phi) sin(psi))), with
// Gauss-Legendre in both variables.
//
// A bit-stable Monte Carlo estimator of the same functional provides an
// independent oracle for every deterministic rule above.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "qct/hermite_basis.hpp"
#include "qct/quaternion.hpp"

namespace qct {

struct QuadratureSpec {
  int radial_order = 64;       // Gauss-Laguerre order for t = r^2
  int angular_order = 64;      // equispaced theta nodes per slice
  int hemi_phi_order = 8;      // Gauss-Legendre order in u = cos(phi)
  int hemi_psi_order = 8;      // Gauss-Legendre order in psi
  double area_normalization = 1.0;      // total mass of the direction measure
  double singular_exclusion_radius = 1e-3;  // node-drop guard near kernel poles
};

struct Rule1D {
  std::vector<double> node, weight;
};

namespace detail {

// Golub-Welsch: nodes/weights from the symmetric tridiagonal Jacobi matrix.
inline Rule1D golub_welsch(const std::vector<double>& alpha,
                           const std::vector<double>& sqrt_beta, double mu0) {
  const int n = int(alpha.size());
  Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    jacobi(k, k) = alpha[k];
    if (k + 1 < n) {
      jacobi(k, k + 1) = sqrt_beta[k];
      jacobi(k + 1, k) = sqrt_beta[k];
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(jacobi);
  Rule1D rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  for (int k = 0; k < n; ++k) {
    rule.node[k] = solver.eigenvalues()(k);
    const double v0 = solver.eigenvectors()(0, k);
    rule.weight[k] = mu0 * v0 * v0;
  }
  return rule;
}

}  // namespace detail

// Gauss-Legendre on [-1, 1] (cached).
inline const Rule1D& gauss_legendre(int n) {
  if (n < 1) throw std::domain_error("gauss_legendre: order must be positive");
  static std::map<int, Rule1D> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> alpha(n, 0.0), sb(n - 1 > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) {
      const double beta = double(k) * double(k) / (4.0 * k * k - 1.0);
      sb[k - 1] = std::sqrt(beta);
    }
    it = cache.emplace(n, detail::golub_welsch(alpha, sb, 2.0)).first;
  }
  return it->second;
}

// Gauss-Laguerre on [0, inf) with weight e^{-t} (cached).
inline const Rule1D& gauss_laguerre(int n) {
  if (n < 1) throw std::domain_error("gauss_laguerre: order must be positive");
  static std::map<int, Rule1D> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> alpha(n), sb(n - 1 > 0 ? n - 1 : 0);
    for (int k = 0; k < n; ++k) alpha[k] = 2.0 * k + 1.0;
    for (int k = 1; k < n; ++k) sb[k - 1] = double(k);
    it = cache.emplace(n, detail::golub_welsch(alpha, sb, 1.0)).first;
  }
  return it->second;
}

// Gauss-Hermite on (-inf, inf) with weight e^{-u^2} (cached).
inline const Rule1D& gauss_hermite(int n) {
  if (n < 1) throw std::domain_error("gauss_hermite: order must be positive");
  static std::map<int, Rule1D> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    std::vector<double> alpha(n, 0.0), sb(n - 1 > 0 ? n - 1 : 0);
    for (int k = 1; k < n; ++k) sb[k - 1] = std::sqrt(0.5 * k);
    it = cache.emplace(n, detail::golub_welsch(alpha, sb, std::sqrt(kPi))).first;
  }
  return it->second;
}

// Gauss-Legendre transported to [a, b].
inline Rule1D gauss_legendre_on(double a, double b, int n) {
  const Rule1D& base = gauss_legendre(n);
  Rule1D rule;
  rule.node.resize(n);
  rule.weight.resize(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int k = 0; k < n; ++k) {
    rule.node[k] = mid + half * base.node[k];
    rule.weight[k] = half * base.weight[k];
  }
  return rule;
}

// Midpoint-shifted equispaced angles on [0, 2 pi) with their common weight.
inline Rule1D uniform_angles(int n) {
  if (n < 1) throw std::domain_error("uniform_angles: order must be positive");
  Rule1D rule;
  rule.node.resize(n);
  rule.weight.assign(n, 2.0 * kPi / n);
  for (int k = 0; k < n; ++k) rule.node[k] = 2.0 * kPi * (k + 0.5) / n;
  return rule;
}

// Half-sphere of slice directions with weights summing to the total mass A.
struct HemisphereRule {
  std::vector<ImaginaryUnit<double>> unit;
  std::vector<double> weight;
};

inline HemisphereRule hemisphere_rule(const QuadratureSpec& spec) {
  const Rule1D& ru = gauss_legendre(spec.hemi_phi_order);
  const Rule1D rpsi = gauss_legendre_on(0.0, kPi, spec.hemi_psi_order);
  HemisphereRule rule;
  const double scale = spec.area_normalization / (2.0 * kPi);
  for (int a = 0; a < spec.hemi_phi_order; ++a) {
    const double u = ru.node[a];
    const double s = std::sqrt(std::max(0.0, 1.0 - u * u));
    for (int b = 0; b < spec.hemi_psi_order; ++b) {
      ImaginaryUnit<double> unit;
      unit.vx = u;
      unit.vy = s * std::cos(rpsi.node[b]);
      unit.vz = s * std::sin(rpsi.node[b]);
      rule.unit.push_back(unit);
      rule.weight.push_back(ru.weight[a] * rpsi.weight[b] * scale);
    }
  }
  return rule;
}

// integral_{C_I} f dmu_I for quaternion-valued f.
template <typename F>
Quat slice_integral(F&& f, const ImaginaryUnit<double>& unit,
                    const QuadratureSpec& spec = {}) {
  const Rule1D& radial = gauss_laguerre(spec.radial_order);
  const Rule1D angular = uniform_angles(spec.angular_order);
  Quat sum{0};
  for (int i = 0; i < spec.radial_order; ++i) {
    const double r = std::sqrt(radial.node[i]);
    Quat ring{0};
    for (int j = 0; j < spec.angular_order; ++j) {
      const Quat q = from_slice(
          unit, std::complex<double>(r * std::cos(angular.node[j]),
                                     r * std::sin(angular.node[j])));
      ring += f(q);
    }
    sum += ring * (0.5 * radial.weight[i] * angular.weight[0]);
  }
  return sum;
}

// integral_H f dmu: half-sphere combination of slice integrals.
template <typename F>
Quat integral_over_H(F&& f, const QuadratureSpec& spec = {}) {
  const HemisphereRule hemi = hemisphere_rule(spec);
  Quat sum{0};
  for (std::size_t s = 0; s < hemi.unit.size(); ++s)
    sum += slice_integral(f, hemi.unit[s], spec) * hemi.weight[s];
  return sum;
}

// <f, g> = integral_H conj(f) g dmu (conjugate-linear in the first slot).
template <typename F, typename G>
Quat inner_product(F&& f, G&& g, const QuadratureSpec& spec = {}) {
  return integral_over_H([&](const Quat& q) { return conj(f(q)) * g(q); }, spec);
}

// integral_0^inf F(t) e^{-s t} dt by Gauss-Laguerre after u = s t; exact for
// polynomial F up to degree 2*order - 1.
template <typename F>
double radial_integral_exact(F&& f, double s = 1.0, int order = 48) {
  if (!(s > 0.0)) throw std::domain_error("radial_integral_exact: need s > 0");
  const Rule1D& rule = gauss_laguerre(order);
  double sum = 0.0;
  for (int i = 0; i < order; ++i) sum += rule.weight[i] * f(rule.node[i] / s);
  return sum / s;
}

// Bit-stable uniform generator: identical streams on every platform with the
// same seed (raw mt19937_64 words mapped to [0,1) by a fixed shift).
class DeterministicUniform {
 public:
  explicit DeterministicUniform(std::uint64_t seed) : state_(seed) {}
  double next() {
    return double(state_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 state_;
};

// Monte Carlo oracle for integral_H f dmu.  Samples: direction uniform on the
// half-sphere, t ~ Exp(1), theta uniform; the estimator is pi * A * mean(f).
template <typename F>
Quat monte_carlo_integral(F&& f, std::uint64_t seed, long long samples,
                          double area_normalization = 1.0) {
  DeterministicUniform rng(seed);
  Quat mean{0};
  for (long long s = 1; s <= samples; ++s) {
    const double u = 2.0 * rng.next() - 1.0;
    const double psi = kPi * rng.next();
    const double t = -std::log(1.0 - rng.next());
    const double theta = 2.0 * kPi * rng.next();
    const double sphi = std::sqrt(std::max(0.0, 1.0 - u * u));
    ImaginaryUnit<double> unit;
    unit.vx = u;
    unit.vy = sphi * std::cos(psi);
    unit.vz = sphi * std::sin(psi);
    const double r = std::sqrt(t);
    const Quat q = from_slice(
        unit, std::complex<double>(r * std::cos(theta), r * std::sin(theta)));
    mean += (f(q) - mean) / double(s);
  }
  return mean * (kPi * area_normalization);
}

}  // namespace qct
