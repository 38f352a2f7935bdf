#pragma once

// The quaternionic complex-Hermite family
//
//   H_{m,n}(q, conj q) = sum_{l=0}^{min(m,n)} (-1)^l l! C(m,l) C(n,l)
//                        q^{m-l} conj(q)^{n-l},
//
// its hypergeometric/Laguerre closed form, the L^2-normalized family phi,
// the transform image family psi, and slice/radial evaluation helpers.  Two
// independent evaluation routes are kept on purpose: a Horner scheme on the
// defining sum and the Laguerre-type closed form.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qct/quaternion.hpp"
#include "qct/special_functions.hpp"

namespace qct {

inline constexpr double kPi = 3.14159265358979323846;

// Indices are capped where coefficient growth would leave double range.
inline constexpr int kMaxHermiteIndex = 128;

namespace detail {
inline void check_hermite_index(int m, int n, int lower = 0) {
  if (m < lower || n < lower || m > kMaxHermiteIndex || n > kMaxHermiteIndex)
    throw std::domain_error("hermite index out of range");
}
}  // namespace detail

// Defining sum evaluated by a Horner recurrence in t = |q|^2: with
// mu = min(m,n), H = q^{m-mu} conj(q)^{n-mu} * sum_l c_l t^{mu-l}, where
// c_0 = 1 and c_{l+1} = -c_l (m-l)(n-l)/(l+1).
template <typename S>
Quaternion<S> hermite_explicit(int m, int n, const Quaternion<S>& q) {
  detail::check_hermite_index(m, n);
  const int mu = std::min(m, n);
  const S t = squared_norm(q);
  S poly = S(1), c = S(1);
  for (int l = 0; l < mu; ++l) {
    c *= -S(m - l) * S(n - l) / S(l + 1);
    poly = poly * t + c;
  }
  return pow_int(q, m - mu) * pow_int(conj(q), n - mu) * poly;
}

// Same Horner scheme on a complex slice coordinate (bulk evaluation path).
inline std::complex<double> hermite_eval_slice(int m, int n,
                                               const std::complex<double>& z) {
  detail::check_hermite_index(m, n);
  const int mu = std::min(m, n);
  const double t = std::norm(z);
  double poly = 1.0, c = 1.0;
  for (int l = 0; l < mu; ++l) {
    c *= -double(m - l) * double(n - l) / double(l + 1);
    poly = poly * t + c;
  }
  std::complex<double> zp{1.0, 0.0};
  for (int i = 0; i < m - mu; ++i) zp *= z;
  const std::complex<double> zbar = std::conj(z);
  for (int i = 0; i < n - mu; ++i) zp *= zbar;
  return zp * poly;
}

// Exact integer coefficients c_l = (-1)^l l! C(m,l) C(n,l), small indices.
inline std::vector<long long> hermite_coefficients_exact(int m, int n) {
  detail::check_hermite_index(m, n);
  if (m > 8 || n > 8)
    throw std::domain_error("hermite_coefficients_exact: index above 8");
  std::vector<long long> c(std::min(m, n) + 1);
  c[0] = 1;
  for (int l = 0; l + 1 < int(c.size()); ++l)
    c[l + 1] = -c[l] * (m - l) * (n - l) / (l + 1);
  return c;
}

// Laguerre-type closed form, with the index extension used by the transform:
//
//   m, n >= 0:  H_{m,n} = (-1)^mu (max!/(d)!) q^m conj(q)^n |q|^{-2 mu}
//                          1F1(-mu; d+1; |q|^2),   mu = min(m,n), d = |m-n|;
//   m = -1:     H_{-1,n} = -conj(q)^{n+1}/(n+1) 1F1(1; n+2; |q|^2);
//   n = -1:     H_{m,-1} = conj(H_{-1,m}).
//
// The first branch divides by |q|^{2 mu}; q = 0 is rejected exactly when that
// division is required (mu > 0), and the continuous limit is returned when it
// is not.
template <typename S>
Quaternion<S> hermite_hypergeometric(int m, int n, const Quaternion<S>& q) {
  if (m == -1 && n == -1)
    throw std::domain_error("hermite_hypergeometric: both indices extended");
  if (n == -1) return conj(hermite_hypergeometric(-1, m, q));
  if (m == -1) {
    detail::check_hermite_index(n, n);
    const S t = squared_norm(q);
    return pow_int(conj(q), n + 1) *
           (-S(kummer_1f1(1.0, double(n + 2), double(t))) / S(n + 1));
  }
  detail::check_hermite_index(m, n);
  const int mu = std::min(m, n), d = std::abs(m - n);
  const S t = squared_norm(q);
  if (t == S(0)) {
    if (mu > 0)
      throw std::domain_error("hermite_hypergeometric: removable singularity at 0");
    if (m != n) return Quaternion<S>{S(0)};
    return Quaternion<S>{S(1)};  // m = n = 0
  }
  const double scale =
      (mu % 2 ? -1.0 : 1.0) * std::exp(log_factorial(std::max(m, n)) - log_factorial(d));
  const double f = kummer_1f1(double(-mu), double(d + 1), double(t));
  return pow_int(q, m) * pow_int(conj(q), n) *
         (S(scale * f) / S(std::pow(double(t), mu)));
}

// Plain two-sided monomial q^m conj(q)^n.
template <typename S>
Quaternion<S> monomial(int m, int n, const Quaternion<S>& q) {
  if (m < 0 || n < 0) throw std::domain_error("monomial: negative exponent");
  return pow_int(q, m) * pow_int(conj(q), n);
}

// Gaussian-L^2 normalized basis element phi_{m,n} = H_{m,n}/sqrt(pi m! n! A),
// where A is the slice-sphere area normalization of the ambient measure.
template <typename S>
Quaternion<S> phi_normalized(int m, int n, const Quaternion<S>& q,
                             double area_normalization = 1.0) {
  detail::check_hermite_index(m, n);
  const double scale = std::exp(
      -0.5 * (std::log(kPi) + log_factorial(m) + log_factorial(n) +
              std::log(area_normalization)));
  return hermite_explicit(m, n, q) * S(scale);
}

// Radial profile of phi_{m,n} on a slice (area normalization 1): with
// mu = min(m,n), nu = max(m,n), d = |m-n|, t = r^2,
//   phi_{m,n}(sqrt(t) e^{I theta}) = phi_radial(m,n,t) e^{I (m-n) theta},
//   phi_radial = (-1)^mu sqrt(mu!/(pi nu!)) t^{d/2} L_mu^{(d)}(t).
// Associated-Laguerre evaluation keeps this stable at large indices where the
// raw coefficient sum would cancel catastrophically.
inline double phi_radial(int m, int n, double t) {
  detail::check_hermite_index(m, n);
  const int mu = std::min(m, n), nu = std::max(m, n), d = std::abs(m - n);
  const double scale =
      (mu % 2 ? -1.0 : 1.0) *
      std::exp(0.5 * (log_factorial(mu) - log_factorial(nu) - std::log(kPi)));
  return scale * std::pow(t, 0.5 * d) * laguerre_assoc(mu, double(d), t);
}

// Transform-image family psi_{m,n}(p) = -e^{-|p|^2} H_{m,n-1}(p, conj p),
// n >= 1; n = 0 goes through the H_{m,-1} extension.
template <typename S>
Quaternion<S> psi_eigenfunction(int m, int n, const Quaternion<S>& p) {
  if (n < 0) throw std::domain_error("psi_eigenfunction: negative second index");
  const S damp = std::exp(-squared_norm(p));
  if (n == 0) return hermite_hypergeometric(m, -1, p) * (-damp);
  return hermite_explicit(m, n - 1, p) * (-damp);
}

}  // namespace qct
