#pragma once

// Reproducing kernels of the bi-index holomorphic-column subspaces, the
// companion kernel obtained by composing a column projection with the
// weighted singular integral transform, and the positive kernel of the
// normal composition.  Series representations are primary: each kernel is a
// truncated bi-index sum with a certified tail bound recorded alongside the
// value.  Closed slice forms exist when both arguments share one slice plane
// and are validated against the series by the tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "qct/gauss_measure.hpp"
#include "qct/hermite_basis.hpp"
#include "qct/quaternion.hpp"
#include "qct/special_functions.hpp"

namespace qct {

// Truncation policy for kernel series.  The sum runs over m = 0..max_m; the
// reported tail bound must certify at most tail_tolerance relative to
// max(1, |sum|), otherwise evaluation fails with a truncation error.
struct TruncationSpec {
  int max_m = 40;
  double tail_tolerance = 1e-12;
};

// A truncated kernel evaluation: the partial sum, the certified bound on the
// dropped tail, and the number of terms actually summed.
struct TruncatedKernel {
  Quat value{0};
  double tail_bound = 0.0;
  int terms = 0;
};

namespace detail {

// Termwise envelope sum_l l! C(m,l) C(n,l) r^{m+n-2l}; by the triangle
// inequality on the exact coefficient expansion, |H_{m,n}(q)| is bounded by
// hermite_envelope(m, n, |q|).
inline double hermite_envelope(int m, int n, double r) {
  const int mu = std::min(m, n);
  const double t = r * r;
  double poly = 1.0;
  double c = 1.0;
  for (int l = 0; l < mu; ++l) {
    c *= double(m - l) * double(n - l) / double(l + 1);
    poly = poly * t + c;
  }
  return std::pow(r, double(m - mu)) * std::pow(r, double(n - mu)) * poly;
}

// Sums term(m) for m = 0..max_m and certifies the dropped tail by the
// geometric majorant bound(max_m + 1) / (1 - rho) with
// rho = bound(max_m + 2) / bound(max_m + 1).  The envelope ratios decay like
// |q||p| / m, so past the envelope peak the majorant is valid; when the
// ratio has not yet fallen below 1 the tail is reported as infinite and the
// evaluation fails the tolerance check.
template <typename Term, typename Bound>
TruncatedKernel truncated_series(const TruncationSpec& trunc, Term&& term,
                                 Bound&& bound, const char* who) {
  if (trunc.max_m < 1)
    throw std::domain_error(std::string(who) + ": max_m must be >= 1");
  if (trunc.max_m > kMaxHermiteIndex - 2)
    throw std::domain_error(std::string(who) + ": max_m exceeds the index cap");
  TruncatedKernel out;
  Quat sum{0};
  for (int m = 0; m <= trunc.max_m; ++m) {
    sum += term(m);
    ++out.terms;
  }
  const double b1 = bound(trunc.max_m + 1);
  double tail = 0.0;
  if (b1 > 0.0) {
    const double rho = bound(trunc.max_m + 2) / b1;
    tail = (rho < 0.95) ? b1 / (1.0 - rho)
                        : std::numeric_limits<double>::infinity();
  }
  out.value = sum;
  out.tail_bound = tail;
  if (!(tail <= trunc.tail_tolerance * std::max(1.0, norm(sum))))
    throw std::runtime_error(std::string(who) +
                             ": series tail above tolerance at max_m");
  return out;
}

// Coordinates of q and p in one common slice plane.  The unit is taken from
// the argument with the larger imaginary part; the other argument must lie
// in the same plane (possibly with opposite orientation, or on the real
// axis, which belongs to every plane).
struct CommonSlice {
  ImaginaryUnit<double> unit;
  std::complex<double> zq;
  std::complex<double> zp;
};

inline CommonSlice common_slice(const Quat& q, const Quat& p, const char* who) {
  const double yq = imaginary_norm(q);
  const double yp = imaginary_norm(p);
  CommonSlice s;
  s.unit = (yq >= yp) ? to_slice(q).unit : to_slice(p).unit;
  s.zq = project_to_slice(q, s.unit);
  s.zp = project_to_slice(p, s.unit);
  const double tol = 1e-9;
  if (!lies_in_slice(q, s.unit, tol) || !lies_in_slice(p, s.unit, tol))
    throw std::domain_error(std::string(who) +
                            ": arguments do not share a slice plane");
  return s;
}

}  // namespace detail

// Reproducing kernel of the n-th column span{H_{m,n} : m >= 0}:
//   K_n(q, p) = sum_m H_{m,n}(q) conj(H_{m,n}(p)) / (pi m! n!).
inline TruncatedKernel repkernel_Kn_series(int n, const Quat& q, const Quat& p,
                                           const TruncationSpec& trunc = {}) {
  if (n < 0)
    throw std::domain_error("repkernel_Kn_series: column index must be >= 0");
  const double rq = norm(q);
  const double rp = norm(p);
  const double inv_nf = 1.0 / (kPi * factorial(n));
  return detail::truncated_series(
      trunc,
      [&](int m) {
        return hermite_explicit(m, n, q) * conj(hermite_explicit(m, n, p)) *
               (inv_nf / factorial(m));
      },
      [&](int m) {
        return detail::hermite_envelope(m, n, rq) *
               detail::hermite_envelope(m, n, rp) * (inv_nf / factorial(m));
      },
      "repkernel_Kn_series");
}

// Closed slice form of K_n for arguments in one plane:
//   K_n(q, p) = exp(q conj(p)) L_n(|q - p|^2) / pi.
// The exponent q conj(p) (rather than conj(q) p) is the one reproduced by
// the series; the tests adjudicate the two variants.
inline Quat repkernel_Kn_slice_closed(int n, const Quat& q, const Quat& p) {
  if (n < 0)
    throw std::domain_error(
        "repkernel_Kn_slice_closed: column index must be >= 0");
  const detail::CommonSlice s =
      detail::common_slice(q, p, "repkernel_Kn_slice_closed");
  const std::complex<double> core =
      std::exp(s.zq * std::conj(s.zp)) * laguerre(n, std::norm(s.zq - s.zp));
  return from_slice(s.unit, core) / kPi;
}

// Orthogonal projection onto the n-th column under the slice-Gaussian
// measure: P_n f(q) = (1/A) integral K_n(q, p) f(p) dmu(p).  The 1/A factor
// compensates the total direction mass carried by the measure, so the
// projection is idempotent for every area normalization.
template <typename F>
Quat project_Pn(F&& f, int n, const Quat& q, const QuadratureSpec& spec = {},
                const TruncationSpec& trunc = {}) {
  if (n < 0)
    throw std::domain_error("project_Pn: column index must be >= 0");
  const Quat total = integral_over_H(
      [&](const Quat& p) {
        return repkernel_Kn_series(n, q, p, trunc).value * f(p);
      },
      spec);
  return total / spec.area_normalization;
}

// Companion kernel of the composition (k-th column projection) o
// (singular integral transform), k >= 1:
//   R_k(q, p) = sum_m H_{m,k}(q) H_{k-1,m}(p) exp(-|p|^2) / (pi m! k!).
inline TruncatedKernel kernel_Rk_series(int k, const Quat& q, const Quat& p,
                                        const TruncationSpec& trunc = {}) {
  if (k < 1)
    throw std::domain_error("kernel_Rk_series: column index must be >= 1");
  const double damp = std::exp(-squared_norm(p));
  const double rq = norm(q);
  const double rp = norm(p);
  const double inv_kf = 1.0 / (kPi * factorial(k));
  return detail::truncated_series(
      trunc,
      [&](int m) {
        return hermite_explicit(m, k, q) * hermite_explicit(k - 1, m, p) *
               (damp * inv_kf / factorial(m));
      },
      [&](int m) {
        return detail::hermite_envelope(m, k, rq) *
               detail::hermite_envelope(k - 1, m, rp) *
               (damp * inv_kf / factorial(m));
      },
      "kernel_Rk_series");
}

// Closed slice form of the companion kernel:
//   R_k(q, p) = (-1)^{k-1} exp(-|p|^2) exp(q conj(p))
//               H_{k-1,k}(q - p) / (pi k!).
// Both the index order (k-1, k) and the alternating sign are fixed by the
// series: the k = 1 and k = 2 sums were resummed by hand against the
// bilinear generating function, and the tests adjudicate the opposite index
// order and the sign-free variant against the series.
inline Quat kernel_Rk_slice_closed(int k, const Quat& q, const Quat& p) {
  if (k < 1)
    throw std::domain_error(
        "kernel_Rk_slice_closed: column index must be >= 1");
  const detail::CommonSlice s =
      detail::common_slice(q, p, "kernel_Rk_slice_closed");
  const std::complex<double> core =
      std::exp(s.zq * std::conj(s.zp)) *
      hermite_eval_slice(k - 1, k, s.zq - s.zp);
  const double sign = (k % 2 == 1) ? 1.0 : -1.0;
  return from_slice(s.unit, core) *
         (sign * std::exp(-squared_norm(p)) / (kPi * factorial(k)));
}

// The composed operator applied through its kernel:
//   (P_k C f)(q) = (1/A) integral R_k(q, p) f(p) dmu(p).
// As with project_Pn, the 1/A factor cancels the direction mass of the
// measure; the composition is then independent of the area normalization,
// matching the A-free closed actions of the transform followed by the
// projection.
template <typename F>
Quat PkC_apply(F&& f, int k, const Quat& q, const QuadratureSpec& spec = {},
               const TruncationSpec& trunc = {}) {
  if (k < 1)
    throw std::domain_error("PkC_apply: column index must be >= 1");
  const Quat total = integral_over_H(
      [&](const Quat& p) {
        return kernel_Rk_series(k, q, p, trunc).value * f(p);
      },
      spec);
  return total / spec.area_normalization;
}

// Closed action of the adjoint of the composed operator on basis elements:
//   (P_k C)^*(H_{n,ell})(p) = exp(-|p|^2) H_{n,k-1}(p) delta_{k,ell}.
// The composition is free of the direction mass (the 1/A of the projection
// cancels the A of the transform), so no normalization parameter appears.
inline Quat PkC_adjoint_on_hermite(int n, int ell, int k, const Quat& p) {
  if (k < 1)
    throw std::domain_error(
        "PkC_adjoint_on_hermite: column index must be >= 1");
  if (n < 0 || ell < 0)
    throw std::domain_error("PkC_adjoint_on_hermite: negative basis index");
  if (ell != k) return Quat{0};
  return hermite_explicit(n, k - 1, p) * std::exp(-squared_norm(p));
}

// Kernel of the normal composition (P_k C)^* (P_k C), k >= 1:
//   S_k(p, q) = exp(-|p|^2 - |q|^2)
//               sum_m H_{m,k-1}(p) H_{k-1,m}(q) / (pi m! k!).
// The second factor is conj(H_{m,k-1}(q)), so the diagonal p = q is a sum
// of squared moduli and is real and positive for every quaternion p.  The
// operator acts as ((P_k C)^* (P_k C) f)(p) = (1/A) integral S_k(p, q) f(q)
// dmu(q).
inline TruncatedKernel kernel_Sk(int k, const Quat& p, const Quat& q,
                                 const TruncationSpec& trunc = {}) {
  if (k < 1)
    throw std::domain_error("kernel_Sk: column index must be >= 1");
  const double damp = std::exp(-squared_norm(p) - squared_norm(q));
  const double rq = norm(q);
  const double rp = norm(p);
  const double inv_kf = 1.0 / (kPi * factorial(k));
  return detail::truncated_series(
      trunc,
      [&](int m) {
        return hermite_explicit(m, k - 1, p) * hermite_explicit(k - 1, m, q) *
               (damp * inv_kf / factorial(m));
      },
      [&](int m) {
        return detail::hermite_envelope(m, k - 1, rp) *
               detail::hermite_envelope(k - 1, m, rq) *
               (damp * inv_kf / factorial(m));
      },
      "kernel_Sk");
}

}  // namespace qct
