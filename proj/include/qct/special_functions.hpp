#pragma once

// Scalar special functions used by the basis, transform, and spectral
// modules: factorials, binomials, Laguerre polynomials, the confluent
// hypergeometric function 1F1, terminating Gauss 2F1 sums, and the lower
// incomplete gamma function in its normalized polynomial-tail form.

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace qct {

inline constexpr int kMaxFactorialArg = 170;  // largest n with n! finite in double

namespace detail {
inline const std::array<double, kMaxFactorialArg + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kMaxFactorialArg + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kMaxFactorialArg; ++n) t[n] = t[n - 1] * double(n);
    return t;
  }();
  return table;
}
}  // namespace detail

inline double factorial(int n) {
  if (n < 0 || n > kMaxFactorialArg)
    throw std::domain_error("factorial: argument out of range");
  return detail::factorial_table()[n];
}

inline double log_factorial(int n) {
  if (n < 0) throw std::domain_error("log_factorial: negative argument");
  if (n <= kMaxFactorialArg) return std::log(detail::factorial_table()[n]);
  return std::lgamma(double(n) + 1.0);
}

// Exact for small arguments, multiplicative form keeps intermediate values
// bounded for moderate ones.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double acc = 1.0;
  for (int t = 1; t <= k; ++t) acc = acc * double(n - k + t) / double(t);
  return acc;
}

// Indicator of j >= 0 (step factor used by the transform's polynomial tail).
inline double unit_step(long long j) { return j >= 0 ? 1.0 : 0.0; }

// Laguerre polynomial L_n(x) by the stable three-term recurrence.
inline double laguerre(int n, double x) {
  if (n < 0) throw std::domain_error("laguerre: negative degree");
  if (n == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 - x;
  for (int m = 1; m < n; ++m) {
    const double lp1 = ((double(2 * m + 1) - x) * l - double(m) * lm1) / double(m + 1);
    lm1 = l;
    l = lp1;
  }
  return l;
}

// Associated Laguerre polynomial L_n^(alpha)(x).
inline double laguerre_assoc(int n, double alpha, double x) {
  if (n < 0) throw std::domain_error("laguerre_assoc: negative degree");
  if (n == 0) return 1.0;
  double lm1 = 1.0, l = 1.0 + alpha - x;
  for (int m = 1; m < n; ++m) {
    const double lp1 =
        ((double(2 * m + 1) + alpha - x) * l - (double(m) + alpha) * lm1) / double(m + 1);
    lm1 = l;
    l = lp1;
  }
  return l;
}

namespace detail {
inline bool is_nonpositive_integer(double a) {
  return a <= 0.0 && a == std::floor(a);
}
}  // namespace detail

// Confluent hypergeometric function 1F1(a; b; x).
//
// Terminating case (a a non-positive integer): exact finite sum.  Otherwise a
// forward power series with compensated summation; the series converges for
// every x, and all library call sites keep x moderate (|x| <~ 120) where
// forward summation is well conditioned for x >= 0.
inline double kummer_1f1(double a, double b, double x) {
  const bool terminating = detail::is_nonpositive_integer(a);
  if (detail::is_nonpositive_integer(b) && (!terminating || b > a))
    throw std::domain_error("kummer_1f1: polynomial pole in denominator");

  const long long max_terms =
      terminating ? static_cast<long long>(-a) : 10000LL;

  double sum = 1.0, comp = 0.0, term = 1.0;
  for (long long k = 0; k < max_terms; ++k) {
    term *= (a + double(k)) / (b + double(k)) * x / double(k + 1);
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (!terminating && std::abs(term) <= 1e-17 * std::abs(sum) && k > 2) break;
  }
  return sum;
}

// Terminating Gauss hypergeometric sum 2F1(-m, -n; c; x), m, n >= 0.
inline double gauss_2f1_terminating(int m, int n, double c, double x) {
  if (m < 0 || n < 0)
    throw std::domain_error("gauss_2f1_terminating: negative truncation order");
  const int terms = std::min(m, n);
  double sum = 1.0, term = 1.0;
  for (int k = 0; k < terms; ++k) {
    term *= double(-(m - k)) * double(-(n - k)) / (c + double(k)) * x / double(k + 1);
    sum += term;
  }
  return sum;
}

// Lower incomplete gamma gamma(n+1, x) = integral_0^x t^n e^{-t} dt for
// integer n >= 0, evaluated through the confluent series
//   gamma(n+1, x) = x^{n+1} e^{-x} 1F1(1; n+2; x) / (n+1),
// which is cancellation-free for x >= 0.
inline double lower_incomplete_gamma(int n, double x) {
  if (n < 0) throw std::domain_error("lower_incomplete_gamma: negative order");
  if (x < 0.0) throw std::domain_error("lower_incomplete_gamma: negative argument");
  if (x == 0.0) return 0.0;
  const double log_pow = double(n + 1) * std::log(x);
  // Guard against overflow of x^{n+1} by folding e^{-x} into the log scale.
  return std::exp(log_pow - x) * kummer_1f1(1.0, double(n + 2), x) / double(n + 1);
}

}  // namespace qct
