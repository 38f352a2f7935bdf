#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "qct/bergman_kernels.hpp"
#include "qct/cauchy_transform.hpp"
#include "qct/gauss_measure.hpp"
#include "qct/hermite_basis.hpp"
#include "qct/quaternion.hpp"
#include "qct/special_functions.hpp"
#include "qct/spectral_analysis.hpp"
#include "qct/suite.hpp"

// The verification catalog.  Each check re-derives one library identity
// through an independent route and reports the worst absolute and relative
// deviations it saw.  Checks that exercise singular or nested quadratures pin
// the rule sizes that the unit suites validated instead of honoring the
// configurable context, so a config experiment cannot masquerade as a
// mathematical failure.

namespace qct {
namespace {

// --- shared helpers --------------------------------------------------------

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

// Worst-case error accumulator.  The relative error uses max(|want|, floor)
// as the scale, so identities whose reference value passes through zero can
// state the magnitude at which deviations become meaningful.
struct Tally {
  CheckOutcome out;

  void fold(double abs_err, double scale) {
    out.max_abs_err = std::max(out.max_abs_err, abs_err);
    out.max_rel_err =
        std::max(out.max_rel_err, abs_err / std::max(scale, 1e-300));
  }

  void quat(const Quat& got, const Quat& want, double floor = 1e-300) {
    fold(distance(got, want), std::max(norm(want), floor));
  }

  void real(double got, double want, double floor = 1e-300) {
    fold(std::abs(got - want), std::max(std::abs(want), floor));
  }
};

QuadratureSpec hemi_spec(int phi_order, int psi_order) {
  QuadratureSpec spec;
  spec.hemi_phi_order = phi_order;
  spec.hemi_psi_order = psi_order;
  return spec;
}

// Rule sizes proven out by the unit suites.
const QuadratureSpec kProj{.radial_order = 32,
                           .angular_order = 24,
                           .hemi_phi_order = 2,
                           .hemi_psi_order = 2};
const QuadratureSpec kInnerK{.radial_order = 16,
                             .angular_order = 48,
                             .hemi_phi_order = 1,
                             .hemi_psi_order = 1};
const QuadratureSpec kPsiQuad{.radial_order = 24,
                              .angular_order = 16,
                              .hemi_phi_order = 2,
                              .hemi_psi_order = 2};
const QuadratureSpec kPsiDeep{.radial_order = 32,
                              .angular_order = 16,
                              .hemi_phi_order = 2,
                              .hemi_psi_order = 2};
const TruncationSpec kTr48{48, 1e-12};
const TruncationSpec kDeep{120, 1e-8};

// --- algebra ----------------------------------------------------------------

CheckOutcome algebra_ring_axioms(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xA16EB7A1ull);
  Tally tally;
  const Quat one{1};
  for (int trial = 0; trial < 200; ++trial) {
    const Quat a = rng.quaternion(2.0), b = rng.quaternion(2.0),
               c = rng.quaternion(2.0);
    tally.quat((a * b) * c, a * (b * c));
    tally.quat(a * (b + c), a * b + a * c);
    tally.quat((a + b) * c, a * c + b * c);
    tally.quat(a * one, a);
    tally.quat(one * a, a);
  }
  // Non-commutativity witness: ij = k, ji = -k.
  tally.quat(Quat::unit_i() * Quat::unit_j(), Quat::unit_k());
  tally.quat(Quat::unit_j() * Quat::unit_i(), -Quat::unit_k());
  return tally.out;
}

CheckOutcome algebra_norm_multiplicative(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xA16EB7A2ull);
  Tally tally;
  for (int trial = 0; trial < 200; ++trial) {
    const Quat p = rng.quaternion(2.0), q = rng.quaternion(2.0);
    tally.real(norm(p * q), norm(p) * norm(q), 1e-6);
    tally.real(norm(conj(p)), norm(p), 1e-6);
    tally.real(real_part(p * conj(p)), squared_norm(p), 1e-6);
    tally.real(imaginary_norm(p * conj(p)), 0.0, 1.0);
  }
  return tally.out;
}

CheckOutcome algebra_conjugation(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xA16EB7A3ull);
  Tally tally;
  for (int trial = 0; trial < 200; ++trial) {
    const Quat p = rng.quaternion(2.0), q = rng.quaternion(2.0);
    tally.quat(conj(p * q), conj(q) * conj(p));
    tally.quat(conj(conj(p)), p);
    tally.real(real_part(p), 0.5 * real_part(p + conj(p)), 1.0);
  }
  return tally.out;
}

CheckOutcome algebra_inverse(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xA16EB7A4ull);
  Tally tally;
  const Quat one{1};
  int done = 0;
  while (done < 200) {
    const Quat p = rng.quaternion(2.0);
    if (norm(p) < 0.1) continue;
    ++done;
    tally.quat(p * inverse(p), one);
    tally.quat(inverse(p) * p, one);
    tally.quat(inverse(inverse(p)), p);
  }
  return tally.out;
}

CheckOutcome algebra_slice_roundtrip(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xA16EB7A5ull);
  Tally tally;
  for (int trial = 0; trial < 100; ++trial) {
    const ImaginaryUnit<double> I = rng.unit();
    const std::complex<double> z1 = rng.complex_point(2.0);
    const std::complex<double> z2 = rng.complex_point(2.0);
    // Each slice C_I is a commutative field isomorphic to C.
    const Quat u = from_slice(I, std::complex<double>(0.0, 1.0));
    tally.quat(u * u, Quat{-1});
    tally.quat(from_slice(I, z1) * from_slice(I, z2), from_slice(I, z1 * z2));
    tally.quat(from_slice(I, z1) + from_slice(I, z2), from_slice(I, z1 + z2));
    tally.quat(conj(from_slice(I, z1)), from_slice(I, std::conj(z1)));
  }
  return tally.out;
}

// --- specfun ----------------------------------------------------------------

CheckOutcome specfun_factorial_pascal(const CheckContext&) {
  Tally tally;
  for (int n = 1; n <= 170; ++n)
    tally.real(factorial(n) / factorial(n - 1), double(n));
  for (int n = 1; n <= 170; ++n)
    tally.real(log_factorial(n), std::log(factorial(n)), 1.0);
  for (int n = 2; n <= 60; ++n)
    for (int k = 1; k < n; ++k) {
      tally.real(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
      tally.real(binomial(n, k), binomial(n, n - k));
    }
  return tally.out;
}

CheckOutcome specfun_laguerre_recurrence(const CheckContext&) {
  Tally tally;
  const double ts[] = {0.1, 1.0, 4.7, 12.0, 30.0};
  const double alphas[] = {0.0, 1.0, 2.5, 7.0};
  for (double alpha : alphas)
    for (int i = 1; i <= 40; ++i)
      for (double t : ts) {
        const double lm = laguerre_assoc(i - 1, alpha, t);
        const double l0 = laguerre_assoc(i, alpha, t);
        const double lp = laguerre_assoc(i + 1, alpha, t);
        tally.real(double(i + 1) * lp,
                   (2.0 * i + 1.0 + alpha - t) * l0 - (double(i) + alpha) * lm,
                   1.0);
      }
  for (int i = 0; i <= 30; ++i)
    for (double t : ts) tally.real(laguerre(i, t), laguerre_assoc(i, 0.0, t), 1.0);
  return tally.out;
}

CheckOutcome specfun_kummer_transformation(const CheckContext&) {
  Tally tally;
  const double as[] = {0.5, 1.0, 2.0, 3.5};
  const double bs[] = {2.3, 4.0, 7.0};
  const double xs[] = {0.3, 1.0, 2.5, 6.0};
  for (double a : as)
    for (double b : bs) {
      tally.real(kummer_1f1(a, b, 0.0), 1.0);
      for (double x : xs) {
        // Kummer transformation M(a,b,x) = e^x M(b-a, b, -x).
        tally.real(kummer_1f1(a, b, x),
                   std::exp(x) * kummer_1f1(b - a, b, -x));
        // Contiguous relation M(a,b,x) - M(a-1,b,x) = (x/b) M(a,b+1,x).
        tally.real(kummer_1f1(a, b, x) - kummer_1f1(a - 1.0, b, x),
                   x / b * kummer_1f1(a, b + 1.0, x),
                   std::abs(kummer_1f1(a, b, x)));
      }
    }
  // Closed special case M(1,2,x) = (e^x - 1)/x.
  for (double x : xs)
    tally.real(kummer_1f1(1.0, 2.0, x), (std::exp(x) - 1.0) / x);
  return tally.out;
}

CheckOutcome specfun_incomplete_gamma(const CheckContext&) {
  Tally tally;
  const double xs[] = {0.2, 1.0, 3.3, 8.0, 20.0};
  for (double x : xs) {
    tally.real(lower_incomplete_gamma(0, x), 1.0 - std::exp(-x));
    for (int n = 1; n <= 20; ++n) {
      // gamma(n+1, x) = n gamma(n, x) - x^n e^{-x}.
      tally.real(lower_incomplete_gamma(n, x),
                 double(n) * lower_incomplete_gamma(n - 1, x) -
                     std::pow(x, n) * std::exp(-x),
                 factorial(n));
    }
  }
  for (int n = 0; n <= 10; ++n)  // saturation to n! once x >> n
    tally.real(lower_incomplete_gamma(n, 60.0), factorial(n));
  return tally.out;
}

double pochhammer(double c, int l) {
  double value = 1.0;
  for (int i = 0; i < l; ++i) value *= c + i;
  return value;
}

CheckOutcome specfun_terminating_2f1(const CheckContext&) {
  Tally tally;
  const double cs[] = {1.5, 3.0, 8.0};
  const double xs[] = {0.25, -0.7, 2.0};
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n)
      for (double c : cs) {
        tally.real(gauss_2f1_terminating(m, n, c, 0.0), 1.0);
        tally.real(gauss_2f1_terminating(m, n, c, 0.25),
                   gauss_2f1_terminating(n, m, c, 0.25), 1e-6);
        for (double x : xs) {
          // 2F1(-m,-n;c;x) = sum_l l! C(m,l) C(n,l) x^l / (c)_l.
          double want = 0.0;
          for (int l = std::min(m, n); l >= 0; --l)
            want += factorial(l) * binomial(m, l) * binomial(n, l) *
                    std::pow(x, l) / pochhammer(c, l);
          tally.real(gauss_2f1_terminating(m, n, c, x), want, 1e-6);
        }
      }
  return tally.out;
}

// --- basis ------------------------------------------------------------------

CheckOutcome basis_explicit_vs_hypergeometric(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xBA515001ull);
  Tally tally;
  int done = 0;
  while (done < 50) {
    const Quat q = rng.quaternion(1.0);
    if (norm(q) < 0.05) continue;
    ++done;
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n)
        tally.quat(hermite_hypergeometric(m, n, q), hermite_explicit(m, n, q),
                   1e-6);
  }
  return tally.out;
}

CheckOutcome basis_conjugation_symmetry(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xBA515002ull);
  Tally tally;
  for (int trial = 0; trial < 20; ++trial) {
    const Quat q = rng.quaternion(1.4);
    for (int m = 0; m <= 12; ++m) {
      for (int n = 0; n <= 12; ++n)
        tally.quat(conj(hermite_explicit(m, n, q)), hermite_explicit(n, m, q),
                   1e-8);
      tally.quat(hermite_explicit(m, 0, q), pow_int(q, m), 1e-8);
      tally.quat(hermite_explicit(0, m, q), pow_int(conj(q), m), 1e-8);
    }
  }
  return tally.out;
}

CheckOutcome basis_recurrence_ladder(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xBA515003ull);
  Tally tally;
  for (int trial = 0; trial < 20; ++trial) {
    const Quat q = rng.quaternion(1.0);
    for (int m = 0; m <= 10; ++m)
      for (int n = 0; n <= 10; ++n) {
        const Quat h = hermite_explicit(m, n, q);
        // H_{m+1,n} = q H_{m,n} - n H_{m,n-1} and its conjugate mirror.
        Quat raise_m = q * h;
        if (n > 0) raise_m -= double(n) * hermite_explicit(m, n - 1, q);
        tally.quat(hermite_explicit(m + 1, n, q), raise_m, 1e-6);
        Quat raise_n = h * conj(q);
        if (m > 0) raise_n -= double(m) * hermite_explicit(m - 1, n, q);
        tally.quat(hermite_explicit(m, n + 1, q), raise_n, 1e-6);
      }
  }
  return tally.out;
}

CheckOutcome basis_orthonormal_gram(const CheckContext&) {
  // Gram matrix of phi_{m,n}, m,n <= 6, under the slice quadrature (the
  // integrands are intrinsic, so the order-1 hemisphere rule is exact).
  const int cap = 6;
  const int radial_order = 48, angular_order = 48;
  const Rule1D& radial = gauss_laguerre(radial_order);
  const Rule1D angular = uniform_angles(angular_order);
  const ImaginaryUnit<double> I = ImaginaryUnit<double>::from_vector(0, 0, 1);

  std::vector<Quat> nodes;
  std::vector<double> weights;
  for (int i = 0; i < radial_order; ++i) {
    const double r = std::sqrt(radial.node[i]);
    for (int j = 0; j < angular_order; ++j) {
      nodes.push_back(from_slice(
          I, std::complex<double>(r * std::cos(angular.node[j]),
                                  r * std::sin(angular.node[j]))));
      weights.push_back(0.5 * radial.weight[i] * angular.weight[0]);
    }
  }

  const int count = (cap + 1) * (cap + 1);
  std::vector<std::vector<Quat>> values;
  values.resize(std::size_t(count));
  for (int m = 0; m <= cap; ++m)
    for (int n = 0; n <= cap; ++n) {
      auto& column = values[std::size_t(m * (cap + 1) + n)];
      column.reserve(nodes.size());
      for (const Quat& q : nodes) column.push_back(phi_normalized(m, n, q));
    }

  Tally tally;
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b) {
      Quat sum{0};
      for (std::size_t s = 0; s < nodes.size(); ++s)
        sum += conj(values[std::size_t(a)][s]) * values[std::size_t(b)][s] *
               weights[s];
      tally.quat(sum, a == b ? Quat{1} : Quat{0}, 1.0);
    }
  return tally.out;
}

CheckOutcome basis_radial_profile(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0xBA515005ull);
  Tally tally;
  // Larger t values push the explicit coefficient sum toward catastrophic
  // cancellation around the Laguerre zeros (that is what phi_radial is for),
  // so the tight comparison stays at moderate radii.
  const double ts[] = {0.3, 0.9, 1.7, 2.5};
  for (double t : ts)
    for (int trial = 0; trial < 4; ++trial) {
      const ImaginaryUnit<double> I = rng.unit();
      const double theta = rng.uniform(0.0, 2.0 * kPi);
      const double r = std::sqrt(t);
      const Quat q = from_slice(
          I, std::complex<double>(r * std::cos(theta), r * std::sin(theta)));
      for (int m = 0; m <= 8; ++m) {
        for (int n = 0; n <= 8; ++n) {
          const std::complex<double> angular =
              std::polar(1.0, double(m - n) * theta);
          const Quat want = from_slice(I, phi_radial(m, n, t) * angular);
          tally.quat(phi_normalized(m, n, q), want, 1e-2);
        }
        // Diagonal reduction to the plain Laguerre polynomial.
        tally.quat(hermite_explicit(m, m, q),
                   Quat{(m % 2 ? -1.0 : 1.0) * factorial(m) * laguerre(m, t)},
                   factorial(m));
      }
    }
  return tally.out;
}

// --- quadrature -------------------------------------------------------------

CheckOutcome quadrature_rule_exactness(const CheckContext&) {
  Tally tally;
  for (int order : {4, 9, 24}) {
    const Rule1D& rule = gauss_legendre(order);
    for (int k = 0; k <= 2 * order - 1; ++k) {
      double got = 0.0;
      for (int i = 0; i < order; ++i)
        got += rule.weight[i] * std::pow(rule.node[i], k);
      tally.real(got, k % 2 ? 0.0 : 2.0 / (k + 1), 1.0);
    }
  }
  // Laguerre moments are capped at k = 12 for the large rule: the smallest
  // far-node weights sit below the symmetric-eigensolver noise floor
  // (~1e-32 absolute), and t^k at the extreme node amplifies that noise by
  // t_max^k, so only low monomial moments are clean.  Real integrands carry
  // Gaussian decay of their own and never see those nodes.
  for (int order : {8, 32}) {
    const Rule1D& rule = gauss_laguerre(order);
    for (int k = 0; k <= std::min(2 * order - 1, 12); ++k) {
      double got = 0.0;
      for (int i = 0; i < order; ++i)
        got += rule.weight[i] * std::pow(rule.node[i], k);
      tally.real(got, factorial(k));
    }
  }
  const Rule1D shifted = gauss_legendre_on(2.0, 5.0, 12);
  for (int k = 0; k <= 7; ++k) {
    double got = 0.0;
    for (std::size_t i = 0; i < shifted.node.size(); ++i)
      got += shifted.weight[i] * std::pow(shifted.node[i], k);
    tally.real(got, (std::pow(5.0, k + 1) - std::pow(2.0, k + 1)) / (k + 1));
  }
  const Rule1D angles = uniform_angles(16);
  double mass = 0.0;
  for (double w : angles.weight) mass += w;
  tally.real(mass, 2.0 * kPi);
  for (int charge = 1; charge < 16; ++charge) {
    std::complex<double> got{0.0, 0.0};
    for (std::size_t i = 0; i < angles.node.size(); ++i)
      got += angles.weight[i] * std::polar(1.0, charge * angles.node[i]);
    tally.real(std::abs(got), 0.0, 1.0);
  }
  return tally.out;
}

CheckOutcome quadrature_measure_mass(const CheckContext& ctx) {
  Tally tally;
  for (double area : {1.0, 2.5}) {
    QuadratureSpec spec = ctx.quadrature;
    spec.area_normalization = area;
    const HemisphereRule hemi = hemisphere_rule(spec);
    double direction_mass = 0.0;
    for (double w : hemi.weight) direction_mass += w;
    tally.real(direction_mass, area);
    const Quat total =
        integral_over_H([](const Quat&) { return Quat{1}; }, spec);
    tally.quat(total, Quat{kPi * area});
  }
  const Quat slice = slice_integral(
      [](const Quat&) { return Quat{1}; },
      ImaginaryUnit<double>::from_vector(0, 0, 1), ctx.quadrature);
  tally.quat(slice, Quat{kPi});
  return tally.out;
}

CheckOutcome quadrature_monomial_moments(const CheckContext& ctx) {
  Tally tally;
  QuadratureSpec spec = ctx.quadrature;
  spec.hemi_phi_order = 1;  // intrinsic integrands: order-1 hemisphere exact
  spec.hemi_psi_order = 1;
  for (int m = 0; m <= 8; ++m)
    for (int n = 0; m + n <= 8; ++n) {
      const Quat got = inner_product(
          [&](const Quat& q) { return monomial(m, n, q); },
          [&](const Quat& q) { return monomial(m, n, q); }, spec);
      tally.quat(got, Quat{kPi * factorial(m + n)});
    }
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      const Quat got = inner_product(
          [&](const Quat& q) { return hermite_explicit(m, n, q); },
          [&](const Quat& q) { return hermite_explicit(m, n, q); }, spec);
      tally.quat(got, Quat{kPi * factorial(m) * factorial(n)});
    }
  // Angular selection: distinct charges are orthogonal.
  const int cross[][4] = {{1, 0, 0, 1}, {2, 0, 1, 0}, {3, 1, 1, 3},
                          {2, 1, 1, 2}, {4, 0, 0, 0}};
  for (const auto& c : cross) {
    const Quat got = inner_product(
        [&](const Quat& q) { return monomial(c[0], c[1], q); },
        [&](const Quat& q) { return monomial(c[2], c[3], q); }, spec);
    tally.quat(got, Quat{0}, 1.0);
  }
  return tally.out;
}

CheckOutcome quadrature_deterministic_streams(const CheckContext& ctx) {
  Tally tally;
  DeterministicUniform a(ctx.seed), b(ctx.seed);
  for (int i = 0; i < 4096; ++i) {
    const double x = a.next(), y = b.next();
    tally.real(x, y, 1.0);
    tally.real(std::max(0.0, std::max(x - 1.0, -x)), 0.0, 1.0);
  }
  return tally.out;
}

CheckOutcome quadrature_monte_carlo(const CheckContext& ctx) {
  Tally tally;
  const auto f = [](const Quat& q) {
    return Quat{1.0 / (1.0 + squared_norm(q))};
  };
  const Quat exact = integral_over_H(f, ctx.quadrature);
  const Quat sampled = monte_carlo_integral(f, ctx.seed ^ 0x3C0FFEEull, 100000,
                                            ctx.quadrature.area_normalization);
  tally.quat(sampled, exact);
  return tally.out;
}

// --- kernel -----------------------------------------------------------------

// The closed form divides by D = q^2 - 2 Re(p) q + |p|^2; pairs almost on
// the singular sphere lose digits to that cancellation in *both* routes, so
// the comparison stays away from it.
bool near_singular(const Quat& q, const Quat& p) {
  const Quat d =
      q * q - 2.0 * real_part(p) * q + Quat{squared_norm(p)};
  return norm(d) < 0.05 * std::max(1.0, squared_norm(q) + squared_norm(p));
}

CheckOutcome kernel_series_interior(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x6E75E101ull);
  Tally tally;
  int done = 0;
  while (done < 200) {
    Quat q = rng.quaternion(1.6);
    if (norm(q) < 0.4) continue;
    Quat p;
    if (done % 2 == 0) {  // generic position
      p = rng.quaternion(1.0);
    } else {  // common slice
      const ImaginaryUnit<double> I = rng.unit();
      q = from_slice(I, rng.complex_point(1.6));
      if (norm(q) < 0.4) continue;
      p = from_slice(I, rng.complex_point(1.0));
    }
    const double scale = rng.uniform(0.1, 0.75) * norm(q);
    if (norm(p) < 1e-3) continue;
    p = p * (scale / norm(p));
    if (near_singular(q, p)) continue;
    ++done;
    const KernelEvaluation series = kernel_series(q, p);
    if (series.method != KernelEvaluation::Method::series_interior)
      tally.fold(1.0, 1.0);
    tally.quat(series.value, kernel_closed(q, p), 1e-12);
  }
  return tally.out;
}

CheckOutcome kernel_series_exterior(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x6E75E102ull);
  Tally tally;
  int done = 0;
  while (done < 200) {
    Quat p = rng.quaternion(1.6);
    if (norm(p) < 0.4) continue;
    Quat q = rng.quaternion(1.0);
    if (done % 2 == 1) {
      const ImaginaryUnit<double> I = rng.unit();
      p = from_slice(I, rng.complex_point(1.6));
      if (norm(p) < 0.4) continue;
      q = from_slice(I, rng.complex_point(1.0));
    }
    if (norm(q) < 1e-3) continue;
    const double scale = rng.uniform(0.1, 0.75) * norm(p);
    q = q * (scale / norm(q));
    if (near_singular(q, p)) continue;
    ++done;
    const KernelEvaluation series = kernel_series(q, p);
    if (series.method != KernelEvaluation::Method::series_exterior)
      tally.fold(1.0, 1.0);
    tally.quat(series.value, kernel_closed(q, p), 1e-12);
  }
  return tally.out;
}

CheckOutcome kernel_closed_anchors(const CheckContext&) {
  Tally tally;
  const Quat i = Quat::unit_i(), j = Quat::unit_j();
  tally.quat(kernel_closed(Quat{2}, Quat{1}), Quat{1});
  tally.quat(kernel_closed(Quat{1}, Quat{2}), Quat{-1});
  tally.quat(kernel_closed(2.0 * i, j), (2.0 * i + j) / -3.0);
  const Quat q{0.7, -0.3, 0.4, 0.1};
  tally.quat(kernel_closed(q, Quat{0}), inverse(q));
  return tally.out;
}

// --- transform ---------------------------------------------------------------

CheckOutcome transform_monomial_action(const CheckContext&) {
  Tally tally;
  const QuadratureSpec spec = hemi_spec(2, 2);
  const ImaginaryUnit<double> Ia =
      ImaginaryUnit<double>::from_vector(0.6, 0.3, -0.2);
  const ImaginaryUnit<double> Ib =
      ImaginaryUnit<double>::from_vector(-0.1, 0.8, 0.4);
  const Quat qs[] = {from_slice(Ia, {0.4, 0.3}), from_slice(Ib, {-0.5, 0.8})};
  for (const Quat& q : qs)
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; m + n <= 4; ++n) {
        const Quat got = cauchy_transform_numeric(
            [&](const Quat& p) { return monomial(m, n, p); }, q, spec);
        tally.quat(got, cauchy_on_monomial(m, n, q), 1e-2);
      }
  return tally.out;
}

CheckOutcome transform_basis_action(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x7AC7101ull);
  Tally tally;
  const QuadratureSpec spec = hemi_spec(2, 2);
  const Quat qs[] = {rng.quaternion(0.9), rng.quaternion(0.9)};
  for (const Quat& q : qs) {
    const double damp = std::exp(-squared_norm(q));
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; m + n <= 4; ++n) {
        const Quat got = cauchy_transform_numeric(
            [&](const Quat& p) { return phi_normalized(m, n, p); }, q, spec);
        const double scale = std::exp(
            -0.5 * (std::log(kPi) + log_factorial(m) + log_factorial(n)));
        const Quat ref = cauchy_on_hermite(m, n, q) * scale;
        tally.quat(got, ref, 1e-3);
        if (m >= 1)  // closed ladder: C phi_{m,n} = -e^{-t} phi_{m-1,n}/sqrt(m)
          tally.quat(ref, phi_normalized(m - 1, n, q) *
                              (-damp / std::sqrt(double(m))),
                     1e-3);
      }
  }
  return tally.out;
}

CheckOutcome transform_constant_image(const CheckContext&) {
  Tally tally;
  const double want = 1.0 - std::exp(-1.0);
  tally.quat(cauchy_on_monomial(0, 0, Quat{1}), Quat{want});
  const Quat numeric = cauchy_transform_numeric(
      [](const Quat&) { return Quat{1}; }, Quat{1}, hemi_spec(2, 2));
  tally.quat(numeric, Quat{want});
  const Quat qj = 0.8 * Quat::unit_j();
  tally.quat(cauchy_transform_numeric([](const Quat&) { return Quat{1}; }, qj,
                                      hemi_spec(2, 2)),
             cauchy_on_monomial(0, 0, qj), 1e-3);
  return tally.out;
}

CheckOutcome transform_adjoint_pairing(const CheckContext&) {
  Tally tally;
  const auto g = [](const Quat& q) { return hermite_explicit(1, 1, q); };
  const auto f = [](const Quat& q) { return hermite_explicit(2, 1, q); };
  const double want = -kPi / 4.0;
  const Quat rhs = inner_product(
      g, [](const Quat& q) { return cauchy_on_hermite(2, 1, q); });
  tally.quat(rhs, Quat{want});
  QuadratureSpec outer;
  outer.radial_order = 16;
  outer.angular_order = 8;
  outer.hemi_phi_order = 2;
  outer.hemi_psi_order = 2;
  const QuadratureSpec inner = hemi_spec(1, 1);
  const Quat lhs = inner_product(
      [&](const Quat& p) { return cauchy_adjoint_numeric(g, p, inner); }, f,
      outer);
  tally.quat(lhs, Quat{want}, 1e-3);
  tally.quat(lhs, rhs, 1e-3);
  return tally.out;
}

CheckOutcome transform_norm_bound(const CheckContext&) {
  // Deliberate negative result, retained at face value: the conjectured
  // bound sigma <= A/sqrt(pi) fails.  ||C phi_{1,0}|| = 3^{-1/2} already
  // exceeds pi^{-1/2}, and the Galerkin operator norm is larger still
  // (~0.678).  The reported relative error is the fractional excess over the
  // bound, so this check fails for as long as the inequality does.
  Tally tally;
  const double bound = 1.0 / std::sqrt(kPi);

  // Route 1: exact image norm through the measure quadrature.
  const double scale = 1.0 / std::sqrt(kPi);  // normalization of phi_{1,0}
  const Quat image_sq = inner_product(
      [&](const Quat& q) { return cauchy_on_hermite(1, 0, q) * scale; },
      [&](const Quat& q) { return cauchy_on_hermite(1, 0, q) * scale; });
  const double lower = std::sqrt(real_part(image_sq));

  // Route 2: largest singular value of a Galerkin truncation.
  const OperatorMatrix matrix = build_cauchy_matrix(12, 12);
  const std::vector<double> sigma = svd_singular_values(matrix.entries);
  const double sigma_max = sigma.empty() ? 0.0 : sigma.front();

  const double worst = std::max(lower, sigma_max);
  tally.fold(std::max(0.0, worst - bound), bound);
  return tally.out;
}

// --- projection --------------------------------------------------------------

CheckOutcome projection_reproduce_annihilate(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x9107EC71ull);
  Tally tally;
  const Quat qs[] = {from_slice(rng.unit(), {0.4, 0.3}), rng.quaternion(0.5)};
  const int reproduce[][2] = {{0, 0}, {0, 1}, {1, 1}, {2, 0}};
  for (const Quat& q : qs) {
    for (const auto& mn : reproduce) {
      const int m = mn[0], n = mn[1];
      const auto phi = [&](const Quat& p) { return hermite_explicit(m, n, p); };
      tally.quat(project_Pn(phi, n, q, kProj, kTr48),
                 hermite_explicit(m, n, q), 1.0);
    }
    tally.quat(project_Pn(
                   [](const Quat& p) { return hermite_explicit(2, 0, p); }, 1,
                   q, kProj, kTr48),
               Quat{0}, 1.0);
    tally.quat(project_Pn(
                   [](const Quat& p) { return hermite_explicit(1, 2, p); }, 0,
                   q, kProj, kTr48),
               Quat{0}, 1.0);
  }
  return tally.out;
}

// Compact-disc quadrature of f against the Gaussian plane measure on the
// canonical slice; the outer level of nested projections uses it so every
// kernel evaluation stays inside the certifiable truncation range.
template <typename F>
Quat disc_integral(F&& f, double rmax, int radial, int angular) {
  const Rule1D rule = gauss_legendre_on(0.0, rmax, radial);
  const Rule1D ang = uniform_angles(angular);
  const ImaginaryUnit<double> unit = ImaginaryUnit<double>::canonical();
  Quat sum{0};
  for (std::size_t i = 0; i < rule.node.size(); ++i) {
    const double r = rule.node[i];
    const double wr = rule.weight[i] * r * std::exp(-r * r);
    for (std::size_t j = 0; j < ang.node.size(); ++j) {
      const Quat z = from_slice(unit, std::polar(r, ang.node[j]));
      sum += f(z) * (wr * ang.weight[j]);
    }
  }
  return sum;
}

CheckOutcome projection_idempotence(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x9107EC72ull);
  Tally tally;
  const auto f = [](const Quat& p) {
    return hermite_explicit(2, 1, p) + hermite_explicit(0, 0, p) * 0.5 -
           hermite_explicit(1, 2, p) * 0.3 + hermite_explicit(1, 0, p) * 0.8;
  };
  const auto p1f = [&](const Quat& x) {
    return project_Pn(f, 1, x, kInnerK, kDeep);
  };
  const Quat q0 = from_slice(rng.unit(), {0.4, 0.3});
  const Quat once = p1f(q0);
  tally.quat(once, hermite_explicit(2, 1, q0), 1.0);  // exact column part
  const Quat twice = disc_integral(
      [&](const Quat& p) {
        return repkernel_Kn_series(1, q0, p, kDeep).value * p1f(p);
      },
      5.0, 20, 12);
  tally.quat(twice, once, 1.0);
  return tally.out;
}

CheckOutcome projection_kernel_series_vs_closed(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x9107EC73ull);
  Tally tally;
  for (int trial = 0; trial < 8; ++trial) {
    const ImaginaryUnit<double> I = rng.unit();
    const Quat q = from_slice(I, rng.complex_point(1.5));
    const Quat p = from_slice(I, rng.complex_point(1.5));
    for (int n = 0; n <= 3; ++n)
      tally.quat(repkernel_Kn_series(n, q, p, kTr48).value,
                 repkernel_Kn_slice_closed(n, q, p), 1e-4);
    for (int k = 1; k <= 2; ++k)
      tally.quat(kernel_Rk_series(k, q, p, kTr48).value,
                 kernel_Rk_slice_closed(k, q, p), 1e-4);
  }
  return tally.out;
}

CheckOutcome projection_sk_bridge(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x9107EC74ull);
  Tally tally;
  for (int trial = 0; trial < 6; ++trial) {
    const ImaginaryUnit<double> I = rng.unit();
    const std::complex<double> zq = rng.complex_point(1.7);
    const std::complex<double> zp = rng.complex_point(1.7);
    const Quat q = from_slice(I, zq), p = from_slice(I, zp);
    for (int k = 1; k <= 3; ++k) {
      // k e^{|p|^2+|q|^2} S_k(p, q) = K_{k-1}(conj q, conj p).
      const Quat lhs = kernel_Sk(k, p, q, kTr48).value *
                       (double(k) * std::exp(std::norm(zp) + std::norm(zq)));
      const Quat rhs = repkernel_Kn_series(k - 1, conj(q), conj(p), kTr48).value;
      tally.quat(lhs, rhs, 1e-6);
    }
  }
  return tally.out;
}

CheckOutcome projection_composition_anchor(const CheckContext& ctx) {
  Sampler rng(ctx.seed ^ 0x9107EC75ull);
  Tally tally;
  const Quat qs[] = {from_slice(rng.unit(), {0.35, 0.45}), rng.quaternion(0.4)};
  for (const Quat& q : qs) {
    // P_1(C H_{2,1}) = -H_{1,1}/4; P_2(C H_{1,2}) = -H_{0,2}/8.
    const Quat got1 = project_Pn(
        [](const Quat& p) { return cauchy_on_hermite(2, 1, p); }, 1, q, kProj,
        kTr48);
    tally.quat(got1, hermite_explicit(1, 1, q) * -0.25, 1e-2);
    const Quat got2 = project_Pn(
        [](const Quat& p) { return cauchy_on_hermite(1, 2, p); }, 2, q, kProj,
        kTr48);
    tally.quat(got2, hermite_explicit(0, 2, q) * -0.125, 1e-2);
    // Charge selection kills mismatched columns.
    tally.quat(project_Pn(
                   [](const Quat& p) { return cauchy_on_hermite(0, 2, p); }, 1,
                   q, kProj, kTr48),
               Quat{0}, 1.0);
  }
  return tally.out;
}

// --- spectrum ----------------------------------------------------------------

CheckOutcome spectrum_selection_rule(const CheckContext&) {
  Tally tally;
  for (int n = 0; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= 4; ++k)
        for (int j = 1; j <= 4; ++j) {
          if (n + m + k + j > 8 || m - j == n - k) continue;
          const Quat got = inner_product(
              [&](const Quat& p) { return psi_eigenfunction(n, m, p); },
              [&](const Quat& p) { return psi_eigenfunction(k, j, p); },
              kPsiQuad);
          tally.quat(got, Quat{0}, 1.0);
          tally.real(psi_inner_product(n, m, k, j), 0.0, 1.0);
        }
  return tally.out;
}

CheckOutcome spectrum_norm_closed_vs_quadrature(const CheckContext&) {
  Tally tally;
  tally.real(psi_norm_closed(0, 1), kPi / 3.0);
  tally.real(psi_norm_closed(0, 2), kPi / 9.0);
  for (int m = 0; m <= 9; ++m)
    for (int n = 1; m + n <= 10; ++n) {
      const Quat quadrature = inner_product(
          [&](const Quat& p) { return psi_eigenfunction(m, n, p); },
          [&](const Quat& p) { return psi_eigenfunction(m, n, p); }, kPsiDeep);
      tally.real(real_part(quadrature), psi_norm_closed(m, n));
    }
  return tally.out;
}

CheckOutcome spectrum_lambda_anchors(const CheckContext&) {
  Tally tally;
  tally.real(lambda_eigenvalue(0, 1), 1.0 / 3.0);
  tally.real(lambda_eigenvalue(1, 1), 1.0 / 9.0);
  tally.real(lambda_eigenvalue(2, 1), 1.0 / 27.0);
  tally.real(lambda_eigenvalue(1, 2), 5.0 / 54.0);
  tally.real(lambda_eigenvalue(2, 2), 1.0 / 18.0);
  for (int n = 1; n <= 8; ++n)
    tally.real(lambda_eigenvalue(0, n), std::pow(3.0, -n) / n);
  for (int k = 0; k <= 8; ++k)
    tally.real(lambda_eigenvalue(k, 1), std::pow(3.0, -(k + 1)));
  tally.real(lambda_hat(0), std::log(4.0 / 3.0));
  return tally.out;
}

CheckOutcome spectrum_matrix_routes_agree(const CheckContext&) {
  Tally tally;
  const OperatorMatrix matrix = build_cauchy_matrix(8, 8);
  for (std::size_t r = 0; r < matrix.row_indices.size(); ++r)
    for (std::size_t c = 0; c < matrix.col_indices.size(); ++c) {
      const BasisIndex row = matrix.row_indices[r];
      const BasisIndex col = matrix.col_indices[c];
      const double series =
          cauchy_matrix_entry_series(row.m, row.n, col.m, col.n);
      tally.real(matrix.entries(Eigen::Index(r), Eigen::Index(c)), series,
                 1.0);
    }
  return tally.out;
}

CheckOutcome spectrum_svd_matches_lambda(const CheckContext&) {
  Tally tally;
  const OperatorMatrix matrix = build_cauchy_matrix(30, 30);
  // The k = 0 rows are the monomial-column extension (hat family), outside
  // the P_k accessor's domain, so that block is extracted directly.
  const auto hat_block = [&matrix]() {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < matrix.row_indices.size(); ++r)
      if (matrix.row_indices[r].n == 0) rows.push_back(r);
    Eigen::MatrixXd block(Eigen::Index(rows.size()), matrix.entries.cols());
    for (std::size_t i = 0; i < rows.size(); ++i)
      block.row(Eigen::Index(i)) = matrix.entries.row(Eigen::Index(rows[i]));
    return block;
  };
  for (int block = 0; block <= 2; ++block) {
    std::vector<double> closed;
    const int member_max = block == 0 ? 20 : 30;
    for (int member = 0; member <= member_max; ++member)
      closed.push_back(std::sqrt(block == 0 ? lambda_hat(member)
                                            : lambda_eigenvalue(member, block)));
    std::sort(closed.begin(), closed.end(), std::greater<>());
    const std::vector<double> numeric = svd_singular_values(
        block == 0 ? hat_block() : pk_row_block(matrix, block));
    for (int i = 0; i <= 6; ++i)
      tally.real(numeric[std::size_t(i)], closed[std::size_t(i)]);
  }
  return tally.out;
}

CheckOutcome spectrum_asymptotic_agreement(const CheckContext&) {
  Tally tally;
  for (int k : {0, 1})
    tally.real(std::sqrt(lambda_eigenvalue(k, 40)),
               singular_values_asymptotic(k, 40));
  return tally.out;
}

CheckOutcome spectrum_schatten_trend(const CheckContext&) {
  // kappa = 3 partial sums settle (last relative increment < 1%) while the
  // kappa = 1 sums keep growing at the same truncations: the operator is
  // 3-summable in the observable range but not trace class.
  Tally tally;
  const OperatorMatrix matrix = build_cauchy_matrix(40, 40);
  const SchattenDiagnostics diag = schatten_diagnostics(matrix, {1.0, 3.0});
  const std::vector<double>& cubes = diag.partial_sums.at(3.0);
  const std::vector<double>& firsts = diag.partial_sums.at(1.0);
  const double cube_rel =
      (cubes.back() - cubes[cubes.size() - 2]) / cubes.back();
  const double first_rel =
      (firsts.back() - firsts[firsts.size() - 2]) / firsts.back();
  tally.fold(cube_rel, 1.0);
  if (diag.classification.at(3.0) != "converging") tally.fold(1.0, 1.0);
  if (diag.classification.at(1.0) != "diverging") tally.fold(1.0, 1.0);
  if (first_rel < 0.05) tally.fold(1.0, 1.0);
  return tally.out;
}

CheckOutcome spectrum_range_decomposition(const CheckContext&) {
  const VerificationReport report = range_decomposition_check(3, kPsiQuad);
  CheckOutcome out;
  out.max_abs_err = report.max_abs_err;
  out.max_rel_err = report.max_rel_err;
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "all",    "algebra",   "specfun",    "basis",   "quadrature",
      "kernel", "transform", "projection", "spectrum"};
  return names;
}

const std::vector<Check>& check_catalog() {
  static const std::vector<Check> catalog = {
      // algebra
      {"algebra.ring_axioms", "algebra",
       "associativity, distributivity, unit laws, ij = k = -ji",
       1e-12, Gauge::absolute, algebra_ring_axioms},
      {"algebra.norm_multiplicative", "algebra",
       "|pq| = |p||q|, |conj p| = |p|, p conj(p) = |p|^2 real",
       1e-12, Gauge::relative, algebra_norm_multiplicative},
      {"algebra.conjugation_antihomomorphism", "algebra",
       "conj(pq) = conj(q) conj(p), conj is an involution",
       1e-12, Gauge::absolute, algebra_conjugation},
      {"algebra.inverse_roundtrip", "algebra",
       "q q^{-1} = q^{-1} q = 1 for |q| >= 0.1",
       1e-12, Gauge::absolute, algebra_inverse},
      {"algebra.slice_roundtrip", "algebra",
       "each slice C_I is a commutative field: products, sums, conjugates map "
       "through from_slice",
       1e-12, Gauge::absolute, algebra_slice_roundtrip},
      // specfun
      {"specfun.factorial_pascal", "specfun",
       "n!/(n-1)! = n, log n! = log(n!), Pascal and symmetry for C(n,k)",
       1e-12, Gauge::relative, specfun_factorial_pascal},
      {"specfun.laguerre_recurrence", "specfun",
       "(i+1) L_{i+1}^a = (2i+1+a-t) L_i^a - (i+a) L_{i-1}^a; L_n = L_n^0",
       1e-11, Gauge::relative, specfun_laguerre_recurrence},
      {"specfun.kummer_transformation", "specfun",
       "M(a,b,0) = 1, M(a,b,x) = e^x M(b-a,b,-x), stencil derivative matches "
       "(a/b) M(a+1,b+1,x)",
       1e-9, Gauge::relative, specfun_kummer_transformation},
      {"specfun.incomplete_gamma_recurrence", "specfun",
       "gamma(n+1,x) = n gamma(n,x) - x^n e^{-x}; saturation to n!",
       1e-12, Gauge::relative, specfun_incomplete_gamma},
      {"specfun.terminating_2f1", "specfun",
       "2F1(-m,-n;c;x) equals its finite defining sum; symmetric in m,n",
       1e-12, Gauge::relative, specfun_terminating_2f1},
      // basis
      {"basis.explicit_vs_hypergeometric", "basis",
       "coefficient sum equals the Kummer-form evaluation of H_{m,n}, "
       "m,n <= 10, 50 points",
       1e-11, Gauge::relative, basis_explicit_vs_hypergeometric},
      {"basis.conjugation_symmetry", "basis",
       "conj H_{m,n} = H_{n,m}; H_{m,0} = q^m, H_{0,n} = conj(q)^n",
       1e-12, Gauge::relative, basis_conjugation_symmetry},
      {"basis.recurrence_ladder", "basis",
       "H_{m+1,n} = q H_{m,n} - n H_{m,n-1} and the conjugate-mirror ladder",
       1e-11, Gauge::relative, basis_recurrence_ladder},
      {"basis.orthonormal_gram", "basis",
       "slice-quadrature Gram of phi_{m,n}, m,n <= 6, is the identity",
       1e-8, Gauge::absolute, basis_orthonormal_gram},
      {"basis.radial_profile", "basis",
       "phi_{m,n} = radial Laguerre profile times e^{i(m-n)theta} on every "
       "slice; H_{m,m} = (-1)^m m! L_m(t)",
       1e-12, Gauge::relative, basis_radial_profile},
      // quadrature
      {"quadrature.rule_exactness", "quadrature",
       "Gauss rules integrate their polynomial design spaces exactly; "
       "uniform angles kill charges below the order",
       1e-13, Gauge::relative, quadrature_rule_exactness},
      {"quadrature.measure_total_mass", "quadrature",
       "integral of 1 over H is pi * A; hemisphere weights sum to A",
       1e-13, Gauge::relative, quadrature_measure_mass},
      {"quadrature.monomial_moments", "quadrature",
       "<q^m conj(q)^n, same> = pi (m+n)!; <H_{m,n}, H_{m,n}> = pi m! n!; "
       "distinct charges orthogonal",
       1e-12, Gauge::relative, quadrature_monomial_moments},
      {"quadrature.deterministic_streams", "quadrature",
       "seeded uniform streams are bit-identical and land in [0,1)",
       0.0, Gauge::absolute, quadrature_deterministic_streams},
      {"quadrature.monte_carlo_cross_check", "quadrature",
       "Monte Carlo oracle agrees with the product quadrature on a "
       "non-polynomial intrinsic integrand",
       2e-2, Gauge::relative, quadrature_monte_carlo},
      // kernel
      {"kernel.series_vs_closed_interior", "kernel",
       "geometric kernel series (|p| < |q| branch) matches the closed form "
       "on generic and common-slice pairs",
       1e-10, Gauge::relative, kernel_series_interior},
      {"kernel.series_vs_closed_exterior", "kernel",
       "geometric kernel series (|q| < |p| branch) matches the closed form "
       "on generic and common-slice pairs",
       1e-10, Gauge::relative, kernel_series_exterior},
      {"kernel.closed_anchors", "kernel",
       "N(2,1) = 1, N(1,2) = -1, N(2i,j) = -(2i+j)/3, N(q,0) = q^{-1}",
       1e-14, Gauge::absolute, kernel_closed_anchors},
      // transform
      {"transform.monomial_action", "transform",
       "singular quadrature of the transform matches the closed monomial "
       "action, m+n <= 4",
       1e-6, Gauge::relative, transform_monomial_action},
      {"transform.basis_action", "transform",
       "C phi_{m,n} = -e^{-t} phi_{m-1,n}/sqrt(m) (m >= 1; m = 0 leaves the "
       "polynomial range), quadrature vs closed",
       1e-6, Gauge::relative, transform_basis_action},
      {"transform.constant_image", "transform",
       "C1 at q = 1 equals 1 - e^{-1} (sign anchor) by both routes",
       1e-6, Gauge::relative, transform_constant_image},
      {"transform.adjoint_pairing", "transform",
       "<C* g, f> = <g, C f>; both sides equal -pi/4 for g = H_{1,1}, "
       "f = H_{2,1}",
       1e-4, Gauge::relative, transform_adjoint_pairing},
      {"transform.norm_bound", "transform",
       "conjectured bound sigma <= A/sqrt(pi) FAILS: ||C phi_{1,0}|| = "
       "3^{-1/2} > pi^{-1/2} and Galerkin sigma_max ~ 0.678; kept failing on "
       "purpose as a negative result",
       1e-3, Gauge::relative, transform_norm_bound},
      // projection
      {"projection.reproduce_annihilate", "projection",
       "P_n reproduces column n and annihilates other columns",
       1e-7, Gauge::absolute, projection_reproduce_annihilate},
      {"projection.idempotence", "projection",
       "P_1 f equals the exact column part and P_1(P_1 f) = P_1 f",
       1e-5, Gauge::absolute, projection_idempotence},
      {"projection.kernel_series_vs_closed", "projection",
       "column kernel K_n and companion kernel R_k: series equal closed "
       "slice forms",
       1e-10, Gauge::relative, projection_kernel_series_vs_closed},
      {"projection.sk_bridge", "projection",
       "k e^{|p|^2+|q|^2} S_k(p,q) = K_{k-1}(conj q, conj p)",
       1e-9, Gauge::relative, projection_sk_bridge},
      {"projection.composition_anchor", "projection",
       "P_1 C H_{2,1} = -H_{1,1}/4, P_2 C H_{1,2} = -H_{0,2}/8, mismatched "
       "columns annihilated",
       1e-6, Gauge::relative, projection_composition_anchor},
      // spectrum
      {"spectrum.selection_rule", "spectrum",
       "<psi_{n,m}, psi_{k,j}> = 0 when m - j != n - k (quadrature and "
       "closed), total index <= 8",
       1e-8, Gauge::absolute, spectrum_selection_rule},
      {"spectrum.norm_closed_vs_quadrature", "spectrum",
       "closed ||psi_{m,n}||^2 matches quadrature for m+n <= 10; anchors "
       "pi/3 at (0,1) and pi/9 at (0,2)",
       1e-8, Gauge::relative, spectrum_norm_closed_vs_quadrature},
      {"spectrum.lambda_anchors", "spectrum",
       "lambda(0,n) = 3^{-n}/n, lambda(k,1) = 3^{-(k+1)}, lambda(1,2) = 5/54, "
       "lambda(2,2) = 1/18, lambda_hat(0) = ln(4/3)",
       1e-12, Gauge::relative, spectrum_lambda_anchors},
      {"spectrum.matrix_routes_agree", "spectrum",
       "stable integral route for Galerkin entries matches the combinatorial "
       "series on an 8 x 8 index grid",
       1e-11, Gauge::absolute, spectrum_matrix_routes_agree},
      {"spectrum.svd_matches_lambda", "spectrum",
       "singular values of the P_k row blocks (k <= 2) match sqrt(lambda) / "
       "sqrt(lambda_hat); the alternative literal closed form differs by "
       "3^{1/4} powers and is flagged in the spectral CSV",
       1e-4, Gauge::relative, spectrum_svd_matches_lambda},
      {"spectrum.asymptotic_agreement", "spectrum",
       "sqrt(lambda(k,40)) is within 5% of the large-n asymptotic, k = 0, 1",
       5e-2, Gauge::relative, spectrum_asymptotic_agreement},
      {"spectrum.schatten_trend", "spectrum",
       "kappa = 3 Schatten sums settle below 1% increments at caps "
       "{25,30,35,40} while kappa = 1 keeps growing",
       1e-2, Gauge::relative, spectrum_schatten_trend},
      {"spectrum.range_decomposition", "spectrum",
       "transform range splits into mutually orthogonal charge sectors with "
       "positive diagonal norms",
       1e-7, Gauge::combined, spectrum_range_decomposition},
  };
  return catalog;
}

}  // namespace qct
