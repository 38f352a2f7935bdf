#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qct/bergman_kernels.hpp"
#include "qct/cauchy_transform.hpp"
#include "qct/gauss_measure.hpp"
#include "qct/hermite_basis.hpp"
#include "qct/quaternion.hpp"
#include "qct/special_functions.hpp"
#include "test_support.hpp"

using namespace qct;
using testing::Sampler;
using testing::near;

namespace {

// distance(a, b) <= rel * max(floor, |b|): relative comparison with an
// absolute floor so that tiny reference values do not demand impossible
// relative accuracy.
bool close_rel(const Quat& got, const Quat& ref, double rel,
               double floor_scale) {
  return distance(got, ref) <= rel * std::max(floor_scale, norm(ref));
}

bool close_rel(double got, double ref, double rel, double floor_scale) {
  return std::abs(got - ref) <= rel * std::max(floor_scale, std::abs(ref));
}

// A pair of points on one randomly drawn slice plane.
struct SlicePairSample {
  ImaginaryUnit<double> unit;
  std::complex<double> zq, zp;
  Quat q, p;
};

SlicePairSample sample_slice_pair(Sampler& rng, double half_width) {
  SlicePairSample s;
  s.unit = rng.unit();
  s.zq = rng.complex_point(half_width);
  s.zp = rng.complex_point(half_width);
  s.q = from_slice(s.unit, s.zq);
  s.p = from_slice(s.unit, s.zp);
  return s;
}

// Compact Gaussian-weighted integral over one slice plane:
//   integral_{C} F(z) e^{-|z|^2} dA(z), |z| <= rmax,
// by Gauss-Legendre in the radius and uniform midpoint angles.  For the
// integrands used here every slice plane yields the same value (each term
// pairs charge-matched factors, so the per-slice integral is a real number
// independent of the plane, left-multiplied by fixed quaternion constants),
// so one plane equals the full measure at unit direction mass.  rmax = 5
// leaves a tail below e^{-25} * poly, negligible at the tolerances in use.
Quat disc_integral(const std::function<Quat(const Quat&)>& f, double rmax,
                   int radial, int angular) {
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

Quat hermite_fn(int m, int n, const Quat& x) { return hermite_explicit(m, n, x); }

// Quadrature configurations.  Single-level projection quadratures use the
// native Gaussian rules; the inner level of double quadratures keeps its
// radius moderate so kernel evaluations stay certifiable in double
// precision, and the outer level is the compact disc rule above.
const QuadratureSpec kProj{.radial_order = 32,
                           .angular_order = 24,
                           .hemi_phi_order = 2,
                           .hemi_psi_order = 2};
// Inner rules for nested (double-quadrature) tests.  The kernel series
// carries angular charges up to its truncation order, so an angular rule of
// order N aliases the charge-(N +/- 1) terms back onto the surviving charge;
// their coefficients scale like |p|^m / m! times a radial moment and are
// only negligible for N ~ 48 when the evaluation point reaches |p| ~ 5.
// The undamped column kernel keeps radial order 16: larger Laguerre rules
// place nodes so far out that the argument product leaves the certifiable
// truncation range, while the damped companion kernel affords radial 24
// (which removes the Laguerre weight-mismatch floor of ~2e-10).
const QuadratureSpec kInnerK{.radial_order = 16,
                             .angular_order = 48,
                             .hemi_phi_order = 1,
                             .hemi_psi_order = 1};
const QuadratureSpec kInnerR{.radial_order = 24,
                             .angular_order = 48,
                             .hemi_phi_order = 1,
                             .hemi_psi_order = 1};
const QuadratureSpec kTwoStep{.radial_order = 14,
                              .angular_order = 12,
                              .hemi_phi_order = 1,
                              .hemi_psi_order = 1};

const TruncationSpec kTr48{48, 1e-12};
// Deep truncation for kernels evaluated with both arguments on quadrature
// grids (arguments' modulus product up to ~34).
const TruncationSpec kDeep{120, 1e-8};

}  // namespace

TEST_CASE("column kernel series: hand anchors and conjugate symmetry") {
  Sampler rng(0x9e3779b97f4a7c15ull);

  // K_0(q, 0) = 1/pi: every term beyond m = 0 carries a positive power of 0.
  for (int trial = 0; trial < 5; ++trial) {
    const Quat q = rng.quaternion(1.2);
    const TruncatedKernel k0 = repkernel_Kn_series(0, q, Quat{0});
    CHECK(near(k0.value, Quat{1.0 / kPi}, 1e-15));
    CHECK(k0.tail_bound == 0.0);
    CHECK(k0.terms == 41);  // the sum always runs to max_m
  }

  // n = 0 collapses to the exponential of the commuting product on a slice.
  for (int trial = 0; trial < 10; ++trial) {
    const SlicePairSample s = sample_slice_pair(rng, 1.5);
    const Quat ref =
        from_slice(s.unit, std::exp(s.zq * std::conj(s.zp))) / kPi;
    CHECK(close_rel(repkernel_Kn_series(0, s.q, s.p).value, ref, 1e-12, 1e-12));
  }

  // Conjugate symmetry K_n(q, p) = conj(K_n(p, q)) for arbitrary quaternion
  // pairs (not restricted to a common slice).
  for (int n : {0, 1, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Quat q = rng.quaternion(0.9);
      const Quat p = rng.quaternion(0.9);
      const Quat a = repkernel_Kn_series(n, q, p).value;
      const Quat b = repkernel_Kn_series(n, p, q).value;
      CHECK(distance(a, conj(b)) <= 1e-12 * std::max(1.0, norm(a)));
    }
  }

  // The diagonal is real and positive: K_n(p, p) = sum |H_{m,n}(p)|^2 / (...).
  for (int n : {0, 2}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Quat p = rng.quaternion(1.0);
      const Quat d = repkernel_Kn_series(n, p, p).value;
      CHECK(d.w > 0.0);
      CHECK(std::abs(d.x) <= 1e-12 * d.w);
      CHECK(std::abs(d.y) <= 1e-12 * d.w);
      CHECK(std::abs(d.z) <= 1e-12 * d.w);
    }
  }
}

TEST_CASE("column kernel closed slice form matches the series and fixes the exponent") {
  Sampler rng(0xabcdef1234567891ull);

  for (int n : {0, 1, 2, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      const SlicePairSample s = sample_slice_pair(rng, 1.6);
      const Quat closed = repkernel_Kn_slice_closed(n, s.q, s.p);
      const Quat series = repkernel_Kn_series(n, s.q, s.p).value;
      CHECK_MESSAGE(close_rel(closed, series, 1e-10, 1e-12),
                    "n=" << n << " trial=" << trial);
    }
  }

  // Exponent adjudication: the variant exp(conj(zq) zp) does not reproduce
  // the series at a generic non-real pair, exp(zq conj(zp)) does.
  {
    const ImaginaryUnit<double> u = ImaginaryUnit<double>::from_vector(0.3, -0.5, 0.81);
    const std::complex<double> zq{0.8, 0.5}, zp{0.6, -0.9};
    const Quat q = from_slice(u, zq), p = from_slice(u, zp);
    for (int n : {0, 2}) {
      const double ell = laguerre(n, std::norm(zq - zp));
      const Quat right = from_slice(u, std::exp(zq * std::conj(zp)) * ell) / kPi;
      const Quat wrong = from_slice(u, std::exp(std::conj(zq) * zp) * ell) / kPi;
      const Quat series = repkernel_Kn_series(n, q, p).value;
      CHECK(close_rel(series, right, 1e-11, 1e-12));
      CHECK(distance(series, wrong) > 1e-3 * std::max(1.0, norm(series)));
    }
  }

  // L_1(1) = 0 makes K_1(1, 2) vanish on the real axis.
  CHECK(norm(repkernel_Kn_slice_closed(1, Quat{1.0}, Quat{2.0})) <= 1e-14);
  CHECK(norm(repkernel_Kn_series(1, Quat{1.0}, Quat{2.0}).value) <= 1e-12);

  // Coincident arguments: K_n(q, q) = e^{|q|^2} / pi for every n.
  for (int n : {0, 3}) {
    const Quat q = from_slice(rng.unit(), rng.complex_point(1.2));
    const Quat ref{std::exp(squared_norm(q)) / kPi};
    CHECK(close_rel(repkernel_Kn_slice_closed(n, q, q), ref, 1e-13, 1e-12));
  }

  // A real second argument shares a plane with any quaternion.
  {
    const Quat q = rng.quaternion(1.1);
    const Quat p{1.3};
    CHECK(close_rel(repkernel_Kn_slice_closed(2, q, p),
                    repkernel_Kn_series(2, q, p).value, 1e-10, 1e-12));
  }
}

TEST_CASE("column projection reproduces its column and annihilates the others") {
  Sampler rng(0x51a7b2c9d4e8f631ull);
  const Quat qa = from_slice(rng.unit(), {0.45, 0.35});
  const Quat qb = rng.quaternion(0.45);

  const std::vector<std::pair<int, int>> pairs = {
      {0, 0}, {0, 3}, {1, 1}, {1, 2}, {1, 6}, {2, 0}, {2, 2}};
  for (const auto& [n, m] : pairs) {
    const auto phi = [m = m, n = n](const Quat& p) {
      return phi_normalized(m, n, p);
    };
    for (const Quat& q : {qa, qb}) {
      const Quat got = project_Pn(phi, n, q, kProj, kTr48);
      CHECK_MESSAGE(close_rel(got, phi(q), 1e-7, 1e-3),
                    "reproduce n=" << n << " m=" << m);
    }
  }

  // Cross-column annihilation.
  const auto phi20 = [](const Quat& p) { return phi_normalized(2, 0, p); };
  const auto phi12 = [](const Quat& p) { return phi_normalized(1, 2, p); };
  CHECK(norm(project_Pn(phi20, 1, qa, kProj, kTr48)) <= 1e-7);
  CHECK(norm(project_Pn(phi12, 0, qa, kProj, kTr48)) <= 1e-7);
}

TEST_CASE("column projection is idempotent and orthogonal") {
  Sampler rng(0x7777aaaa3333cccdull);

  // A polynomial mixing columns 0, 1, and 2; its exact column-1 part is
  // H_{2,1}.
  const auto f = [](const Quat& p) {
    return hermite_fn(2, 1, p) + hermite_fn(0, 0, p) * 0.5 -
           hermite_fn(1, 2, p) * 0.3 + hermite_fn(1, 0, p) * 0.8;
  };
  const auto p1f = [&](const Quat& x) {
    return project_Pn(f, 1, x, kInnerK, kDeep);
  };

  const Quat q0 = from_slice(rng.unit(), {0.4, 0.3});
  const Quat once = p1f(q0);
  CHECK(close_rel(once, hermite_fn(2, 1, q0), 1e-6, 1e-6));

  // P_1(P_1 f)(q0) by an outer compact disc quadrature over the kernel.
  const Quat twice = disc_integral(
      [&](const Quat& p) {
        return repkernel_Kn_series(1, q0, p, kDeep).value * p1f(p);
      },
      5.0, 20, 12);
  CHECK(close_rel(twice, once, 1e-6, 1e-6));

  // <P_1 f, g - P_1 g> = 0 for another mixed polynomial g.
  const auto g = [](const Quat& p) {
    return hermite_fn(0, 1, p) * 0.7 - hermite_fn(2, 2, p) * 0.4 +
           hermite_fn(3, 0, p) * 0.6 + hermite_fn(1, 1, p) * 0.2;
  };
  const Quat ortho = disc_integral(
      [&](const Quat& p) {
        const Quat pg = project_Pn(g, 1, p, kInnerK, kDeep);
        return conj(project_Pn(f, 1, p, kInnerK, kDeep)) * (g(p) - pg);
      },
      5.0, 20, 12);
  CHECK(norm(ortho) <= 1e-6);
}

TEST_CASE("companion kernel series: origin anchors and a hand resummation") {
  Sampler rng(0x2468ace013579bdfull);

  // At p = 0 only the m = k-1 term survives (H_{k-1,m}(0) = 0 unless
  // m = k-1, where it equals (-1)^{k-1} (k-1)!), leaving
  // R_k(q, 0) = (-1)^{k-1} H_{k-1,k}(q) / (pi k!).
  for (int trial = 0; trial < 6; ++trial) {
    const Quat q = rng.quaternion(1.0);
    CHECK(close_rel(kernel_Rk_series(1, q, Quat{0}).value, conj(q) / kPi,
                    1e-14, 1e-14));
    CHECK(close_rel(kernel_Rk_series(2, q, Quat{0}).value,
                    hermite_fn(1, 2, q) * (-1.0 / (2.0 * kPi)), 1e-13, 1e-14));
    CHECK(close_rel(kernel_Rk_series(3, q, Quat{0}).value,
                    hermite_fn(2, 3, q) * (1.0 / (6.0 * kPi)), 1e-13, 1e-14));
  }

  // Hand resummation for k = 1 on a slice:
  //   R_1(q, p) = e^{-|p|^2} (conj(zq) - conj(zp)) e^{zq conj(zp)} / pi.
  for (int trial = 0; trial < 6; ++trial) {
    const SlicePairSample s = sample_slice_pair(rng, 1.5);
    const std::complex<double> core =
        (std::conj(s.zq) - std::conj(s.zp)) * std::exp(s.zq * std::conj(s.zp));
    const Quat ref =
        from_slice(s.unit, core) * (std::exp(-std::norm(s.zp)) / kPi);
    CHECK(close_rel(kernel_Rk_series(1, s.q, s.p).value, ref, 1e-11, 1e-13));
  }

  // Coincident arguments annihilate the closed form exactly and the series
  // to truncation accuracy.
  {
    const Quat q = from_slice(rng.unit(), {0.7, -0.5});
    CHECK(norm(kernel_Rk_slice_closed(2, q, q)) == 0.0);
    CHECK(norm(kernel_Rk_series(2, q, q).value) <= 1e-10);
  }
}

TEST_CASE("companion kernel closed slice form: index order and sign adjudication") {
  Sampler rng(0x0f1e2d3c4b5a6978ull);

  for (int k : {1, 2, 3}) {
    for (int trial = 0; trial < 8; ++trial) {
      const SlicePairSample s = sample_slice_pair(rng, 1.5);
      const Quat closed = kernel_Rk_slice_closed(k, s.q, s.p);
      const Quat series = kernel_Rk_series(k, s.q, s.p).value;
      CHECK_MESSAGE(close_rel(closed, series, 1e-9, 1e-12),
                    "k=" << k << " trial=" << trial);
    }
  }

  // Adjudication: on a generic slice pair the swapped index order
  // H_{k,k-1} and (for even k) the sign-free variant both fail against the
  // series, while the implemented form H_{k-1,k} with sign (-1)^{k-1}
  // matches.
  // zq - zp is kept away from |zq - zp|^2 = 2, where H_{2,1} and H_{1,2}
  // coincide and the k = 2 discriminator would degenerate.
  const ImaginaryUnit<double> u = ImaginaryUnit<double>::from_vector(-0.2, 0.9, 0.4);
  const std::complex<double> zq{0.7, 0.9}, zp{-0.5, -0.6};
  const Quat q = from_slice(u, zq), p = from_slice(u, zp);
  const std::complex<double> expo = std::exp(zq * std::conj(zp));
  const double damp = std::exp(-std::norm(zp));
  for (int k : {1, 2}) {
    const Quat series = kernel_Rk_series(k, q, p).value;
    const double scale = std::max(1.0, norm(series));
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    const Quat swapped =
        from_slice(u, expo * hermite_eval_slice(k, k - 1, zq - zp)) *
        (sign * damp / (kPi * factorial(k)));
    CHECK(distance(series, swapped) > 1e-2 * scale);
    if (k == 2) {
      const Quat unsigned_form =
          from_slice(u, expo * hermite_eval_slice(k - 1, k, zq - zp)) *
          (damp / (kPi * factorial(k)));
      CHECK(distance(series, unsigned_form) > 1e-2 * scale);
    }
  }
}

TEST_CASE("companion kernel composes the transform with the column projection") {
  Sampler rng(0xfedcba9876543211ull);
  const Quat q1 = from_slice(rng.unit(), {0.35, 0.45});
  const Quat q2 = rng.quaternion(0.4);

  const auto h21 = [](const Quat& p) { return hermite_fn(2, 1, p); };
  const auto h12 = [](const Quat& p) { return hermite_fn(1, 2, p); };

  // Closed targets: the transform sends H_{2,1} to -e^{-t} H_{1,1}, whose
  // column-1 component under the e^{-t}-weighted pairing is -H_{1,1}/4
  // (the pairing integral is pi int (t-1)^2 e^{-2t} dt = pi/4 against the
  // squared norm pi * 1! * 1!).  Likewise H_{1,2} maps to -e^{-t} H_{0,2},
  // and pi int t^2 e^{-2t} dt = pi/4 against pi * 0! * 2! gives -H_{0,2}/8.
  for (const Quat& q : {q1, q2}) {
    CHECK(close_rel(PkC_apply(h21, 1, q, kProj, kTr48),
                    hermite_fn(1, 1, q) * (-0.25), 1e-6, 1e-8));
  }
  CHECK(close_rel(PkC_apply(h12, 2, q1, kProj, kTr48),
                  hermite_fn(0, 2, q1) * (-0.125), 1e-6, 1e-8));

  // Independent two-step oracle: apply the singular integral transform
  // pointwise, then project numerically onto column 1.
  const Quat two_step = project_Pn(
      [&](const Quat& p) {
        return cauchy_slice_transform(h21, p, to_slice(p).unit);
      },
      1, q1, kTwoStep, kTr48);
  CHECK(close_rel(two_step, hermite_fn(1, 1, q1) * (-0.25), 1e-5, 1e-5));

  // Charge selection: the composed operator kills H_{0,2} in column 1
  // (the matching interior index would be negative).
  CHECK(norm(PkC_apply([](const Quat& p) { return hermite_fn(0, 2, p); }, 1,
                       q1, kProj, kTr48)) <= 1e-8);

  // The zero integrand maps to zero exactly.
  CHECK(norm(PkC_apply([](const Quat&) { return Quat{0}; }, 1, q1, kProj,
                       kTr48)) == 0.0);
}

TEST_CASE("composed operator maps weighted basis functions to the opposite column") {
  Sampler rng(0x13572468bdfa9e01ull);
  const Quat q = from_slice(rng.unit(), {0.5, 0.4});

  // psi_{k,n}(p) = -e^{-|p|^2} H_{n,k-1}(p) is the (normalized-free)
  // transform image of a basis element; the composed operator sends it to
  //   -( pi * I_{n,k} / (pi n! k!) ) H_{n,k}(q),
  // where I_{n,k} = integral_0^inf |H_{n,k-1}|^2(t) e^{-3t} dt.  The rational
  // anchors below are verified against the exact radial integral.
  struct Case {
    int k, n;
    double coef;  // -pi * I / (pi n! k!)
  };
  const std::vector<Case> cases = {
      {1, 1, -1.0 / 9.0}, {1, 2, -1.0 / 27.0}, {2, 1, -5.0 / 54.0}};

  for (const Case& c : cases) {
    // Exact radial cross-check of the rational coefficient.
    const double radial = radial_integral_exact(
        [&](double t) {
          const std::complex<double> h =
              hermite_eval_slice(c.n, c.k - 1, {std::sqrt(t), 0.0});
          return std::norm(h);
        },
        3.0);
    const double coef =
        -(kPi * radial) / (kPi * factorial(c.n) * factorial(c.k));
    CHECK(close_rel(coef, c.coef, 1e-12, 1e-12));

    const auto psi = [&](const Quat& p) {
      return hermite_fn(c.n, c.k - 1, p) * (-std::exp(-squared_norm(p)));
    };
    const Quat got = PkC_apply(psi, c.k, q, kProj, kTr48);
    const Quat ref = hermite_fn(c.n, c.k, q) * c.coef;
    CHECK_MESSAGE(close_rel(got, ref, 1e-5, 1e-8),
                  "k=" << c.k << " n=" << c.n);
  }
}

TEST_CASE("composed operator adjoint: closed action and adjointness pairing") {
  Sampler rng(0x8091a2b3c4d5e6f7ull);

  // Closed examples.
  for (int trial = 0; trial < 5; ++trial) {
    const Quat p = rng.quaternion(1.0);
    CHECK(near(PkC_adjoint_on_hermite(0, 1, 1, p),
               Quat{std::exp(-squared_norm(p))}, 1e-15));
    CHECK(norm(PkC_adjoint_on_hermite(1, 2, 1, p)) == 0.0);
    CHECK(near(PkC_adjoint_on_hermite(2, 1, 1, p),
               hermite_fn(2, 0, p) * std::exp(-squared_norm(p)), 1e-15));
  }

  // Numeric adjoint integral (1/A) integral conj(R_1(q', p)) H_{1,1}(q')
  // dmu(q') reproduces the closed action e^{-|p|^2} H_{1,0}(p).
  for (int trial = 0; trial < 2; ++trial) {
    const Quat p0 = rng.quaternion(0.45);
    const Quat adj = disc_integral(
        [&](const Quat& qq) {
          return conj(kernel_Rk_series(1, qq, p0, kTr48).value) *
                 hermite_fn(1, 1, qq);
        },
        5.0, 24, 16);
    const Quat ref = hermite_fn(1, 0, p0) * std::exp(-squared_norm(p0));
    CHECK(close_rel(adj, ref, 1e-7, 1e-9));
  }

  // Adjointness pairing: both sides equal -pi/4 for g = H_{1,1},
  // f = H_{2,1}, k = 1.
  const auto h21 = [](const Quat& p) { return hermite_fn(2, 1, p); };
  const Quat lhs = inner_product(
      [](const Quat& p) { return PkC_adjoint_on_hermite(1, 1, 1, p); }, h21,
      kProj);
  CHECK(close_rel(lhs.w, -kPi / 4.0, 1e-9, 1e-9));
  CHECK(std::abs(lhs.x) + std::abs(lhs.y) + std::abs(lhs.z) <= 1e-9);

  const Quat rhs = disc_integral(
      [&](const Quat& qq) {
        return conj(hermite_fn(1, 1, qq)) *
               PkC_apply(h21, 1, qq, kInnerR, kDeep);
      },
      5.0, 20, 12);
  CHECK(close_rel(rhs, Quat{-kPi / 4.0}, 1e-5, 1e-5));
}

TEST_CASE("normal-composition kernel: bridge identity, positivity, factorization") {
  Sampler rng(0x5a5a5a5a1b2c3d4full);

  // S_1(0, 0) = 1/pi.
  CHECK(near(kernel_Sk(1, Quat{0}, Quat{0}).value, Quat{1.0 / kPi}, 1e-15));

  // Bridge to the column kernel on a common slice:
  //   k e^{|p|^2 + |q|^2} S_k(p, q) = K_{k-1}(conj(q), conj(p)).
  // (Termwise: H_{m,k-1}(conj q) = H_{k-1,m}(q) and conj H_{m,k-1}(conj p)
  // = H_{m,k-1}(p), and slice factors commute.)
  for (int k : {1, 2, 3}) {
    for (int trial = 0; trial < 6; ++trial) {
      const SlicePairSample s = sample_slice_pair(rng, 1.7);
      const Quat lhs =
          kernel_Sk(k, s.p, s.q).value *
          (double(k) * std::exp(std::norm(s.zp) + std::norm(s.zq)));
      const Quat rhs =
          repkernel_Kn_series(k - 1, conj(s.q), conj(s.p)).value;
      CHECK_MESSAGE(close_rel(lhs, rhs, 1e-9, 1e-12), "k=" << k);
    }
  }

  // Diagonal positivity at arbitrary quaternion arguments (not restricted
  // to a slice pair): S_k(p, p) is a sum of squared moduli.
  for (int k : {1, 2}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Quat p = rng.quaternion(1.1);
      const Quat d = kernel_Sk(k, p, p).value;
      CHECK(d.w > 0.0);
      CHECK(std::abs(d.x) <= 1e-13 * d.w);
      CHECK(std::abs(d.y) <= 1e-13 * d.w);
      CHECK(std::abs(d.z) <= 1e-13 * d.w);
    }
  }

  // Factorization: the kernel route for (P_1 C)^*(P_1 C) H_{2,1} matches
  // the closed value -e^{-|p|^2} p / 4 and the honest two-step route.
  const auto h21 = [](const Quat& p) { return hermite_fn(2, 1, p); };
  const Quat p0 = rng.quaternion(0.4);
  const Quat closed = p0 * (-0.25 * std::exp(-squared_norm(p0)));

  const Quat s_route = disc_integral(
      [&](const Quat& qq) {
        return kernel_Sk(1, p0, qq, kTr48).value * h21(qq);
      },
      5.0, 24, 16);
  CHECK(close_rel(s_route, closed, 1e-6, 1e-8));

  const Quat two_step = disc_integral(
      [&](const Quat& qq) {
        return conj(kernel_Rk_series(1, qq, p0, kDeep).value) *
               PkC_apply(h21, 1, qq, kInnerR, kDeep);
      },
      5.0, 20, 12);
  CHECK(close_rel(two_step, closed, 1e-5, 1e-5));
}

TEST_CASE("projections of other columns annihilate the composed range") {
  Sampler rng(0xc001d00dfeedbeefull);
  const auto h21 = [](const Quat& p) { return hermite_fn(2, 1, p); };
  const Quat p1 = from_slice(rng.unit(), {0.3, 0.5});

  // Cache the inner composition on the outer grid once, then form both
  // cross-column projections P_0 and P_2 of it.
  const Rule1D rule = gauss_legendre_on(0.0, 5.0, 20);
  const Rule1D ang = uniform_angles(12);
  const ImaginaryUnit<double> cu = ImaginaryUnit<double>::canonical();
  Quat proj0{0}, proj2{0};
  for (std::size_t i = 0; i < rule.node.size(); ++i) {
    const double r = rule.node[i];
    const double wr = rule.weight[i] * r * std::exp(-r * r);
    for (std::size_t j = 0; j < ang.node.size(); ++j) {
      const Quat z = from_slice(cu, std::polar(r, ang.node[j]));
      const Quat inner = PkC_apply(h21, 1, z, kInnerR, kDeep);
      const double w = wr * ang.weight[j];
      proj0 += repkernel_Kn_series(0, p1, z, kTr48).value * inner * w;
      proj2 += repkernel_Kn_series(2, p1, z, kDeep).value * inner * w;
    }
  }
  CHECK(norm(proj0) <= 1e-6);
  CHECK(norm(proj2) <= 1e-6);
}

TEST_CASE("series truncation contract: recorded tails, doubling, failure") {
  const ImaginaryUnit<double> u = ImaginaryUnit<double>::canonical();
  const Quat q = from_slice(u, std::polar(1.4, 0.3));
  const Quat p = from_slice(u, std::polar(2.0, 0.5));

  const TruncatedKernel e1 = repkernel_Kn_series(1, q, p, {8, 1.0});
  const TruncatedKernel e2 = repkernel_Kn_series(1, q, p, {16, 1.0});
  const TruncatedKernel e3 = repkernel_Kn_series(1, q, p, {32, 1e-12});

  CHECK(e1.terms == 9);
  CHECK(e2.terms == 17);
  CHECK(e1.tail_bound > e2.tail_bound);
  CHECK(e2.tail_bound > e3.tail_bound);
  CHECK(e3.tail_bound >= 0.0);

  // The certified tail dominates the true truncation error and the observed
  // change under doubling max_m.
  CHECK(distance(e1.value, e3.value) <= e1.tail_bound);
  CHECK(distance(e2.value, e3.value) <= e2.tail_bound);
  CHECK(distance(e1.value, e2.value) <= e1.tail_bound);
  CHECK(distance(e2.value, e3.value) <= e2.tail_bound);

  // Same contract for the companion and normal-composition kernels.
  {
    const TruncatedKernel r1 = kernel_Rk_series(1, q, p, {6, 1.0});
    const TruncatedKernel r2 = kernel_Rk_series(1, q, p, {14, 1e-6});
    const TruncatedKernel r3 = kernel_Rk_series(1, q, p, {28, 1e-12});
    CHECK(r1.tail_bound > 0.0);
    CHECK(distance(r1.value, r2.value) <= r1.tail_bound);
    CHECK(distance(r2.value, r3.value) <= r2.tail_bound);

    const TruncatedKernel s1 = kernel_Sk(2, q, p, {6, 1.0});
    const TruncatedKernel s2 = kernel_Sk(2, q, p, {14, 1e-6});
    CHECK(s1.tail_bound > 0.0);
    CHECK(distance(s1.value, s2.value) <= s1.tail_bound);
  }

  // An uncertifiable truncation is an error, not a silent bad value.
  CHECK_THROWS_AS(repkernel_Kn_series(1, Quat{4.0}, Quat{3.9}, {10, 1e-12}),
                  std::runtime_error);
  CHECK_THROWS_AS(kernel_Rk_series(1, Quat{4.0}, Quat{3.9}, {8, 1e-12}),
                  std::runtime_error);

  // Truncation bounds out of range.
  CHECK_THROWS_AS(repkernel_Kn_series(0, q, p, {0, 1e-12}), std::domain_error);
  CHECK_THROWS_AS(repkernel_Kn_series(0, q, p, {130, 1e-12}),
                  std::domain_error);
}

TEST_CASE("kernel argument validation") {
  const Quat qi = from_slice(ImaginaryUnit<double>::from_vector(1, 0, 0),
                             {0.4, 0.7});
  const Quat pj = from_slice(ImaginaryUnit<double>::from_vector(0, 1, 0),
                             {0.3, 0.5});

  CHECK_THROWS_AS(repkernel_Kn_slice_closed(1, qi, pj), std::domain_error);
  CHECK_THROWS_AS(kernel_Rk_slice_closed(1, qi, pj), std::domain_error);

  CHECK_THROWS_AS(repkernel_Kn_series(-1, qi, qi), std::domain_error);
  CHECK_THROWS_AS(kernel_Rk_series(0, qi, qi), std::domain_error);
  CHECK_THROWS_AS(kernel_Rk_slice_closed(0, qi, qi), std::domain_error);
  CHECK_THROWS_AS(kernel_Sk(0, qi, qi), std::domain_error);
  CHECK_THROWS_AS(PkC_adjoint_on_hermite(1, 1, 0, qi), std::domain_error);
  CHECK_THROWS_AS(PkC_adjoint_on_hermite(-1, 1, 1, qi), std::domain_error);
  CHECK_THROWS_AS(PkC_adjoint_on_hermite(1, -1, 1, qi), std::domain_error);

  const auto one = [](const Quat&) { return Quat{1.0}; };
  CHECK_THROWS_AS(project_Pn(one, -1, qi, kProj, kTr48), std::domain_error);
  CHECK_THROWS_AS(PkC_apply(one, 0, qi, kProj, kTr48), std::domain_error);

  // Antiparallel units span the same plane: no error.
  const ImaginaryUnit<double> w = ImaginaryUnit<double>::from_vector(0.2, -0.7, 0.5);
  const Quat a = from_slice(w, {0.5, 0.8});
  const Quat b = from_slice(-w, {0.1, 0.6});
  CHECK(close_rel(repkernel_Kn_slice_closed(1, a, b),
                  repkernel_Kn_series(1, a, b).value, 1e-10, 1e-12));
}
