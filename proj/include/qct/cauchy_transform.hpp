#pragma once

// The weighted Cauchy kernel on the quaternions,
//
//   N(q, p) = (q^2 - 2 Re(p) q + |p|^2)^{-1} (q - conj p),
//
// its geometric series, and the weighted Cauchy transform
//
//   C f(q) = (1/pi) integral_H N(q, p) f(p) dmu(p),
//
// together with slice (fixed-direction) and dynamic-slice variants, closed
// forms of the action on monomials and on the Hermite basis, the numeric
// adjoint, and the |N|^r integrability estimate.
//
// On each slice plane the kernel has two point singularities with a
// simple-pole profile at Re(q) +- I |Im(q)|.  The quadrature decomposes the
// plane with polynomial bump windows around those points: inside a window,
// recentred polar coordinates cancel the pole against the Jacobian, and the
// leftover integrand (cut by one minus the windows) is smooth away from the
// poles.  The leftover is integrated on a single polar grid centred at the
// midpoint of the pole pair, so the window transitions keep a fixed angular
// scale on the grid no matter where q sits; its radial panels are
// Gauss-Legendre with edges pinned to the window tangency radii (plus a
// geometric ladder when the poles nearly merge), which keeps each panel
// integrand smooth, and the Gaussian weight ends the grid at a fixed reach.
// When |Im(q)| underflows the gap tolerance the two windows collapse into a
// single one around the real axis whose cut is purely radial.  Near every
// expansion centre the quadratic form q^2 - 2 Re(p) q + |p|^2 is evaluated
// from exact local offsets, which avoids the catastrophic cancellation the
// global coordinates would suffer.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qct/gauss_measure.hpp"
#include "qct/hermite_basis.hpp"
#include "qct/quaternion.hpp"
#include "qct/special_functions.hpp"

namespace qct {

// ---------------------------------------------------------------------------
// Kernel
// ---------------------------------------------------------------------------

inline Quat kernel_closed(const Quat& q, const Quat& p) {
  const Quat d = q * q - (2.0 * real_part(p)) * q + Quat{squared_norm(p)};
  const double den = squared_norm(d);
  if (den == 0.0)
    throw std::domain_error("kernel_closed: p lies on the singular sphere of q");
  return (conj(d) / den) * (q - conj(p));
}

struct KernelEvaluation {
  enum class Method { closed_form, series_exterior, series_interior };
  Quat value;
  int terms = 0;
  Method method = Method::closed_form;
};

// Geometric series for the kernel: -sum_l q^l p^{-1-l} when |q| < |p|
// (exterior branch), +sum_l q^{-1-l} p^l when |p| < |q| (interior branch).
// Terms are accumulated until the geometric tail bound drops below tol
// relative to the partial sum.
inline KernelEvaluation kernel_series(const Quat& q, const Quat& p,
                                      double tol = 1e-14, int max_terms = 8000) {
  const double rq = norm(q), rp = norm(p);
  if (rq == rp)
    throw std::domain_error("kernel_series: |q| = |p| gives a divergent series");
  KernelEvaluation out;
  const bool exterior = rq < rp;
  const double ratio = exterior ? rq / rp : rp / rq;
  const Quat step = exterior ? inverse(p) : inverse(q);
  Quat term = exterior ? -step : step;
  Quat sum{0};
  int count = 0;
  while (true) {
    sum += term;
    ++count;
    const double tail = norm(term) * ratio / (1.0 - ratio);
    if (tail <= tol * std::max(1e-300, norm(sum))) break;
    if (count >= max_terms)
      throw std::runtime_error("kernel_series: maximum term count exceeded");
    term = exterior ? q * term * step : step * term * p;
  }
  out.value = sum;
  out.terms = count;
  out.method = exterior ? KernelEvaluation::Method::series_exterior
                        : KernelEvaluation::Method::series_interior;
  return out;
}

// ---------------------------------------------------------------------------
// Windowed singular plane integration
// ---------------------------------------------------------------------------

namespace detail {

// C^7 polynomial cutoff: 1 on [0, 1/2], 0 on [0.95, inf).  The profile is
// the degree-15 smoothstep (regularized incomplete beta I(8,8)); it is a
// plain polynomial on the transition band, so radial panels split at the
// band edges integrate it exactly.
constexpr double kBumpFlat = 0.5;   // bump == 1 up to this fraction of rho
constexpr double kBumpEdge = 0.95;  // bump == 0 from this fraction of rho

inline double bump_window(double s) {
  if (s <= kBumpFlat) return 1.0;
  if (s >= kBumpEdge) return 0.0;
  const double u = (s - kBumpFlat) / (kBumpEdge - kBumpFlat);
  const double u2 = u * u;
  const double u4 = u2 * u2;
  const double poly =
      6435.0 +
      u * (-40040.0 +
           u * (108108.0 +
                u * (-163800.0 +
                     u * (150150.0 +
                          u * (-83160.0 + u * (25740.0 - u * 3432.0))))));
  return 1.0 - u4 * u4 * poly;
}

struct SingularScheme {
  int outer_radial = 20;    // Gauss-Legendre order per standard-grid panel
  int outer_angular = 192;  // baseline angular count of the standard grid
  int max_angular = 384;    // angular count cap after feature scaling
  int window_radial = 20;   // per radial panel inside a window disc
  int window_angular = 64;
  int subdisc_radial = 20;
  int subdisc_angular = 48;
  int axis_window_radial = 32;
  double big_gap = 0.35;       // gap regime threshold on |Im q|
  double tiny_gap = 1e-9;      // below this the two poles merge numerically
  double center_radius = 0.8;  // window radius of the on-axis regime
  double max_panel_width = 1.25;
  double reach = 9.0;  // standard grid extends this far beyond |Re q|
  int grading = 1;     // radial map r = R u^grading on the innermost panel
};

inline SingularScheme scheme_from(const QuadratureSpec& spec, int grading = 1) {
  SingularScheme s;
  s.outer_radial = std::max(12, spec.radial_order / 4);
  s.outer_angular = spec.angular_order;
  s.grading = grading;
  return s;
}

// One recentred polar window: integrates r * h * bump(r/rho) * gaussian over
// the disc of radius 0.95*rho around (cx, cy).  The radial integration is
// split at the bump breakpoint; on the innermost panel the graded map
// r = R u^k (k > 1) tames the fractional-power profiles of the |N|^r
// estimate, while k = 1 is the plain affine map.
template <typename H>
Quat window_disc_integral(H&& h, double cx, double cy, int center_tag,
                          double rho, int radial, int angular, int grading) {
  const Rule1D ang = uniform_angles(angular);
  Quat sum{0};

  const double flat_r = kBumpFlat * rho;
  const Rule1D& unit = gauss_legendre_on(0.0, 1.0, radial);
  for (int i = 0; i < radial; ++i) {
    const double u = unit.node[i];
    const double r = flat_r * std::pow(u, grading);
    const double jac = flat_r * grading * std::pow(u, grading - 1);
    Quat ring{0};
    for (int j = 0; j < angular; ++j) {
      const double dx = r * std::cos(ang.node[j]);
      const double dy = r * std::sin(ang.node[j]);
      const double x = cx + dx, y = cy + dy;
      ring += h(x, y, dx, dy, center_tag) * std::exp(-(x * x + y * y));
    }
    sum += ring * (unit.weight[i] * jac * r * ang.weight[0]);
  }

  const Rule1D band = gauss_legendre_on(flat_r, kBumpEdge * rho, radial);
  for (int i = 0; i < radial; ++i) {
    const double r = band.node[i];
    Quat ring{0};
    for (int j = 0; j < angular; ++j) {
      const double dx = r * std::cos(ang.node[j]);
      const double dy = r * std::sin(ang.node[j]);
      const double x = cx + dx, y = cy + dy;
      ring += h(x, y, dx, dy, center_tag) * std::exp(-(x * x + y * y));
    }
    sum += ring * (band.weight[i] * r * ang.weight[0] * bump_window(r / rho));
  }
  return sum;
}

// Sorted, deduplicated radial panel edges on [0, cut], split so no panel is
// wider than cap.
inline std::vector<double> radial_edges(std::vector<double> marks, double cut,
                                        double cap) {
  std::vector<double> edges{0.0, cut};
  for (double m : marks)
    if (m > 1e-12 && m < cut - 1e-12) edges.push_back(m);
  std::sort(edges.begin(), edges.end());
  std::vector<double> out{edges.front()};
  for (double e : edges)
    if (e - out.back() > 1e-12) out.push_back(e);
  std::vector<double> split{out.front()};
  for (std::size_t i = 1; i < out.size(); ++i) {
    const double a = out[i - 1], b = out[i];
    const int pieces = std::max(1, int(std::ceil((b - a) / cap)));
    for (int k = 1; k <= pieces; ++k)
      split.push_back(a + (b - a) * double(k) / pieces);
  }
  return split;
}

// integral over the plane of h(x,y) e^{-(x^2+y^2)} dx dy, where h carries a
// simple-pole pair at (xc, +-yc).  The callback receives global coordinates
// plus exact local offsets and a tag telling which expansion point the
// offsets refer to: +1/-1 the upper/lower pole, 2 the midpoint (xc, 0);
// every callback recipe is exact algebra, so tag 2 is valid at any distance.
//
// Layout: a window disc in recentred polar coordinates around each pole
// (around the midpoint when the poles merge), then one standard polar grid
// centred at the midpoint (xc, 0) covering the rest of the plane.  Keeping
// the standard grid concentric with the pole pair makes the angular scale of
// the window transitions a fixed fraction of the circumference regardless of
// where q sits, and its radial panels are pinned to the window tangency
// radii, so each panel integrand is smooth.
template <typename H>
Quat singular_plane_integral(H&& h, double xc, double yc,
                             const SingularScheme& s) {
  Quat sum{0};

  std::vector<double> marks;
  double mask_rho = 0.0;  // twin window radius (regimes A and B)
  double axis_rho = 0.0;  // single-window radius (regime C)
  int angular = s.outer_angular;

  if (yc > s.tiny_gap) {
    // Twin windows around the poles: full-size discs when the poles are well
    // separated (regime A), small sub-discs nested inside the near-axis
    // structure when they are close (regime B).
    const bool wide = yc >= s.big_gap;
    const double rho = wide ? std::min(0.7, 0.9 * yc) : 0.9 * yc;
    const int radial = wide ? s.window_radial : s.subdisc_radial;
    const int ang = wide ? s.window_angular : s.subdisc_angular;
    sum += window_disc_integral(h, xc, +yc, +1, rho, radial, ang, s.grading);
    sum += window_disc_integral(h, xc, -yc, -1, rho, radial, ang, s.grading);
    mask_rho = rho;
    for (double m : {yc - kBumpEdge * rho, yc - kBumpFlat * rho,
                     yc + kBumpFlat * rho, yc + kBumpEdge * rho})
      marks.push_back(m);
    // Geometric ladder above the window band: the kernel magnitude decays
    // like 1/r with structure at every scale between yc and order one.
    double g = yc + kBumpEdge * rho;
    while (g < 1.0) {
      g *= 3.0;
      marks.push_back(g);
    }
    // Enough angular nodes that a window transition spans several of them on
    // the circle through the poles.
    const double feature = (kBumpEdge - kBumpFlat) * rho;
    const int need = int(std::ceil(16.0 * kPi * yc / feature));
    angular = std::min(s.max_angular, std::max(s.outer_angular, need));
  } else {
    // Regime C: the poles sit (numerically) on the real axis; a single
    // recentred window absorbs them, the r Jacobian cancels the pole, and
    // the residual split-pole error is O(yc log yc).
    axis_rho = s.center_radius;
    sum += window_disc_integral(h, xc, 0.0, 2, axis_rho, s.axis_window_radial,
                                s.window_angular, s.grading);
    marks = {kBumpFlat * axis_rho, kBumpEdge * axis_rho};
  }

  const double cut = std::fabs(xc) + s.reach;
  const std::vector<double> edges =
      radial_edges(marks, cut, s.max_panel_width);
  const Rule1D ang = uniform_angles(angular);
  for (std::size_t e = 0; e + 1 < edges.size(); ++e) {
    const Rule1D rad = gauss_legendre_on(edges[e], edges[e + 1], s.outer_radial);
    for (int i = 0; i < s.outer_radial; ++i) {
      const double r = rad.node[i];
      Quat ring{0};
      for (int j = 0; j < angular; ++j) {
        const double dx = r * std::cos(ang.node[j]);
        const double dy = r * std::sin(ang.node[j]);
        double mask;
        if (mask_rho > 0.0) {
          mask = 1.0 - bump_window(std::hypot(dx, dy - yc) / mask_rho) -
                 bump_window(std::hypot(dx, dy + yc) / mask_rho);
        } else {
          mask = 1.0 - bump_window(r / axis_rho);
        }
        if (mask <= 0.0) continue;
        const double x = xc + dx, y = dy;
        ring += h(x, y, dx, dy, 2) * (mask * std::exp(-(x * x + y * y)));
      }
      sum += ring * (rad.weight[i] * r * ang.weight[0]);
    }
  }
  return sum;
}

// Kernel-times-f integrand of the forward transform on the slice C_I, with
// the quadratic form assembled from exact local offsets near the poles.
template <typename F>
auto transform_integrand(F&& f, const Quat& q, const ImaginaryUnit<double>& unit) {
  const SlicePoint<double> sq = to_slice(q);
  const double xq = sq.z.real(), yq = sq.z.imag();
  const Quat axis_q = sq.unit.as_quaternion();
  return [f = std::forward<F>(f), q, unit, xq, yq, axis_q](
             double x, double y, double dx, double dy, int center) -> Quat {
    double u, v;
    switch (center) {
      case +1:
        u = dx * dx + dy * dy + 2.0 * yq * dy;
        v = -2.0 * yq * dx;
        break;
      case -1:
        u = dx * dx + dy * dy - 2.0 * yq * dy;
        v = -2.0 * yq * dx;
        break;
      case 2:
        u = dx * dx + dy * dy - yq * yq;
        v = -2.0 * yq * dx;
        break;
      default: {
        const double ex = xq - x;
        u = ex * ex + y * y - yq * yq;
        v = 2.0 * yq * ex;
      }
    }
    const double den = u * u + v * v;
    if (den == 0.0) return Quat{0};  // direct pole hit: measure-zero drop
    const Quat p = from_slice(unit, std::complex<double>(x, y));
    const Quat dinv = (Quat{u} - v * axis_q) / den;
    return dinv * (q - conj(p)) * f(p);
  };
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Transforms
// ---------------------------------------------------------------------------

// Fixed-slice transform C^I f(q) = (1/pi) integral_{C_I} N(q,p) f(p) dmu_I(p).
template <typename F>
Quat cauchy_slice_transform(F&& f, const Quat& q, const ImaginaryUnit<double>& unit,
                            const QuadratureSpec& spec = {}) {
  const SlicePoint<double> sq = to_slice(q);
  const auto integrand = detail::transform_integrand(f, q, unit);
  const Quat raw = detail::singular_plane_integral(
      integrand, sq.z.real(), sq.z.imag(), detail::scheme_from(spec));
  return raw / kPi;
}

// Full transform: half-sphere combination of the slice transforms,
// C f(q) = (1/pi) integral_H N(q,p) f(p) dmu(p).
template <typename F>
Quat cauchy_transform_numeric(F&& f, const Quat& q,
                              const QuadratureSpec& spec = {}) {
  const HemisphereRule hemi = hemisphere_rule(spec);
  Quat sum{0};
  for (std::size_t s = 0; s < hemi.unit.size(); ++s)
    sum += cauchy_slice_transform(f, q, hemi.unit[s], spec) * hemi.weight[s];
  return sum;
}

// Dynamic-slice transform: the slice through q itself when q is not real;
// for real q = x the one-dimensional Gaussian principal value
//   (1/pi) pv integral_R f(t) (t - x)^{-1} e^{-t^2} dt,
// evaluated by symmetric Gauss-Hermite quadrature (the odd pole part cancels
// pairwise across the symmetric nodes, which is exactly the principal value).
template <typename F>
Quat cauchy_dynamic_slice_transform(F&& f, const Quat& q,
                                    const QuadratureSpec& spec = {}) {
  const SlicePoint<double> sq = to_slice(q);
  if (sq.z.imag() > 1e-12) {
    return cauchy_slice_transform(f, q, sq.unit, spec);
  }
  const double x = real_part(q);
  const Rule1D& rule = gauss_hermite(96);
  Quat sum{0};
  for (std::size_t i = 0; i < rule.node.size(); ++i) {
    const double u = rule.node[i];
    sum += f(Quat{x + u}) * (rule.weight[i] * std::exp(-2.0 * x * u) / u);
  }
  return sum * (std::exp(-x * x) / kPi);
}

// Closed-form action on the two-sided monomials e_{m,n} = q^m conj(q)^n:
//   C(e_{m,n}) = -A (q^m H_{-1,n} e^{-|q|^2} + n! [m-n-1 >= 0] q^{m-n-1}).
inline Quat cauchy_on_monomial(int m, int n, const Quat& q,
                               double area_normalization = 1.0) {
  if (m < 0 || n < 0)
    throw std::domain_error("cauchy_on_monomial: negative exponent");
  const double t = squared_norm(q);
  Quat value = pow_int(q, m) * hermite_hypergeometric(-1, n, q) * std::exp(-t);
  if (m - n - 1 >= 0) value += factorial(n) * pow_int(q, m - n - 1);
  return value * (-area_normalization);
}

// Closed-form action on the Hermite family:
//   C(H_{m,n}) = -A e^{-|q|^2} H_{m-1,n},
// the m = 0 case going through the extended index H_{-1,n}.
inline Quat cauchy_on_hermite(int m, int n, const Quat& q,
                              double area_normalization = 1.0) {
  if (m < 0 || n < 0)
    throw std::domain_error("cauchy_on_hermite: negative index");
  const double damp = std::exp(-squared_norm(q));
  const Quat h = (m == 0) ? hermite_hypergeometric(-1, n, q)
                          : hermite_explicit(m - 1, n, q);
  return h * (-area_normalization * damp);
}

// Numeric adjoint: C* g(p) = (1/pi) integral_H conj(N(q,p)) g(q) dmu(q); the
// integration runs over q, whose slice planes carry poles at (Re p, +-|Im p|).
template <typename G>
Quat cauchy_adjoint_numeric(G&& g, const Quat& p,
                            const QuadratureSpec& spec = {}) {
  const SlicePoint<double> sp = to_slice(p);
  const double xp = sp.z.real(), yp = sp.z.imag();
  const Quat p_conj = conj(p);
  const HemisphereRule hemi = hemisphere_rule(spec);
  Quat sum{0};
  for (std::size_t s = 0; s < hemi.unit.size(); ++s) {
    const ImaginaryUnit<double> unit = hemi.unit[s];
    const Quat axis = unit.as_quaternion();
    auto integrand = [&](double x, double y, double dx, double dy,
                         int center) -> Quat {
      double u, v;
      switch (center) {
        case +1:
          u = dx * dx - dy * dy - 2.0 * yp * dy;
          v = 2.0 * (yp + dy) * dx;
          break;
        case -1:
          u = dx * dx - dy * dy + 2.0 * yp * dy;
          v = 2.0 * (-yp + dy) * dx;
          break;
        case 2:
          u = dx * dx - dy * dy + yp * yp;
          v = 2.0 * dy * dx;
          break;
        default: {
          const double ex = x - xp;
          u = ex * ex + yp * yp - y * y;
          v = 2.0 * y * ex;
        }
      }
      const double den = u * u + v * v;
      if (den == 0.0) return Quat{0};
      const Quat qn = from_slice(unit, std::complex<double>(x, y));
      const Quat dinv = (Quat{u} - v * axis) / den;
      return conj(dinv * (qn - p_conj)) * g(qn);
    };
    sum += detail::singular_plane_integral(integrand, xp, yp,
                                           detail::scheme_from(spec)) *
           hemi.weight[s];
  }
  return sum / kPi;
}

// sup over the sample points of integral_H |N(q,p)|^r dmu(p) (raw measure,
// no 1/pi).  The windowed scheme runs with a graded radial map so that the
// fractional-power profile r_local^{1-r} is integrated accurately.
inline double kernel_lr_estimate(double r, const std::vector<Quat>& q_samples,
                                 const QuadratureSpec& spec = {}) {
  if (r < 0.0 || r >= 2.0)
    throw std::domain_error("kernel_lr_estimate: exponent must lie in [0, 2)");
  const int grading = std::max(1, int(std::ceil(3.0 / (2.0 - r))));
  const HemisphereRule hemi = hemisphere_rule(spec);
  double worst = 0.0;
  for (const Quat& q : q_samples) {
    const SlicePoint<double> sq = to_slice(q);
    const double xq = sq.z.real(), yq = sq.z.imag();
    Quat total{0};
    for (std::size_t s = 0; s < hemi.unit.size(); ++s) {
      const ImaginaryUnit<double> unit = hemi.unit[s];
      auto integrand = [&](double x, double y, double dx, double dy,
                           int center) -> Quat {
        double u, v;
        switch (center) {
          case +1:
            u = dx * dx + dy * dy + 2.0 * yq * dy;
            v = -2.0 * yq * dx;
            break;
          case -1:
            u = dx * dx + dy * dy - 2.0 * yq * dy;
            v = -2.0 * yq * dx;
            break;
          case 2:
            u = dx * dx + dy * dy - yq * yq;
            v = -2.0 * yq * dx;
            break;
          default: {
            const double ex = xq - x;
            u = ex * ex + y * y - yq * yq;
            v = 2.0 * yq * ex;
          }
        }
        const double den = u * u + v * v;
        if (den == 0.0) return Quat{0};
        const Quat p = from_slice(unit, std::complex<double>(x, y));
        const double num = squared_norm(q - conj(p));
        return Quat{std::pow(num / den, 0.5 * r)};
      };
      total += detail::singular_plane_integral(
                   integrand, xq, yq, detail::scheme_from(spec, grading)) *
               hemi.weight[s];
    }
    worst = std::max(worst, total.w);
  }
  return worst;
}

}  // namespace qct
