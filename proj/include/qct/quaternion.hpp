#pragma once

// Real quaternions q = w + x i + y j + z k with Hamilton's product, together
// with the slice decomposition q = re(q) + I_q * |im(q)| used throughout the
// library: every quaternion lives in a complex plane C_I spanned by 1 and a
// purely imaginary unit I, and functions of a complex variable transfer to
// each slice verbatim.

#include <cmath>
#include <complex>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace qct {

template <typename S = double>
struct Quaternion {
  S w{0}, x{0}, y{0}, z{0};

  constexpr Quaternion() = default;
  constexpr Quaternion(S w_, S x_, S y_, S z_) : w(w_), x(x_), y(y_), z(z_) {}
  // Real embedding.
  constexpr explicit Quaternion(S w_) : w(w_) {}

  static constexpr Quaternion unit_i() { return {S(0), S(1), S(0), S(0)}; }
  static constexpr Quaternion unit_j() { return {S(0), S(0), S(1), S(0)}; }
  static constexpr Quaternion unit_k() { return {S(0), S(0), S(0), S(1)}; }

  constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

  constexpr Quaternion& operator+=(const Quaternion& r) {
    w += r.w; x += r.x; y += r.y; z += r.z; return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& r) {
    w -= r.w; x -= r.x; y -= r.y; z -= r.z; return *this;
  }
  constexpr Quaternion& operator*=(S s) {
    w *= s; x *= s; y *= s; z *= s; return *this;
  }
  constexpr Quaternion& operator/=(S s) { return (*this) *= (S(1) / s); }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, S s) { return a *= s; }
  friend constexpr Quaternion operator*(S s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, S s) { return a /= s; }

  // Hamilton product (noncommutative).
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

template <typename S>
constexpr Quaternion<S> conj(const Quaternion<S>& q) {
  return {q.w, -q.x, -q.y, -q.z};
}

template <typename S>
constexpr S squared_norm(const Quaternion<S>& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

template <typename S>
S norm(const Quaternion<S>& q) {
  return std::sqrt(squared_norm(q));
}

template <typename S>
constexpr S real_part(const Quaternion<S>& q) { return q.w; }

// Euclidean length of the imaginary (vector) part.
template <typename S>
S imaginary_norm(const Quaternion<S>& q) {
  return std::hypot(q.x, q.y, q.z);
}

template <typename S>
constexpr Quaternion<S> inverse(const Quaternion<S>& q) {
  const S n2 = squared_norm(q);
  return conj(q) / n2;
}

// Integer power by binary exponentiation; negative exponents via the inverse.
template <typename S>
Quaternion<S> pow_int(Quaternion<S> q, long long n) {
  if (n < 0) {
    q = inverse(q);
    n = -n;
  }
  Quaternion<S> acc{S(1)};
  while (n > 0) {
    if (n & 1) acc = acc * q;
    q = q * q;
    n >>= 1;
  }
  return acc;
}

template <typename S>
S distance(const Quaternion<S>& a, const Quaternion<S>& b) {
  return norm(a - b);
}

// ---------------------------------------------------------------------------
// Purely imaginary unit quaternions (the sphere of slice directions).
//
// The unit axis components are the primary data, so that to_slice/from_slice
// round-trips are exact to the quaternion components.  Spherical angles
//   I(phi, psi) = cos(phi) i + sin(phi) cos(psi) j + sin(phi) sin(psi) k,
// phi in [0, pi], psi in [0, pi] for the canonical half-sphere, are derived
// on demand and exposed for quadrature parametrization.
// ---------------------------------------------------------------------------

template <typename S = double>
struct ImaginaryUnit {
  S vx{0}, vy{0}, vz{1};  // components along i, j, k; unit length

  constexpr ImaginaryUnit() = default;

  static ImaginaryUnit from_vector(S vx_, S vy_, S vz_) {
    const S n = std::hypot(vx_, vy_, vz_);
    if (!(n > S(0)))
      throw std::domain_error("ImaginaryUnit::from_vector: zero axis");
    ImaginaryUnit u;
    u.vx = vx_ / n; u.vy = vy_ / n; u.vz = vz_ / n;
    return u;
  }

  static ImaginaryUnit from_angles(S phi, S psi) {
    ImaginaryUnit u;
    const S sp = std::sin(phi);
    u.vx = std::cos(phi);
    u.vy = sp * std::cos(psi);
    u.vz = sp * std::sin(psi);
    return u;
  }

  // I(pi/2, pi/2) = k.
  static constexpr ImaginaryUnit canonical() { return ImaginaryUnit{}; }

  S phi() const { return std::atan2(std::hypot(vy, vz), vx); }
  S psi() const { return std::atan2(vz, vy); }

  constexpr Quaternion<S> as_quaternion() const { return {S(0), vx, vy, vz}; }

  constexpr ImaginaryUnit operator-() const {
    ImaginaryUnit u;
    u.vx = -vx; u.vy = -vy; u.vz = -vz;
    return u;
  }

  friend constexpr bool operator==(const ImaginaryUnit& a, const ImaginaryUnit& b) {
    return a.vx == b.vx && a.vy == b.vy && a.vz == b.vz;
  }
};

// A point of the slice plane C_I: q = re(z) + I * im(z), with im(z) >= 0 when
// produced by to_slice.
template <typename S = double>
struct SlicePoint {
  ImaginaryUnit<S> unit;
  std::complex<S> z;
};

template <typename S>
Quaternion<S> from_slice(const ImaginaryUnit<S>& unit, const std::complex<S>& z) {
  const S a = z.real(), b = z.imag();
  return {a, b * unit.vx, b * unit.vy, b * unit.vz};
}

// Slice decomposition q = x + I y, y = |im(q)| >= 0.  A real quaternion has
// y = 0 and is assigned the canonical unit.
template <typename S>
SlicePoint<S> to_slice(const Quaternion<S>& q) {
  const S y = imaginary_norm(q);
  SlicePoint<S> s;
  s.z = std::complex<S>(q.w, y);
  if (y > S(0)) {
    s.unit.vx = q.x / y; s.unit.vy = q.y / y; s.unit.vz = q.z / y;
  } else {
    s.unit = ImaginaryUnit<S>::canonical();
  }
  return s;
}

// Polar form q = r * (cos(theta) + I sin(theta)), r >= 0, theta in [0, pi].
template <typename S = double>
struct PolarForm {
  S r{0};
  S theta{0};
  ImaginaryUnit<S> unit;
};

template <typename S>
PolarForm<S> to_polar(const Quaternion<S>& q) {
  const SlicePoint<S> s = to_slice(q);
  PolarForm<S> p;
  p.r = std::abs(s.z);
  p.theta = std::atan2(s.z.imag(), s.z.real());
  p.unit = s.unit;
  return p;
}

template <typename S>
Quaternion<S> from_polar(const PolarForm<S>& p) {
  return from_slice(p.unit,
                    std::complex<S>(p.r * std::cos(p.theta), p.r * std::sin(p.theta)));
}

// exp(I * theta) as a quaternion on the slice of I.
template <typename S>
Quaternion<S> slice_exponential(const ImaginaryUnit<S>& unit, S theta) {
  return from_slice(unit, std::polar(S(1), theta));
}

// Orthogonal projection of q onto the plane C_I: x + I * (im(q) . I).
template <typename S>
std::complex<S> project_to_slice(const Quaternion<S>& q, const ImaginaryUnit<S>& unit) {
  return {q.w, q.x * unit.vx + q.y * unit.vy + q.z * unit.vz};
}

// True when q lies in C_I up to |q|-relative tolerance.
template <typename S>
bool lies_in_slice(const Quaternion<S>& q, const ImaginaryUnit<S>& unit,
                   S tol = S(1e-12)) {
  const Quaternion<S> back = from_slice(unit, project_to_slice(q, unit));
  return distance(q, back) <= tol * std::max(S(1), norm(q));
}

using Quat = Quaternion<double>;

}  // namespace qct
