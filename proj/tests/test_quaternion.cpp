#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "qct/quaternion.hpp"
#include "test_support.hpp"

using namespace qct;
using testing::near;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("Hamilton multiplication table") {
  const Quat one{1}, i = Quat::unit_i(), j = Quat::unit_j(), k = Quat::unit_k();

  CHECK(i * i == -one);
  CHECK(j * j == -one);
  CHECK(k * k == -one);
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * j * k == -one);
}

TEST_CASE("norm, conjugate, inverse") {
  const Quat q{1, 2, 3, 4};
  CHECK(squared_norm(q) == 30.0);
  // q * conj(q) is the real number |q|^2.
  CHECK(q * conj(q) == Quat{30});
  CHECK(conj(q) * q == Quat{30});
  CHECK(near(q * inverse(q), Quat{1}, 1e-15));
  CHECK(near(inverse(q) * q, Quat{1}, 1e-15));
  CHECK(real_part(q) == 1.0);
  CHECK(near(imaginary_norm(q), std::sqrt(29.0), 1e-15));
}

TEST_CASE("multiplicativity of the norm") {
  testing::Sampler rng(11);
  for (int t = 0; t < 50; ++t) {
    const Quat a = rng.quaternion(2.0), b = rng.quaternion(2.0);
    CHECK(near(norm(a * b), norm(a) * norm(b), 1e-13 * (1 + norm(a) * norm(b))));
    // conj is an anti-automorphism.
    CHECK(near(conj(a * b), conj(b) * conj(a), 1e-13));
  }
}

TEST_CASE("integer powers") {
  const Quat q{0.3, -0.7, 0.2, 0.9};
  Quat acc{1};
  for (int n = 0; n <= 9; ++n) {
    CHECK(near(pow_int(q, n), acc, 1e-13 * (1 + norm(acc))));
    acc = acc * q;
  }
  CHECK(near(pow_int(q, -3) * pow_int(q, 3), Quat{1}, 1e-12));
}

TEST_CASE("canonical imaginary unit is k") {
  const auto c = ImaginaryUnit<double>::canonical();
  CHECK(c.as_quaternion() == Quat::unit_k());
  const auto u = ImaginaryUnit<double>::from_angles(kPi / 2, kPi / 2);
  CHECK(near(u.as_quaternion(), Quat::unit_k(), 1e-15));
}

TEST_CASE("angle parametrization round-trips") {
  testing::Sampler rng(12);
  for (int t = 0; t < 50; ++t) {
    const double phi = rng.uniform(0.05, kPi - 0.05);
    const double psi = rng.uniform(0.05, kPi - 0.05);
    const auto u = ImaginaryUnit<double>::from_angles(phi, psi);
    CHECK(near(norm(u.as_quaternion()), 1.0, 1e-15));
    CHECK(near(u.phi(), phi, 1e-13));
    CHECK(near(u.psi(), psi, 1e-13));
    // I^2 = -1 for every unit.
    CHECK(near(u.as_quaternion() * u.as_quaternion(), -Quat{1}, 1e-15));
  }
}

TEST_CASE("slice decomposition round-trips") {
  testing::Sampler rng(13);
  for (int t = 0; t < 100; ++t) {
    const Quat q = rng.quaternion(3.0);
    const auto s = to_slice(q);
    CHECK(s.z.imag() >= 0.0);
    CHECK(near(from_slice(s.unit, s.z), q, 1e-14 * (1 + norm(q))));
    // The slice square matches the complex square transported back.
    CHECK(near(q * q, from_slice(s.unit, s.z * s.z), 1e-12 * (1 + squared_norm(q))));
  }
}

TEST_CASE("real quaternions take the canonical unit") {
  const auto s = to_slice(Quat{-2.5});
  CHECK(s.unit == ImaginaryUnit<double>::canonical());
  CHECK(s.z == std::complex<double>(-2.5, 0.0));
}

TEST_CASE("polar form round-trips with theta in [0, pi]") {
  testing::Sampler rng(14);
  for (int t = 0; t < 100; ++t) {
    const Quat q = rng.quaternion(3.0);
    if (norm(q) < 1e-6) continue;
    const auto p = to_polar(q);
    CHECK(p.r >= 0.0);
    CHECK(p.theta >= 0.0);
    CHECK(p.theta <= kPi);
    CHECK(near(from_polar(p), q, 1e-13 * (1 + norm(q))));
    CHECK(near(norm(q), p.r, 1e-13 * (1 + norm(q))));
  }
}

TEST_CASE("slice exponential and projection") {
  const auto u = ImaginaryUnit<double>::from_vector(1.0, -2.0, 2.0);
  const Quat e = slice_exponential(u, 0.75);
  CHECK(near(norm(e), 1.0, 1e-15));
  CHECK(near(real_part(e), std::cos(0.75), 1e-15));

  const Quat q = from_slice(u, {0.4, 1.3});
  CHECK(lies_in_slice(q, u));
  CHECK(near(project_to_slice(q, u), std::complex<double>(0.4, 1.3), 1e-14));
  CHECK(!lies_in_slice(Quat{0, 1, 0, 0}, ImaginaryUnit<double>::canonical()));
}

TEST_CASE("same-slice points commute") {
  testing::Sampler rng(15);
  for (int t = 0; t < 30; ++t) {
    const auto u = rng.unit();
    const Quat a = from_slice(u, rng.complex_point(2.0));
    const Quat b = from_slice(u, rng.complex_point(2.0));
    CHECK(near(a * b, b * a, 1e-13));
  }
}
