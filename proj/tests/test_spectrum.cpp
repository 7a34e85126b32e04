#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "reference.hpp"
#include "ucnrot/airy.hpp"
#include "ucnrot/constants.hpp"
#include "ucnrot/spectrum.hpp"

using namespace ucnrot;

namespace {

const PhysicalConstants kCodata = default_constants(Profile::codata);
const ReducedScales kScales = reduced_scales(kCodata);

// Composite Simpson with Bessel-function Ai, independent of the library.
double bessel_moment(double lambda, int power) {
  const double b = lambda + 15.0;
  const int n = 20000;
  const double h = b / n;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double xi = i * h;
    const double v = ref::ai_bessel(xi - lambda);
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * std::pow(xi, power) * v * v;
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("ground state energy near 1.4 peV") {
  const auto g = level(1, kScales, kCodata);
  CHECK(joules_to_peV(g.E) == doctest::Approx(1.4069).epsilon(1e-4));
  CHECK(std::fabs(joules_to_peV(g.E) / 1.4 - 1.0) < 0.02);
  CHECK(g.lambda == doctest::Approx(ref::kZeros[0]).epsilon(4e-16));
}

TEST_CASE("tabulated levels 6 and 7") {
  const auto l6 = level(6, kScales, kCodata);
  const auto l7 = level(7, kScales, kCodata);
  CHECK(l7.E / l6.E == doctest::Approx(6.044 / 5.431).epsilon(1e-3));
  CHECK(joules_to_peV(l7.E) == doctest::Approx(6.044).epsilon(0.02));
  CHECK(l7.H == doctest::Approx(58.945e-6).epsilon(0.005));
}

TEST_CASE("property: E = m g H and <z> = 2H/3 for every level") {
  for (long n = 1; n <= 60; n += 7) {
    CAPTURE(n);
    const auto b = level(n, kScales, kCodata);
    CHECK(b.E / (kCodata.m_neutron * kCodata.g * b.H) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.z_avg == doctest::Approx(2.0 / 3.0 * b.H).epsilon(1e-15));
    CHECK(mean_height_analytic(b) == doctest::Approx(b.z_avg).epsilon(1e-15));
    CHECK(b.length_scale() == doctest::Approx(kScales.l).epsilon(1e-15));
    CHECK(b.energy_scale() == doctest::Approx(kScales.e).epsilon(1e-15));
  }
}

TEST_CASE("property: energies strictly increase and spacings shrink") {
  double prev_E = 0.0, prev_gap = INFINITY;
  for (long n = 1; n <= 50; ++n) {
    const auto b = level(n, kScales, kCodata);
    CHECK(b.E > prev_E);
    if (n >= 2) {
      const double gap = level_spacing(n, kScales);
      CHECK(gap == doctest::Approx(b.E - prev_E).epsilon(1e-12));
      CHECK(gap < prev_gap);
      prev_gap = gap;
    }
    prev_E = b.E;
  }
}

TEST_CASE("property: g -> 8g multiplies energies by 4 and divides heights by 2") {
  auto k8 = kCodata;
  k8.g *= 8.0;
  const auto s8 = reduced_scales(k8);
  for (long n : {1L, 5L, 30L}) {
    const auto a = level(n, kScales, kCodata);
    const auto b = level(n, s8, k8);
    CHECK(b.E / a.E == doctest::Approx(4.0).epsilon(1e-13));
    CHECK(a.H / b.H == doctest::Approx(2.0).epsilon(1e-13));
  }
}

TEST_CASE("wavefunction is normalized, vanishes at the mirror and decays") {
  for (long n : {1L, 4L, 12L}) {
    CAPTURE(n);
    const auto b = level(n, kScales, kCodata);
    const Wavefunction psi(b);
    CHECK(std::fabs(psi(0.0)) < 1e-12);
    CHECK(std::fabs(psi(b.lambda + 15.0)) < 1e-10);
    CHECK(overlap_quadrature(b, b) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(wavefunction_value(b, 1.0) == psi(1.0));
  }
  const auto g = level(1, kScales, kCodata);
  const Wavefunction pg(g);
  CHECK_THROWS_AS(pg(-0.1), std::invalid_argument);
}

TEST_CASE("mean height from quadrature matches the closed form and a Bessel route") {
  for (long n : {1L, 2L, 5L}) {
    CAPTURE(n);
    const auto b = level(n, kScales, kCodata);
    const double xi_q = mean_height_quadrature(b) / kScales.l;
    CHECK(std::fabs(xi_q - 2.0 / 3.0 * b.lambda) < 1e-9);
    const double norm = bessel_moment(b.lambda, 0);
    const double first = bessel_moment(b.lambda, 1);
    CHECK(first / norm == doctest::Approx(2.0 / 3.0 * b.lambda).epsilon(1e-9));
  }
  for (long n = 10; n <= 50; n += 20) {
    const auto b = level(n, kScales, kCodata);
    CHECK(std::fabs(mean_height_quadrature(b) / kScales.l - 2.0 / 3.0 * b.lambda) < 1e-7);
  }
}

TEST_CASE("property: distinct levels are orthogonal") {
  for (long n = 1; n <= 4; ++n) {
    for (long m = n + 1; m <= 5; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(std::fabs(overlap_quadrature(level(n, kScales, kCodata), level(m, kScales, kCodata))) <
            1e-9);
    }
  }
}

TEST_CASE("integral of Ai^2 equals Ai'(-lambda)^2") {
  for (long n = 1; n <= 20; n += 3) {
    const double lambda = airy_zero(n).lambda;
    const auto r = airy_square_integral(lambda);
    CHECK(r.converged);
    const double d = airy_ai_prime(-lambda);
    CHECK(std::fabs(r.value - d * d) < 1e-8);
  }
}

TEST_CASE("plane-wave Ansatz round-trips the velocities") {
  const auto b = level(3, kScales, kCodata);
  const auto a = ansatz_from_velocity(b, 10.0, -2.5, kCodata);
  CHECK(west_east_velocity(a, kCodata) == doctest::Approx(10.0).epsilon(1e-15));
  CHECK(north_velocity(a, kCodata) == doctest::Approx(-2.5).epsilon(1e-15));
  CHECK(a.level.n == 3);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(level(0, kScales, kCodata), std::invalid_argument);
  auto bad = kCodata;
  bad.m_neutron = -1.0;
  CHECK_THROWS_AS(level(1, kScales, bad), std::invalid_argument);
  CHECK_THROWS_AS(level_spacing(1, kScales), std::invalid_argument);
  const auto b = level(1, kScales, kCodata);
  CHECK_THROWS_AS(mean_height_quadrature(b, QuadratureSettings{-1.0, 1e-12}),
                  std::invalid_argument);
}
