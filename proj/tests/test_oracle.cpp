#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reference.hpp"
#include "ucnrot/error.hpp"
#include "ucnrot/oracle.hpp"

using namespace ucnrot;

TEST_CASE("finite-difference spectrum approaches the Airy zeros") {
  const auto ev = fd_eigenvalues(GridSpec{}, 10);
  REQUIRE(ev.size() == 10);
  for (int i = 0; i < 10; ++i) {
    CAPTURE(i);
    CHECK(std::fabs(ev[i] - ref::kZeros[i]) < 1e-4);
    if (i > 0) CHECK(ev[i] > ev[i - 1]);
  }
}

TEST_CASE("property: second-order convergence under grid refinement") {
  // Halving h (points 2000 -> 4001) divides the error by about four.
  const auto coarse = fd_eigenvalues(GridSpec{30.0, 2000}, 3);
  const auto fine = fd_eigenvalues(GridSpec{30.0, 4001}, 3);
  for (int i = 0; i < 3; ++i) {
    const double ratio = (coarse[i] - ref::kZeros[i]) / (fine[i] - ref::kZeros[i]);
    CAPTURE(i);
    CHECK(ratio == doctest::Approx(4.0).epsilon(0.02));
  }
}

TEST_CASE("free particle in a box has the closed-form discrete spectrum") {
  // With xi_max small the linear potential is a small perturbation; compare
  // against the discrete Laplacian eigenvalues (4/h^2) sin^2(k pi h / 2L)
  // plus the mean potential shift <xi> = L/2 to first order.
  const GridSpec g{0.01, 200};
  const auto ev = fd_eigenvalues(g, 3);
  const double h = g.spacing();
  for (int k = 1; k <= 3; ++k) {
    const double s = std::sin(k * std::numbers::pi * h / (2.0 * g.xi_max));
    const double want = 4.0 / (h * h) * s * s + g.xi_max / 2.0;
    CHECK(ev[k - 1] == doctest::Approx(want).epsilon(1e-9));
  }
}

TEST_CASE("Sturm count brackets each eigenvalue") {
  const GridSpec g{30.0, 3000};
  const auto ev = fd_eigenvalues(g, 5);
  for (int i = 0; i < 5; ++i) {
    CHECK(sturm_count(g, ev[i] - 1e-6) == i);
    CHECK(sturm_count(g, ev[i] + 1e-6) == i + 1);
  }
  CHECK(sturm_count(g, 0.0) == 0);
}

TEST_CASE("fd_eigenvalues argument checks") {
  CHECK_THROWS_AS(fd_eigenvalues(GridSpec{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(GridSpec{}, 21), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(GridSpec{-1.0, 100}, 1), std::invalid_argument);
  CHECK_THROWS_AS(fd_eigenvalues(GridSpec{30.0, 2}, 1), std::invalid_argument);
}

TEST_CASE("adaptive Simpson on closed-form integrals") {
  const auto r1 = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, 1e-12);
  CHECK(r1.converged);
  CHECK(std::fabs(r1.value - 2.0) < 1e-11);

  const auto r2 = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0, 1e-13);
  CHECK(std::fabs(r2.value - std::sqrt(std::numbers::pi)) < 1e-12);

  // Simpson is exact on cubics.
  const auto r3 = integrate([](double x) { return x * x * x - 2 * x + 1; }, -1.0, 3.0, 1e-10);
  CHECK(r3.value == doctest::Approx(20.0 - 8.0 + 4.0).epsilon(1e-14));

  const auto r4 = integrate([](double x) { return 1.0 / std::sqrt(x); }, 1e-12, 1.0, 1e-9);
  CHECK(std::fabs(r4.value - (2.0 - 2e-6)) < 1e-7);
}

TEST_CASE("quadrature budget exhaustion is reported, not hidden") {
  QuadratureOptions opt;
  opt.tol = 1e-14;
  opt.max_evaluations = 200;
  const auto r = integrate([](double x) { return std::sin(50 * x); }, 0.0, 10.0, opt);
  CHECK_FALSE(r.converged);
  CHECK(r.evaluations <= 400);
}

TEST_CASE("quadrature argument checks") {
  auto f = [](double x) { return x; };
  CHECK_THROWS_AS(integrate(f, 1.0, 0.0, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 0.0, INFINITY, 1e-8), std::invalid_argument);
  CHECK_THROWS_AS(integrate(f, 0.0, 1.0, -1.0), std::invalid_argument);
}
