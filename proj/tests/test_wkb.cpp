#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "reference.hpp"
#include "ucnrot/airy.hpp"
#include "ucnrot/constants.hpp"
#include "ucnrot/rotation.hpp"
#include "ucnrot/wkb.hpp"

using namespace ucnrot;

namespace {

const PhysicalConstants kCodata = default_constants(Profile::codata);
const ReducedScales kScales = reduced_scales(kCodata);

}  // namespace

TEST_CASE("A and B from the quoted anchors") {
  const double A = fit_A(peV_to_joules(5.431), peV_to_joules(6.044));
  // (6.044 - 5.431) * 6.75^(1/3)
  CHECK(joules_to_peV(A) == doctest::Approx(0.613 * 1.8898815748423097).epsilon(1e-12));
  CHECK(std::fabs(joules_to_peV(A) / 1.158 - 1.0) < 0.005);
  const double B = fit_B(-3.4e-5, peV_to_joules(6.044));
  CHECK(joules_to_peV(B) == doctest::Approx(-3.4e-5 * 6.044 / 3.571652366928449).epsilon(1e-12));
  CHECK(std::fabs(joules_to_peV(B) / -5.75e-5 - 1.0) < 0.02);
}

TEST_CASE("anchor fit rounds to quoted precision") {
  const auto fit = anchor_fit();
  CHECK(joules_to_peV(fit.A) == doctest::Approx(1.158).epsilon(1e-14));
  CHECK(joules_to_peV(fit.B) == doctest::Approx(-5.75e-5).epsilon(1e-14));
  CHECK(joules_to_peV(fit.A_fitted) == doctest::Approx(1.158498).epsilon(1e-6));
  CHECK(fit.x_ref == 6.75);
  CHECK(round_significant(1.1584981, 4) == 1.158);
  CHECK(round_significant(-5.7535e-5, 3) == -5.75e-5);
  CHECK(round_significant(0.0, 3) == 0.0);
  CHECK_THROWS_AS(round_significant(1.0, 0), std::invalid_argument);
}

TEST_CASE("crossover from the anchors") {
  const auto c = crossover(anchor_fit());
  REQUIRE(c);
  // 1.158 / 5.75e-5
  CHECK(c->x_star == doctest::Approx(20139.130434782608).epsilon(1e-12));
  CHECK(c->n_star == 20139);
  CHECK(c->H_star == doctest::Approx(12e-3).epsilon(0.03));
  CHECK(joules_to_peV(c->E_star) == doctest::Approx(1250.0).epsilon(0.03));
  // E* / E_7 = (x*/x_7)^(2/3), H* / H_7 likewise
  const double s = std::pow(c->x_star / 6.75, 2.0 / 3.0);
  CHECK(c->E_star == doctest::Approx(peV_to_joules(6.044) * s).epsilon(1e-12));
  CHECK(c->H_star == doctest::Approx(58.945e-6 * s).epsilon(1e-12));
}

TEST_CASE("unrounded anchors move the crossover by a few levels") {
  auto fit = anchor_fit();
  fit.A = fit.A_fitted;
  fit.B = fit.B_fitted;
  const auto c = crossover(fit);
  REQUIRE(c);
  CHECK(c->x_star == doctest::Approx(20135.5).epsilon(1e-4));
  CHECK(std::abs(c->n_star - 20139) > 1);
}

TEST_CASE("no crossover without rotation or without motion") {
  auto still = kCodata;
  still.omega_earth = 0.0;
  const auto fit0 = spectrum_fit(reduced_scales(still), still, make_lab_frame(0.7, still), 10.0);
  CHECK(fit0.B == 0.0);
  CHECK_FALSE(crossover(fit0));
  const auto fit1 = spectrum_fit(kScales, kCodata, make_lab_frame(0.7, kCodata), 0.0);
  CHECK_FALSE(crossover(fit1));
  CHECK_FALSE(exact_crossover_level(0.0));
}

TEST_CASE("WKB spacing coefficient matches the exact spectrum at large n") {
  const double c = wkb_reduced_spacing_coefficient();
  CHECK(c == doctest::Approx(2.0 / 3.0 * std::pow(1.5 * std::numbers::pi, 2.0 / 3.0)).epsilon(1e-15));
  for (long n : {100L, 1000L, 10000L}) {
    CAPTURE(n);
    const double exact = exact_spacing_coefficient(n, kScales) / kScales.e;
    CHECK(std::fabs(exact / c - 1.0) < 0.02);
  }
  // corrected spacing tracks the backward difference better than the bare one
  const auto fit = spectrum_fit(kScales, kCodata, make_lab_frame(0.7, kCodata), 10.0);
  const double exact = level_spacing(50, kScales);
  CHECK(std::fabs(wkb_spacing_corrected(50, fit) - exact) < std::fabs(wkb_spacing(50, fit) - exact));
}

TEST_CASE("A from levels 6 and 7 differs from the asymptotic A by about 2.6 percent") {
  const double A67 = fit_A(airy_zero(6).lambda, airy_zero(7).lambda);
  const double A_inf = wkb_reduced_spacing_coefficient();
  const double gap = A67 / A_inf - 1.0;
  CHECK(gap > 0.02);
  CHECK(gap < 0.03);
}

TEST_CASE("WKB energies and shift reproduce the reference level") {
  const auto fit = spectrum_fit(kScales, kCodata, make_lab_frame(0.7, kCodata), 10.0);
  CHECK(wkb_energy(7, fit) == doctest::Approx(fit.E_ref).epsilon(1e-15));
  CHECK(wkb_height(7, fit) == doctest::Approx(fit.H_ref).epsilon(1e-15));
  const double rel = relative_shift(10.0, make_lab_frame(0.7, kCodata), kCodata);
  for (long n : {7L, 200L, 5000L}) {
    CHECK(wkb_shift(n, fit) / wkb_energy(n, fit) == doctest::Approx(rel).epsilon(1e-13));
  }
  // at large n the WKB energy follows the exact level
  const double exact = kScales.e * airy_zero(5000).lambda;
  CHECK(wkb_energy(5000, fit) / exact == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("property: crossover scales as 1/|u1|") {
  const auto frame = make_lab_frame(0.7, kCodata);
  const auto c10 = crossover(spectrum_fit(kScales, kCodata, frame, 10.0));
  const auto c20 = crossover(spectrum_fit(kScales, kCodata, frame, -20.0));
  REQUIRE(c10);
  REQUIRE(c20);
  CHECK(c10->x_star / c20->x_star == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("exact crossover agrees with the WKB estimate") {
  const auto frame = make_lab_frame(0.71, default_constants(Profile::paper));
  const auto kp = default_constants(Profile::paper);
  const auto fit = spectrum_fit(reduced_scales(kp), kp, frame, 10.0);
  const auto c = crossover(fit);
  const auto n = exact_crossover_level(relative_shift(10.0, frame, kp));
  REQUIRE(c);
  REQUIRE(n);
  CHECK(std::fabs(static_cast<double>(*n) / c->n_star - 1.0) < 1e-3);
  CHECK_FALSE(exact_crossover_level(1e-9, 1000));
}

TEST_CASE("continuum report for the slit") {
  const auto fit = anchor_fit();
  const auto r = continuum_report(fit, -10.0, 10.0, 12e-3);
  CHECK(r.top_level > 19000);
  REQUIRE(r.smear_onset);
  // onset at x = A / (2 |B|): half the crossover
  CHECK(static_cast<double>(*r.smear_onset) == doctest::Approx(20139.13 / 2.0).epsilon(1e-4));
  CHECK(r.flagged_count == r.last_flagged - r.first_flagged + 1);
  CHECK(r.last_flagged == r.top_level);
  CHECK(r.at_or_above_crossover == (12e-3 >= crossover(fit)->H_star));

  const auto low = continuum_report(fit, -10.0, 10.0, 1e-4);
  CHECK(low.flagged_count == 0);
  const auto fixed = continuum_report(fit, 10.0, 10.0, 12e-3);
  CHECK_FALSE(fixed.smear_onset);
  CHECK(fixed.flagged_count == 0);

  CHECK_THROWS_AS(continuum_report(fit, 5.0, -5.0, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(continuum_report(fit, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("fit argument checks") {
  CHECK_THROWS_AS(fit_A(2.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_A(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(fit_A(1.0, 2.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(fit_B(-1e-5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(wkb_spacing(0, anchor_fit()), std::invalid_argument);
}
