#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shbeat/analysis.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/phenomenological.hpp"
#include "shbeat/sweep.hpp"

using namespace shbeat;

namespace {
const auto kBeam = BeamParameters::from_kinetic_energy(50.0);
const auto kLaser = LaserField::from_vacuum_wavelength(4880.0);
const auto kMode = solve_tm0_mode({1.550, 1007.0, 4880.0});
const auto kCoeffs = PhaseCoefficients::from(kBeam, kLaser, kMode);

GeometryScenario ratio_geometry(double u) {
  GeometryScenario g;
  g.scheme = FocusScheme::fixed_ratio;
  g.ratio = u;
  return g;
}
}  // namespace

TEST_CASE("delta_phi is twice chi") {
  oracle::Gen gen(3);
  for (int i = 0; i < 500; ++i) {
    GeometryScenario g;
    g.scheme = FocusScheme::fixed_r;
    g.z_cm = gen.uniform(0.0, 40.0);
    g.focus_distance_cm = gen.log_uniform(0.1, 1000.0);
    CHECK(delta_phi(g, kCoeffs) == 2.0 * chi_divergent(g, kCoeffs));
  }
  GeometryScenario g;
  g.z_cm = 3.0;
  CHECK(delta_phi(g, kBeam, kLaser, kMode) == 2.0 * chi_divergent(g, kCoeffs));
}

TEST_CASE("intensity") {
  CHECK(intensity({1.0, 0.5, 0.0}) == doctest::Approx(2.25));
  CHECK(intensity({1.0, 0.5, units::pi}) == doctest::Approx(0.25));
  CHECK(intensity({1.0, 1.0, units::pi / 2}) == doctest::Approx(2.0));
  CHECK_THROWS_AS(intensity({-1.0, 0.5, 0.0}), InvalidInput);

  oracle::Gen gen(4);
  for (int i = 0; i < 1000; ++i) {
    const double a = gen.uniform(0.0, 3.0), b = gen.uniform(0.0, 3.0);
    const double v = intensity({a, b, gen.uniform(-20.0, 20.0)});
    CHECK(v >= (a - b) * (a - b) - 1e-12);
    CHECK(v <= (a + b) * (a + b) + 1e-12);
  }
}

TEST_CASE("modulation depth and amplitude ratios") {
  CHECK(modulation_depth(1.0, 1.0) == 1.0);
  CHECK(modulation_depth(1.0, 0.0) == 0.0);
  CHECK(modulation_depth(2.0, 1.0) == doctest::Approx(0.8));
  CHECK_THROWS_AS(modulation_depth(0.0, 0.0), InvalidInput);

  const auto r = amplitude_ratios_for_depth(0.85);
  CHECK(std::abs(r.below_one - 0.557) < 1e-3);
  CHECK(std::abs(r.above_one - 1.796) < 1e-3);
  CHECK(r.below_one * r.above_one == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(amplitude_ratios_for_depth(1.0).below_one == 1.0);
  CHECK_THROWS_AS(amplitude_ratios_for_depth(0.0), InvalidInput);
  CHECK_THROWS_AS(amplitude_ratios_for_depth(1.2), InvalidInput);

  oracle::Gen gen(6);
  for (int i = 0; i < 500; ++i) {
    const double d = gen.uniform(1e-3, 1.0);
    const auto rr = amplitude_ratios_for_depth(d);
    CHECK(std::abs(modulation_depth(1.0, rr.below_one) - d) < 1e-9);
    CHECK(std::abs(modulation_depth(1.0, rr.above_one) - d) < 1e-9);
  }

  // Current ratio 0.31 lands on a depth of 0.850.
  const auto amps = amplitudes_from_currents(1.0, 0.31);
  CHECK(std::abs(modulation_depth(amps.elastic, amps.sideband) - 0.850) < 1e-3);
}

TEST_CASE("intensity scales linearly with beam current") {
  oracle::Gen gen(7);
  for (int i = 0; i < 300; ++i) {
    const double je = gen.uniform(0.0, 5.0), js = gen.uniform(0.0, 5.0);
    const double lambda = gen.uniform(0.1, 10.0), dphi = gen.uniform(0.0, 10.0);
    const auto a1 = amplitudes_from_currents(je, js);
    const auto a2 = amplitudes_from_currents(lambda * je, lambda * js);
    const double i1 = intensity({a1.elastic, a1.sideband, dphi});
    const double i2 = intensity({a2.elastic, a2.sideband, dphi});
    CHECK(std::abs(i2 - lambda * i1) <= 1e-12 * std::max(1.0, std::abs(lambda * i1)));
  }
  CHECK_THROWS_AS(amplitudes_from_currents(-1.0, 1.0), InvalidInput);
}

TEST_CASE("transported power") {
  CHECK(oracle::rel(transported_power({}), 1.0e-9) < 0.02);
  CHECK(transported_power({0.4, 0.0, 2.54}) == 0.0);
  CHECK(std::abs(carrying_fraction_for_power(1.0e-10, 0.4, 2.54) - 1.0e-4) < 2e-6);
  const double f = carrying_fraction_for_power(3.3e-9, 0.4, 2.54);
  CHECK(oracle::rel(transported_power({0.4, f, 2.54}), 3.3e-9) < 1e-12);
}

TEST_CASE("intensity_profile") {
  const Amplitudes amps = amplitudes_from_currents(1.0, 0.31);

  SUBCASE("the laws disagree at the film surface") {
    const std::vector<double> z{0.0, 0.05, 0.1};
    GeometryScenario g;
    g.scheme = FocusScheme::fixed_r;
    g.focus_distance_cm = 4.57;
    const auto p = intensity_profile(z, g, kCoeffs, amps);
    CHECK(p.sin2[0] == 0.0);
    CHECK(p.cos2[0] == 1.0);
    CHECK(p.phenom[0] == 1.0);
  }

  SUBCASE("fixed-ratio maxima are evenly spaced for every law") {
    const auto record = ExperimentRecord::schwarz_dataset();
    const auto fit = fit_fixed_ratio(record, 1.70, kCoeffs);
    const auto g = ratio_geometry(fit.ratio);
    const auto z = sweep::uniform_grid(0.0, 40.0, 1e-4);
    const auto p = intensity_profile(z, g, kCoeffs, amps);
    const double half = kCoeffs.wavelength_at_ratio(fit.ratio) / 2.0;
    CHECK(std::abs(half - 0.85) < 1e-9);

    for (const auto* law : {&p.sin2, &p.cos2, &p.phenom}) {
      const auto peaks = locate_maxima(z, *law);
      REQUIRE(peaks.size() >= 40);
      for (std::size_t i = 1; i < peaks.size(); ++i) {
        CHECK(std::abs(peaks[i] - peaks[i - 1] - 0.85) < 1e-6);
      }
    }
    // sin2 peaks sit where cos2 and the two-beam law bottom out.
    for (double zp : locate_maxima(z, p.sin2)) {
      const double chi = chi_divergent([&] { auto gg = g; gg.z_cm = zp; return gg; }(), kCoeffs);
      CHECK(std::abs(std::cos(chi)) < 1e-6);
      CHECK(std::cos(2.0 * chi) < -0.999999);
    }
  }

  SUBCASE("no sideband beam gives a flat two-beam law") {
    const auto z = sweep::uniform_grid(0.0, 5.0, 0.01);
    const auto p = intensity_profile(z, ratio_geometry(0.3), kCoeffs, {1.0, 0.0});
    CHECK(std::all_of(p.phenom.begin(), p.phenom.end(), [](double v) { return v == 1.0; }));
  }

  SUBCASE("grid validation") {
    const std::vector<double> empty;
    const std::vector<double> flat{0.0, 1.0, 1.0};
    const std::vector<double> negative{-1.0, 0.0};
    CHECK_THROWS_AS(intensity_profile(empty, ratio_geometry(0.3), kCoeffs, amps), InvalidInput);
    CHECK_THROWS_AS(intensity_profile(flat, ratio_geometry(0.3), kCoeffs, amps), InvalidInput);
    CHECK_THROWS_AS(intensity_profile(negative, ratio_geometry(0.3), kCoeffs, amps), InvalidInput);
  }
}
