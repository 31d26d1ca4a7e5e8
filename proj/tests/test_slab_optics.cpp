#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/slab_optics.hpp"

using namespace shbeat;

TEST_CASE("tm1_cutoff_thickness") {
  // Published as 2040 A; n = 1.550 gives 2060 A.
  const double quartz = tm1_cutoff_thickness(1.550, 4880.0);
  CHECK(quartz == doctest::Approx(2060.3376).epsilon(1e-7));
  CHECK(std::abs(quartz - 2040.0) / 2040.0 < 0.02);
  CHECK(tm1_cutoff_thickness(std::sqrt(2.0), 2000.0) == doctest::Approx(1000.0).epsilon(1e-12));
  CHECK(tm1_cutoff_thickness(1.46, 4880.0) == doctest::Approx(2293.7356096580).epsilon(1e-10));
  CHECK_THROWS_AS(tm1_cutoff_thickness(1.0, 4880.0), DomainError);
  CHECK_THROWS_AS(tm1_cutoff_thickness(0.8, 4880.0), DomainError);
}

TEST_CASE("mode_count") {
  CHECK(mode_count({1.550, 1000.0, 4880.0}) == 1);
  CHECK(mode_count({1.550, 1e-3, 4880.0}) == 1);
  CHECK(mode_count({1.550, 5000.0, 4880.0}) == 3);
  SUBCASE("cutoff consistency") {
    const double cut = tm1_cutoff_thickness(1.550, 4880.0);
    CHECK(mode_count({1.550, cut * (1.0 - 1e-9), 4880.0}) == 1);
    CHECK(mode_count({1.550, cut * (1.0 + 1e-9), 4880.0}) == 2);
  }
  CHECK_THROWS_AS(mode_count({1.550, 0.0, 4880.0}), InvalidInput);
}

TEST_CASE("solve_tm0_mode") {
  SUBCASE("quartz film at d0") {
    const SlabGeometry g{1.550, 1007.0, 4880.0};
    const auto m = solve_tm0_mode(g);
    CHECK(m.effective_index == doctest::Approx(1.08).epsilon(0.005));
    CHECK(m.effective_index / g.refractive_index == doctest::Approx(0.70).epsilon(0.01));
    CHECK(std::abs(tm0_dispersion_residual(g, m.effective_index)) < 1e-10);
    CHECK(oracle::rel(m.effective_index, oracle::scan_tm0_effective_index(1.550, 1007.0, 4880.0)) < 1e-8);
  }
  SUBCASE("thick slab approaches the bulk index") {
    const auto m = solve_tm0_mode({1.550, 1e6, 4880.0});
    CHECK(std::abs(m.effective_index - 1.550) < 1e-3);
  }
  SUBCASE("500 A film against a dense sign scan") {
    const auto m = solve_tm0_mode({1.550, 500.0, 4880.0});
    const double scanned = oracle::scan_tm0_effective_index(1.550, 500.0, 4880.0);
    CHECK(std::abs(m.effective_index - scanned) < 1e-8);
  }
  SUBCASE("derived fields agree with n_eff") {
    const auto m = solve_tm0_mode({1.550, 1007.0, 4880.0});
    const double k0 = 2.0 * std::numbers::pi / 4880e-10;
    const double n = 1.550, ne = m.effective_index;
    CHECK(oracle::rel(m.transverse_wavenumber, k0 * std::sqrt(n * n - ne * ne)) < 1e-10);
    CHECK(oracle::rel(m.decay_constant, k0 * std::sqrt(ne * ne - 1.0)) < 1e-10);
    CHECK(oracle::rel(std::cos(m.tilt_angle) * n, ne) < 1e-12);
    // tan form of the dispersion relation holds at the root
    const double half_d = 0.5 * 1007e-10;
    CHECK(oracle::rel(std::tan(m.transverse_wavenumber * half_d),
                      n * n * m.decay_constant / m.transverse_wavenumber) < 1e-9);
  }
  SUBCASE("root strictly inside (1, n) and increasing in d") {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 20; ++trial) {
      const double n = gen.uniform(1.05, 3.0);
      const double lambda = gen.uniform(3000.0, 10000.0);
      double prev = 1.0;
      for (double d = 20.0; d < 40000.0; d *= 1.7) {
        const SlabGeometry g{n, d, lambda};
        const auto m = solve_tm0_mode(g);
        CHECK(m.effective_index > 1.0);
        CHECK(m.effective_index < n);
        CHECK(m.effective_index > prev);
        CHECK(std::abs(tm0_dispersion_residual(g, m.effective_index)) < 1e-10);
        prev = m.effective_index;
      }
    }
  }
  SUBCASE("invalid geometry") {
    CHECK_THROWS_AS(solve_tm0_mode({1.0, 1000.0, 4880.0}), InvalidInput);
    CHECK_THROWS_AS(solve_tm0_mode({1.5, -1.0, 4880.0}), InvalidInput);
    CHECK_THROWS_AS(solve_tm0_mode({1.5, 1000.0, 0.0}), InvalidInput);
  }
}

TEST_CASE("ModeSolution::from_effective_index") {
  CHECK_THROWS_AS(ModeSolution::from_effective_index(1.55, 1.0, 4880.0), DomainError);
  CHECK_THROWS_AS(ModeSolution::from_effective_index(1.55, 1.6, 4880.0), DomainError);
  const auto flat = ModeSolution::from_effective_index(1.55, 1.55, 4880.0);
  CHECK(flat.tilt_angle == 0.0);
  CHECK(flat.transverse_wavenumber == 0.0);
}
