#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/sweep.hpp"

using namespace shbeat;
using namespace shbeat::sweep;

namespace {
const auto kCoeffs = PhaseCoefficients::from(BeamParameters::from_kinetic_energy(50.0),
                                             LaserField::from_vacuum_wavelength(4880.0),
                                             solve_tm0_mode({1.550, 1007.0, 4880.0}));

std::int64_t ulp_distance(double a, double b) {
  auto key = [](double x) {
    const auto bits = std::bit_cast<std::int64_t>(x);
    return bits < 0 ? std::numeric_limits<std::int64_t>::min() - bits : bits;
  };
  const auto d = key(a) - key(b);
  return d < 0 ? -d : d;
}

void check_equal_ulps(const std::vector<double>& a, const std::vector<double>& b, std::int64_t ulps) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    INFO("index " << i);
    CHECK(ulp_distance(a[i], b[i]) <= ulps);
  }
}
}  // namespace

TEST_CASE("scalar kernels match the single-point library calls") {
  const auto& k = kernels_for(Isa::scalar);
  const auto z = uniform_grid(0.0, 40.0, 0.37);
  std::vector<double> out(z.size());
  k.phase_fixed_r(make_args(kCoeffs, units::two_pi), 4.57, z, out);
  for (std::size_t i = 0; i < z.size(); ++i) {
    GeometryScenario g;
    g.scheme = FocusScheme::fixed_r;
    g.focus_distance_cm = 4.57;
    g.z_cm = z[i];
    CHECK(out[i] == chi_divergent(g, kCoeffs));
  }
  k.wavelength_fixed_r(make_args(kCoeffs, units::two_pi), 4.57, z, out);
  for (std::size_t i = 0; i < z.size(); ++i) {
    GeometryScenario g;
    g.scheme = FocusScheme::fixed_r;
    g.focus_distance_cm = 4.57;
    g.z_cm = z[i];
    CHECK(out[i] == lambda_b_local(g, kCoeffs));
  }
}

TEST_CASE("every available ISA agrees with the scalar reference") {
  const auto& ref = kernels_for(Isa::scalar);
  oracle::Gen gen(17);
  for (Isa isa : available_isas()) {
    INFO("isa " << to_string(isa));
    const auto& k = kernels_for(isa);
    CHECK(k.isa == isa);
    // Odd lengths exercise the scalar tail of vector kernels.
    for (std::size_t n : {0u, 1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 1001u}) {
      std::vector<double> z(n);
      for (auto& v : z) v = gen.uniform(0.0, 60.0);
      const auto args = make_args(kCoeffs, gen.uniform(1.0, 13.0));
      const double r = gen.log_uniform(0.01, 1e4);
      const double u = gen.uniform(0.0, 0.999);
      std::vector<double> a(n), b(n);
      ref.phase_fixed_r(args, r, z, a);
      k.phase_fixed_r(args, r, z, b);
      check_equal_ulps(a, b, 2);
      ref.phase_fixed_ratio(args, u, z, a);
      k.phase_fixed_ratio(args, u, z, b);
      check_equal_ulps(a, b, 2);
      ref.wavelength_fixed_r(args, r, z, a);
      k.wavelength_fixed_r(args, r, z, b);
      check_equal_ulps(a, b, 2);
    }
  }
}

TEST_CASE("active kernels are one of the available sets") {
  const auto isas = available_isas();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == Isa::scalar);
  const auto active = active_kernels().isa;
  CHECK(std::find(isas.begin(), isas.end(), active) != isas.end());
}

TEST_CASE("grid helpers") {
  SUBCASE("uniform_grid") {
    const auto g = uniform_grid(0.0, 40.0, 0.01);
    CHECK(g.size() == 4001);
    CHECK(g.front() == 0.0);
    CHECK(std::abs(g.back() - 40.0) < 1e-12);
    CHECK(uniform_grid(1.0, 1.0, 0.5).size() == 1);
    CHECK(uniform_grid(0.0, 1.0, 0.3).size() == 4);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 0.0), InvalidInput);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 0.1), InvalidInput);
  }
  SUBCASE("grids follow the scheme") {
    const auto z = uniform_grid(0.0, 10.0, 0.5);
    GeometryScenario col;
    const auto lam = local_wavelength_grid(kCoeffs, col, z);
    for (double v : lam) CHECK(v == kCoeffs.collimated_wavelength_cm());
    GeometryScenario fr;
    fr.scheme = FocusScheme::fixed_ratio;
    fr.ratio = 0.4;
    const auto chi = chi_grid(kCoeffs, fr, z);
    for (std::size_t i = 0; i < z.size(); ++i) {
      CHECK(std::abs(chi[i] - units::two_pi * z[i] / kCoeffs.wavelength_at_ratio(0.4)) <= 1e-12 * (1.0 + chi[i]));
    }
  }
}
