// Acceptance gate: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shbeat/analysis.hpp"
#include "shbeat/beating.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/phenomenological.hpp"
#include "shbeat/scenario.hpp"
#include "shbeat/sweep.hpp"

using namespace shbeat;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const auto kBeam = BeamParameters::from_kinetic_energy(50.0);
const auto kLaser = LaserField::from_vacuum_wavelength(4880.0);
const SlabGeometry kSlab{1.550, 1007.0, 4880.0};

bool within(double x, double ref, double tol) { return std::abs(x - ref) <= tol; }

GeometryScenario at_fixed_r(double z, double r) {
  GeometryScenario g;
  g.scheme = FocusScheme::fixed_r;
  g.z_cm = z;
  g.focus_distance_cm = r;
  return g;
}

Criterion kinematics() {
  Criterion c{1, "kinematic anchors"};
  c.require(within(kBeam.velocity_ratio(), 0.4127, 1e-4), "v0/c");
  c.require(oracle::rel(energy_ratio(kBeam, kLaser), 2.208e5) <= 5e-4, "E0/hbar omega");
  c.require(within(lambda_b0(kBeam, kLaser), 1.515, 1e-3), "lambda_b0");
  const double d0 = optimal_thickness_d0(kBeam, kLaser);
  c.require(within(d0, 1007.0, 1.0), "d0");
  c.require(within(absorption_probability({0.35, d0, d0}), 0.00766, 5e-6), "(beta/4)^2");
  return c;
}

Criterion beating_wavelengths() {
  Criterion c{2, "beating-wavelength anchors"};
  c.require(within(lambda_b_planewave(kBeam, kLaser, 1.550), 1.22, 0.01), "plane-wave");
  const auto mode = solve_tm0_mode(kSlab);
  c.require(std::abs(mode.effective_index -
                     oracle::scan_tm0_effective_index(1.550, 1007.0, 4880.0)) < 1e-8,
            "TM0 solve vs scan oracle");
  c.require(within(lambda_b_tm0(kBeam, kLaser, mode), 1.47, 0.01), "TM0");
  const double lb0 = lambda_b0(kBeam, kLaser);
  oracle::Gen gen(1);
  bool bounded = true;
  for (int i = 0; i < 2000; ++i) {
    const SlabGeometry s{gen.uniform(1.05, 3.0), gen.uniform(50.0, 5000.0), 4880.0};
    bounded = bounded && lambda_b_tm0(kBeam, kLaser, solve_tm0_mode(s)) < lb0;
  }
  c.require(bounded, "lambda_b0 upper bound");
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, mode);
  c.require(within(coeffs.asymptotic_wavelength_cm(), 1.826, 1e-3), "asymptote");
  return c;
}

Criterion inverse_r() {
  Criterion c{3, "inverse-r triple"};
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, solve_tm0_mode(kSlab));
  const double orders[] = {12.0, 12.5, 13.0};
  const double published[] = {4.57, 10.08, 22.13};
  for (int i = 0; i < 3; ++i) {
    const double r = solve_r_for_phase(10.2, orders[i], coeffs).focus_distance_cm;
    c.require(oracle::rel(r, published[i]) <= 0.05, "r(m=" + std::to_string(orders[i]) + ")");
    const double scanned = oracle::log_scan_root(
        [&](double rr) { return chi_divergent(at_fixed_r(10.2, rr), coeffs) - orders[i] * units::pi; },
        1e-3, 1e3);
    c.require(oracle::rel(r, scanned) <= 1e-6, "closed form vs scan");
  }
  return c;
}

Criterion fixed_ratio() {
  Criterion c{4, "fixed-ratio fit"};
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, solve_tm0_mode(kSlab));
  const auto record = ExperimentRecord::schwarz_dataset();
  const double r = fit_fixed_ratio(record, 1.70, coeffs).focus_distance_cm;
  c.require(r >= 4.55 * 0.98 && r <= 4.57 * 1.02, "r within 2% of 4.55-4.57");
  const auto rep = check_maxima_consistency(record, 1.70);
  for (const auto& s : rep.spacings) {
    c.require(s.residual < 1e-9, "maxima residual");
    c.require(std::abs(s.spacing_cm - 0.85 * static_cast<double>(s.nearest_integer)) < 1e-9,
              "multiple of 0.85 cm");
  }
  return c;
}

Criterion model_identities() {
  Criterion c{5, "model-identity properties"};
  const auto mode = solve_tm0_mode(kSlab);
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, mode);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const auto g = at_fixed_r(0.4 * (i + 1), std::pow(10.0, -2.0 + 5.0 * j / 99.0));
      const double chi = chi_divergent(g, coeffs);
      worst = std::max(worst, std::abs(delta_phi(g, coeffs) - 2.0 * chi) / std::abs(2.0 * chi));
    }
  }
  c.require(worst <= 1e-12, "delta_phi = 2 chi");

  double worst_fd = 0.0;
  for (double r : {4.57, 10.08, 22.13}) {
    for (double z = 0.05; z <= 40.0; z += 0.05) {
      const double d = oracle::derivative(
          [&](double zz) { return chi_divergent(at_fixed_r(zz, r), coeffs); }, z, 1e-4);
      worst_fd = std::max(worst_fd, oracle::rel(lambda_b_local(at_fixed_r(z, r), coeffs),
                                                units::two_pi / d));
    }
  }
  c.require(worst_fd <= 1e-6, "local wavelength vs finite difference");

  const auto flat = ModeSolution::from_effective_index(1.550, 1.550, 4880.0);
  c.require(lambda_b_tm0(kBeam, kLaser, flat) == lambda_b_planewave(kBeam, kLaser, 1.550),
            "alpha = 0 collapse");

  GeometryScenario g;
  g.scheme = FocusScheme::fixed_ratio;
  g.ratio = 0.31;
  const auto z = sweep::uniform_grid(0.0, 40.0, 0.01);
  const auto chi = sweep::chi_grid(coeffs, g, z);
  const double slope = units::two_pi / coeffs.wavelength_at_ratio(0.31);
  double worst_lin = 0.0;
  for (std::size_t i = 1; i < z.size(); ++i) worst_lin = std::max(worst_lin, oracle::rel(chi[i], slope * z[i]));
  c.require(chi[0] == 0.0 && worst_lin <= 1e-12, "fixed-ratio linearity");
  return c;
}

Criterion initial_phase() {
  Criterion c{6, "initial-phase dichotomy"};
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, solve_tm0_mode(kSlab));
  const auto g = at_fixed_r(0.0, solve_r_for_phase(10.2, 12.0, coeffs).focus_distance_cm);
  const auto z = sweep::uniform_grid(0.0, 40.0, 0.01);
  const auto p = intensity_profile(z, g, coeffs, amplitudes_from_currents(1.0, 0.31));
  c.require(p.phenom.front() == 1.0, "phenomenological maximum at z = 0");
  c.require(p.sin2.front() == 0.0, "sin^2 chi zero at z = 0");
  return c;
}

Criterion scaling() {
  Criterion c{7, "scaling properties"};
  const auto coeffs = PhaseCoefficients::from(kBeam, kLaser, solve_tm0_mode(kSlab));
  const auto base = amplitudes_from_currents(1.0, 0.31);
  for (double lambda : {0.5, 2.0, 10.0}) {
    const auto scaled = amplitudes_from_currents(lambda, lambda * 0.31);
    for (double z = 0.0; z <= 40.0; z += 0.5) {
      const double dphi = delta_phi(at_fixed_r(z, 4.57), coeffs);
      const double i1 = intensity({base.elastic, base.sideband, dphi});
      const double i2 = intensity({scaled.elastic, scaled.sideband, dphi});
      c.require(std::abs(i2 - lambda * i1) <= 1e-12 * lambda * i1, "linearity");
    }
  }
  const auto ratios = amplitude_ratios_for_depth(0.85);
  c.require(within(ratios.below_one, 0.557, 1e-3) && within(ratios.above_one, 1.796, 1e-3),
            "ratios 0.557/1.796");
  c.require(std::abs(modulation_depth(1.0, ratios.below_one) - 0.85) <= 1e-9 &&
                std::abs(modulation_depth(1.0, ratios.above_one) - 0.85) <= 1e-9,
            "depth round trip");
  return c;
}

Criterion power_budget() {
  Criterion c{8, "power budget"};
  c.require(oracle::rel(transported_power({0.4, 1e-3, 2.54}), 1.0e-9) <= 0.02, "1e-9 W");
  c.require(oracle::rel(carrying_fraction_for_power(1e-10, 0.4, 2.54), 1e-4) <= 0.02, "fraction 1e-4");
  const auto result = reproduce_all();
  c.require(result.table.find("transported power") != nullptr &&
                result.table.find("published carrying fraction vs computed") != nullptr,
            "report rows");
  return c;
}

Criterion reproduce() {
  Criterion c{9, "reproduce-all report"};
  const auto t0 = std::chrono::steady_clock::now();
  const auto result = reproduce_all();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(seconds < 5.0, "runtime " + std::to_string(seconds) + " s");
  c.require(result.table.all_passed(), std::to_string(result.table.failure_count()) + " failed rows");
  std::size_t paper_rows = 0;
  for (const auto& row : result.table.rows()) {
    if (row.provenance == Provenance::published && row.status != RowStatus::info) ++paper_rows;
  }
  c.require(paper_rows >= 15, "expected published rows present");
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion (*)()> checks{kinematics,  beating_wavelengths, inverse_r,
                                      fixed_ratio, model_identities,    initial_phase,
                                      scaling,     power_budget,        reproduce};
  int failures = 0;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    Criterion c{static_cast<int>(i + 1), "exception"};
    try {
      c = checks[i]();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    if (!c.ok) ++failures;
    std::printf("criterion %d %-28s %s%s%s\n", c.id, c.title.c_str(), c.ok ? "PASS" : "FAIL",
                c.detail.empty() ? "" : "  ", c.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
