#include "shbeat/phenomenological.hpp"

#include <algorithm>
#include <cmath>

#include "shbeat/constants.hpp"
#include "shbeat/detail/phase_formulas.hpp"
#include "shbeat/errors.hpp"
#include "shbeat/sweep.hpp"

namespace shbeat {

double intensity(const InterferenceField& field) {
  const double a = field.amplitude_elastic;
  const double b = field.amplitude_sideband;
  if (!(a >= 0.0) || !(b >= 0.0)) throw InvalidInput("interference amplitudes must be >= 0");
  return a * a + b * b + 2.0 * a * b * std::cos(field.phase_difference);
}

double delta_phi(const GeometryScenario& scenario, const PhaseCoefficients& coeffs) {
  scenario.validate();
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  return detail::phase_at(2.0 * units::two_pi, scenario.z_cm, coeffs.lambda_b0_cm,
                          coeffs.velocity_ratio_sq, neff2, scenario.focus_ratio_at(scenario.z_cm));
}

double delta_phi(const GeometryScenario& scenario, const BeamParameters& beam,
                 const LaserField& laser, const ModeSolution& mode) {
  return delta_phi(scenario, PhaseCoefficients::from(beam, laser, mode));
}

double modulation_depth(double a, double b) {
  if (!(a >= 0.0) || !(b >= 0.0)) throw InvalidInput("amplitudes must be >= 0");
  const double norm = a * a + b * b;
  if (norm == 0.0) throw InvalidInput("modulation depth undefined for a = b = 0");
  return 2.0 * a * b / norm;
}

AmplitudeRatios amplitude_ratios_for_depth(double depth) {
  if (!(depth > 0.0 && depth <= 1.0)) throw InvalidInput("modulation depth must be in (0, 1]");
  const double root = std::sqrt((1.0 - depth) * (1.0 + depth));
  // Stable pair: the small root via the product x1 x2 = 1.
  const double large = (1.0 + root) / depth;
  return AmplitudeRatios{1.0 / large, large};
}

Amplitudes amplitudes_from_currents(double current_elastic, double current_sideband, double kappa) {
  if (!(current_elastic >= 0.0) || !(current_sideband >= 0.0)) {
    throw InvalidInput("beam currents must be >= 0");
  }
  if (!(kappa > 0.0)) throw InvalidInput("amplitude constant kappa must be > 0");
  return Amplitudes{std::sqrt(kappa * current_elastic), std::sqrt(kappa * current_sideband)};
}

double transported_power(const TransportBudget& budget) {
  if (!(budget.carrying_fraction >= 0.0 && budget.carrying_fraction <= 1.0)) {
    throw InvalidInput("carrying fraction must be in [0, 1]");
  }
  if (!(budget.beam_current_uA >= 0.0) || !(budget.photon_energy_eV >= 0.0)) {
    throw InvalidInput("current and photon energy must be >= 0");
  }
  const double electrons_per_s =
      budget.beam_current_uA * units::uA_to_A / PhysicalConstants::elementary_charge;
  return electrons_per_s * budget.carrying_fraction * budget.photon_energy_eV * units::eV_to_J;
}

double carrying_fraction_for_power(double target_power_W, double beam_current_uA,
                                   double photon_energy_eV) {
  if (!(target_power_W >= 0.0)) throw InvalidInput("target power must be >= 0");
  const double full = transported_power(TransportBudget{beam_current_uA, 1.0, photon_energy_eV});
  if (!(full > 0.0)) throw InvalidInput("current and photon energy must be > 0");
  return target_power_W / full;
}

namespace {

void normalize_to_unit_max(std::vector<double>& v) {
  if (v.empty()) return;
  const double peak = *std::max_element(v.begin(), v.end());
  if (peak > 0.0) {
    for (double& x : v) x /= peak;
  }
}

}  // namespace

IntensityProfile intensity_profile(std::span<const double> z_cm, const GeometryScenario& geometry,
                                   const PhaseCoefficients& coeffs, const Amplitudes& amplitudes) {
  if (z_cm.empty()) throw InvalidInput("intensity profile needs a non-empty z grid");
  for (std::size_t i = 0; i < z_cm.size(); ++i) {
    if (!(z_cm[i] >= 0.0)) throw InvalidInput("z grid must be >= 0 cm");
    if (i > 0 && !(z_cm[i] > z_cm[i - 1])) throw InvalidInput("z grid must be strictly increasing");
  }
  IntensityProfile out;
  out.z_cm.assign(z_cm.begin(), z_cm.end());
  out.chi = sweep::chi_grid(coeffs, geometry, z_cm);
  const auto dphi = sweep::phase_grid(coeffs, geometry, z_cm, 2.0 * units::two_pi);

  const std::size_t n = z_cm.size();
  out.sin2.resize(n);
  out.cos2.resize(n);
  out.phenom.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double s = std::sin(out.chi[i]);
    const double c = std::cos(out.chi[i]);
    out.sin2[i] = s * s;
    out.cos2[i] = c * c;
    out.phenom[i] = intensity({amplitudes.elastic, amplitudes.sideband, dphi[i]});
  }
  normalize_to_unit_max(out.sin2);
  normalize_to_unit_max(out.cos2);
  normalize_to_unit_max(out.phenom);
  return out;
}

}  // namespace shbeat
