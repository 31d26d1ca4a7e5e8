#pragma once

#include <span>
#include <vector>

#include "shbeat/beating.hpp"

namespace shbeat {

/// Two light fields thrown off at the target by the elastic (amplitude a)
/// and the photon-carrying (amplitude b) electron beams.
struct InterferenceField {
  double amplitude_elastic = 1.0;
  double amplitude_sideband = 1.0;
  double phase_difference = 0.0;  // radians
};

/// a^2 + b^2 + 2ab cos(dphi). Throws InvalidInput for negative amplitudes.
double intensity(const InterferenceField& field);

/// Light phase difference at the target, (4 pi z / lambda_b0)(...): twice the
/// electron beating phase for the same geometry.
double delta_phi(const GeometryScenario& scenario, const PhaseCoefficients& coeffs);
double delta_phi(const GeometryScenario& scenario, const BeamParameters& beam,
                 const LaserField& laser, const ModeSolution& mode);

/// 2ab / (a^2 + b^2). Throws InvalidInput when a = b = 0.
double modulation_depth(double a, double b);

/// Both b/a ratios giving a modulation depth D, the roots of
/// D x^2 - 2 x + D = 0. They are reciprocal.
struct AmplitudeRatios {
  double below_one = 0.0;
  double above_one = 0.0;
};
AmplitudeRatios amplitude_ratios_for_depth(double depth);

struct Amplitudes {
  double elastic = 0.0;
  double sideband = 0.0;
};

/// a = sqrt(kappa J_elastic), b = sqrt(kappa J_sideband), so the intensity
/// is linear in the beam current.
Amplitudes amplitudes_from_currents(double current_elastic, double current_sideband,
                                    double kappa = 1.0);

struct TransportBudget {
  double beam_current_uA = 0.4;
  double carrying_fraction = 1e-3;
  double photon_energy_eV = 2.54;
};

/// (I / e) * fraction * photon energy, in W.
double transported_power(const TransportBudget& budget);

/// Carrying fraction needed to deliver target_power_W.
double carrying_fraction_for_power(double target_power_W, double beam_current_uA,
                                   double photon_energy_eV);

/// Three candidate intensity laws over a z grid, each scaled to a unit
/// maximum on the grid.
struct IntensityProfile {
  std::vector<double> z_cm;
  std::vector<double> chi;
  std::vector<double> sin2;     // quantum-model initial phase
  std::vector<double> cos2;     // maximum-at-surface initial phase
  std::vector<double> phenom;   // two-beam light interference
};

IntensityProfile intensity_profile(std::span<const double> z_cm, const GeometryScenario& geometry,
                                   const PhaseCoefficients& coeffs, const Amplitudes& amplitudes);

}  // namespace shbeat
