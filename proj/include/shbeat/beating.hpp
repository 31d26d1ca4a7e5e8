#pragma once

#include <limits>
#include <string_view>

#include "shbeat/kinematics.hpp"
#include "shbeat/slab_optics.hpp"

namespace shbeat {

/// The three scalars every first-order beating formula is built from.
/// Kept separate from ModeSolution so an effective index can be supplied
/// directly (e.g. one inferred from measured maxima instead of a solve).
struct PhaseCoefficients {
  double lambda_b0_cm = 0.0;
  double velocity_ratio_sq = 0.0;  // (v0/c)^2
  double effective_index = 1.0;    // n cos(alpha)

  static PhaseCoefficients from(const BeamParameters& beam, const LaserField& laser,
                                double effective_index);
  static PhaseCoefficients from(const BeamParameters& beam, const LaserField& laser,
                                const ModeSolution& mode);

  /// Wavelength for a given ratio u = r/(z+r): lambda_b0 / (1 - v^2 (1 - n_eff^2 u)).
  double wavelength_at_ratio(double ratio) const;
  /// z -> infinity limit under fixed r, lambda_b0 / (1 - v^2).
  double asymptotic_wavelength_cm() const;
  /// Collimated (u = 1) wavelength.
  double collimated_wavelength_cm() const { return wavelength_at_ratio(1.0); }
};

enum class FocusScheme { collimated, fixed_r, fixed_ratio };

std::string_view to_string(FocusScheme scheme);
FocusScheme focus_scheme_from_string(std::string_view name);

/// Film-to-target geometry. Lengths in cm.
struct GeometryScenario {
  FocusScheme scheme = FocusScheme::collimated;
  double z_cm = 0.0;
  double focus_distance_cm = std::numeric_limits<double>::infinity();  // r, fixed_r
  double ratio = 1.0;                                                   // u, fixed_ratio
  double reference_distance_cm = 10.2;                                  // z0
  double mode_order = 12.0;                                             // m = chi(z0)/pi

  /// u = r/(z+r) at distance z for this scheme (1 when collimated).
  double focus_ratio_at(double z_cm) const;
  void validate() const;
};

enum class BeatingModel { planewave, tm0, divergent };

std::string_view to_string(BeatingModel model);
BeatingModel beating_model_from_string(std::string_view name);

struct BeatingPrediction {
  BeatingModel model_tag = BeatingModel::divergent;
  double phase = 0.0;  // chi, radians
  double local_wavelength_cm = 0.0;
  double asymptotic_wavelength_cm = 0.0;
};

/// Sample point for the electron probability density behind the slab.
struct ModulationField {
  double baseline_density = 1.0;  // rho0
  double x_cm = 0.0;
  double z_cm = 0.0;
  double t_s = 0.0;
};

struct DensitySample {
  double density = 0.0;
  /// Set when beta > 1: the first-order density may go negative.
  bool unphysical_regime = false;
};

/// First-order electron probability density at (x, z, t) with momenta taken
/// from the exact sideband set.
DensitySample probability_density(const ModulationField& field, const SidebandSet& sidebands,
                                  const SlabCoupling& coupling, const LaserField& laser);

/// Plane-wave light inside a slab of index n: lambda_b0 / (1 - v^2 (1 - n^2)).
double lambda_b_planewave(const BeamParameters& beam, const LaserField& laser,
                          double refractive_index);

/// Single guided TM mode: lambda_b0 / (1 - v^2 (1 - n^2 cos^2 alpha)).
/// Throws DomainError if n cos(alpha) <= 1.
double lambda_b_tm0(const BeamParameters& beam, const LaserField& laser, const ModeSolution& mode);

/// Beating phase chi(z) for a focus r before the film (divergent beam).
double chi_divergent(const GeometryScenario& scenario, const PhaseCoefficients& coeffs);
double chi_divergent(const GeometryScenario& scenario, const BeamParameters& beam,
                     const LaserField& laser, const ModeSolution& mode);

/// Local wavelength 2 pi / (d chi / dz). Closed form under fixed r; constant
/// under the fixed-ratio and collimated schemes.
double lambda_b_local(const GeometryScenario& scenario, const PhaseCoefficients& coeffs);
double lambda_b_local(const GeometryScenario& scenario, const BeamParameters& beam,
                      const LaserField& laser, const ModeSolution& mode);

BeatingPrediction predict_beating(BeatingModel model, const GeometryScenario& scenario,
                                  const BeamParameters& beam, const LaserField& laser,
                                  const ModeSolution& mode);

/// Open interval of m = chi(z0)/pi reachable as u sweeps (0, 1).
struct PhaseBand {
  double low = 0.0;   // u -> 0
  double high = 0.0;  // u -> 1 (collimated)
};
PhaseBand feasible_mode_orders(double z0_cm, const PhaseCoefficients& coeffs);

/// Result of inverting for a focus distance. at_boundary marks a target
/// sitting on a band edge (u == 1 gives r = +inf, u == 0 gives r = 0).
struct FocusSolution {
  double ratio = 0.0;  // u
  double focus_distance_cm = 0.0;
  bool at_boundary = false;
};

/// Unique r with chi(z0; r) = m pi. chi is affine in u, so the inversion is
/// closed form. Throws InfeasibleError carrying the band for m outside it.
FocusSolution solve_r_for_phase(double z0_cm, double mode_order, const PhaseCoefficients& coeffs);

}  // namespace shbeat
