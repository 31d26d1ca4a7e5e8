#include "shbeat/beating.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "shbeat/constants.hpp"
#include "shbeat/detail/phase_formulas.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

PhaseCoefficients PhaseCoefficients::from(const BeamParameters& beam, const LaserField& laser,
                                          double effective_index) {
  if (!(effective_index >= 1.0) || !std::isfinite(effective_index)) {
    throw InvalidInput("effective index must be >= 1, got " + std::to_string(effective_index));
  }
  const double v = beam.velocity_ratio();
  if (!(v > 0.0)) throw InvalidInput("beating formulas need a moving beam (T > 0)");
  return PhaseCoefficients{lambda_b0(beam, laser), v * v, effective_index};
}

PhaseCoefficients PhaseCoefficients::from(const BeamParameters& beam, const LaserField& laser,
                                          const ModeSolution& mode) {
  return from(beam, laser, mode.effective_index);
}

double PhaseCoefficients::wavelength_at_ratio(double ratio) const {
  const double denom = 1.0 - velocity_ratio_sq * (1.0 - effective_index * effective_index * ratio);
  if (!(denom > 0.0)) throw DomainError("beating wavelength denominator is not positive");
  return lambda_b0_cm / denom;
}

double PhaseCoefficients::asymptotic_wavelength_cm() const {
  return lambda_b0_cm / (1.0 - velocity_ratio_sq);
}

std::string_view to_string(FocusScheme scheme) {
  switch (scheme) {
    case FocusScheme::collimated: return "collimated";
    case FocusScheme::fixed_r: return "fixed_r";
    case FocusScheme::fixed_ratio: return "fixed_ratio";
  }
  return "unknown";
}

FocusScheme focus_scheme_from_string(std::string_view name) {
  if (name == "collimated") return FocusScheme::collimated;
  if (name == "fixed_r") return FocusScheme::fixed_r;
  if (name == "fixed_ratio") return FocusScheme::fixed_ratio;
  throw InvalidInput("unknown focus scheme '" + std::string(name) +
                     "' (expected collimated, fixed_r or fixed_ratio)");
}

double GeometryScenario::focus_ratio_at(double z) const {
  switch (scheme) {
    case FocusScheme::collimated: return 1.0;
    case FocusScheme::fixed_r: return detail::focus_ratio(z, focus_distance_cm);
    case FocusScheme::fixed_ratio: return ratio;
  }
  return 1.0;
}

void GeometryScenario::validate() const {
  if (!(z_cm >= 0.0) || !std::isfinite(z_cm)) throw InvalidInput("film-target distance z must be >= 0 cm");
  if (scheme == FocusScheme::fixed_r &&
      (!(focus_distance_cm > 0.0) || !std::isfinite(focus_distance_cm))) {
    throw InvalidInput("fixed_r scheme needs a finite focus distance r > 0 cm");
  }
  if (scheme == FocusScheme::fixed_ratio && !(ratio > 0.0 && ratio < 1.0)) {
    throw InvalidInput("fixed_ratio scheme needs 0 < r/(z+r) < 1");
  }
}

std::string_view to_string(BeatingModel model) {
  switch (model) {
    case BeatingModel::planewave: return "planewave";
    case BeatingModel::tm0: return "tm0";
    case BeatingModel::divergent: return "divergent";
  }
  return "unknown";
}

BeatingModel beating_model_from_string(std::string_view name) {
  if (name == "planewave") return BeatingModel::planewave;
  if (name == "tm0") return BeatingModel::tm0;
  if (name == "divergent") return BeatingModel::divergent;
  throw InvalidInput("unknown beating model '" + std::string(name) +
                     "' (expected planewave, tm0 or divergent)");
}

DensitySample probability_density(const ModulationField& field, const SidebandSet& sidebands,
                                  const SlabCoupling& coupling, const LaserField& laser) {
  if (!(field.z_cm >= 0.0)) throw InvalidInput("density is defined behind the slab only (z >= 0)");
  if (!(coupling.beta >= 0.0)) throw InvalidInput("coupling beta must be >= 0");
  constexpr double hbar = PhysicalConstants::reduced_planck;
  const double x = field.x_cm * units::cm_to_m;
  const double z = field.z_cm * units::cm_to_m;

  const double stationary = std::sin(z / (2.0 * hbar) * sidebands.momentum_deficit);
  const double thickness = std::sin(units::pi * coupling.thickness_angstrom /
                                    (2.0 * coupling.optimal_thickness_angstrom));
  const double optical = std::cos(sidebands.medium_wavenumber * x -
                                  laser.angular_frequency() * field.t_s +
                                  z / (2.0 * hbar) * sidebands.momentum_split);
  DensitySample out;
  out.density = field.baseline_density * (1.0 - coupling.beta * stationary * thickness * optical);
  out.unphysical_regime = coupling.beta > 1.0;
  return out;
}

double lambda_b_planewave(const BeamParameters& beam, const LaserField& laser,
                          double refractive_index) {
  if (!(refractive_index >= 1.0)) throw InvalidInput("refractive index must be >= 1");
  return PhaseCoefficients::from(beam, laser, refractive_index).collimated_wavelength_cm();
}

double lambda_b_tm0(const BeamParameters& beam, const LaserField& laser, const ModeSolution& mode) {
  if (!(mode.effective_index > 1.0)) {
    std::ostringstream msg;
    msg << "guidance violated: n cos(alpha) = " << mode.effective_index << " <= 1";
    throw DomainError(msg.str());
  }
  return PhaseCoefficients::from(beam, laser, mode).collimated_wavelength_cm();
}

double chi_divergent(const GeometryScenario& scenario, const PhaseCoefficients& coeffs) {
  scenario.validate();
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  return detail::phase_at(units::two_pi, scenario.z_cm, coeffs.lambda_b0_cm,
                          coeffs.velocity_ratio_sq, neff2, scenario.focus_ratio_at(scenario.z_cm));
}

double chi_divergent(const GeometryScenario& scenario, const BeamParameters& beam,
                     const LaserField& laser, const ModeSolution& mode) {
  return chi_divergent(scenario, PhaseCoefficients::from(beam, laser, mode));
}

double lambda_b_local(const GeometryScenario& scenario, const PhaseCoefficients& coeffs) {
  scenario.validate();
  if (scenario.scheme != FocusScheme::fixed_r) {
    return coeffs.wavelength_at_ratio(scenario.focus_ratio_at(scenario.z_cm));
  }
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  return detail::local_wavelength_fixed_r(scenario.z_cm, scenario.focus_distance_cm,
                                          coeffs.lambda_b0_cm, coeffs.velocity_ratio_sq, neff2);
}

double lambda_b_local(const GeometryScenario& scenario, const BeamParameters& beam,
                      const LaserField& laser, const ModeSolution& mode) {
  return lambda_b_local(scenario, PhaseCoefficients::from(beam, laser, mode));
}

BeatingPrediction predict_beating(BeatingModel model, const GeometryScenario& scenario,
                                  const BeamParameters& beam, const LaserField& laser,
                                  const ModeSolution& mode) {
  BeatingPrediction out;
  out.model_tag = model;
  PhaseCoefficients coeffs;
  GeometryScenario geom = scenario;
  switch (model) {
    case BeatingModel::planewave:
      coeffs = PhaseCoefficients::from(beam, laser, mode.refractive_index);
      geom.scheme = FocusScheme::collimated;
      break;
    case BeatingModel::tm0:
      lambda_b_tm0(beam, laser, mode);  // guidance check
      coeffs = PhaseCoefficients::from(beam, laser, mode);
      geom.scheme = FocusScheme::collimated;
      break;
    case BeatingModel::divergent:
      coeffs = PhaseCoefficients::from(beam, laser, mode);
      break;
  }
  out.phase = chi_divergent(geom, coeffs);
  out.local_wavelength_cm = lambda_b_local(geom, coeffs);
  out.asymptotic_wavelength_cm = geom.scheme == FocusScheme::fixed_r
                                     ? coeffs.asymptotic_wavelength_cm()
                                     : out.local_wavelength_cm;
  return out;
}

PhaseBand feasible_mode_orders(double z0_cm, const PhaseCoefficients& coeffs) {
  if (!(z0_cm > 0.0)) throw InvalidInput("reference distance z0 must be > 0 cm");
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  const auto m_at = [&](double u) {
    return detail::phase_at(units::two_pi, z0_cm, coeffs.lambda_b0_cm, coeffs.velocity_ratio_sq,
                            neff2, u) /
           units::pi;
  };
  return PhaseBand{m_at(0.0), m_at(1.0)};
}

FocusSolution solve_r_for_phase(double z0_cm, double mode_order, const PhaseCoefficients& coeffs) {
  const PhaseBand band = feasible_mode_orders(z0_cm, coeffs);
  const double v2 = coeffs.velocity_ratio_sq;
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  // m pi = (2 pi z0 / lambda_b0)(1 - v^2 + v^2 n_eff^2 u)
  const double u =
      (mode_order * coeffs.lambda_b0_cm / (2.0 * z0_cm) - 1.0 + v2) / (v2 * neff2);

  constexpr double edge = 1e-12;
  FocusSolution out;
  if (std::abs(u - 1.0) <= edge) {
    out.ratio = 1.0;
    out.focus_distance_cm = std::numeric_limits<double>::infinity();
    out.at_boundary = true;
    return out;
  }
  if (std::abs(u) <= edge) {
    out.ratio = 0.0;
    out.focus_distance_cm = 0.0;
    out.at_boundary = true;
    return out;
  }
  if (!(u > 0.0 && u < 1.0)) {
    std::ostringstream msg;
    msg.precision(10);
    msg << "mode order m = " << mode_order << " is outside the feasible band (" << band.low
        << ", " << band.high << ") at z0 = " << z0_cm << " cm";
    throw InfeasibleError(msg.str(), band.low, band.high);
  }
  out.ratio = u;
  out.focus_distance_cm = z0_cm * u / (1.0 - u);
  return out;
}

}  // namespace shbeat
