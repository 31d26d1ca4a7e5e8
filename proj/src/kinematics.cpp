#include "shbeat/kinematics.hpp"

#include <cmath>
#include <string>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

namespace {
constexpr double c = PhysicalConstants::light_speed;
constexpr double hbar = PhysicalConstants::reduced_planck;
constexpr double rest_J = PhysicalConstants::electron_rest_energy_J;
}  // namespace

BeamParameters BeamParameters::from_kinetic_energy(double kinetic_energy_keV,
                                                   std::optional<double> current_uA) {
  if (!std::isfinite(kinetic_energy_keV) || kinetic_energy_keV < 0.0) {
    throw InvalidInput("kinetic energy must be finite and >= 0 keV, got " +
                       std::to_string(kinetic_energy_keV));
  }
  if (current_uA && (!std::isfinite(*current_uA) || *current_uA < 0.0)) {
    throw InvalidInput("beam current must be finite and >= 0 uA");
  }
  const double kinetic_J = kinetic_energy_keV * units::keV_to_J;
  const double total = rest_J + kinetic_J;
  // (p c)^2 = T (T + 2 m c^2) avoids cancelling E^2 - (m c^2)^2 at low T.
  const double pc = std::sqrt(kinetic_J * (kinetic_J + 2.0 * rest_J));
  return BeamParameters(total, pc / c, current_uA);
}

double BeamParameters::kinetic_energy_keV() const {
  const double pc = momentum_ * c;
  return pc * pc / (total_energy_J_ + rest_J) / units::keV_to_J;
}

double BeamParameters::total_energy_keV() const { return total_energy_J_ / units::keV_to_J; }

double BeamParameters::velocity_ratio() const { return momentum_ * c / total_energy_J_; }

double BeamParameters::lorentz_gamma() const { return total_energy_J_ / rest_J; }

LaserField LaserField::from_vacuum_wavelength(double wavelength_angstrom,
                                              std::optional<double> intensity_W_per_cm2) {
  if (!std::isfinite(wavelength_angstrom) || wavelength_angstrom <= 0.0) {
    throw InvalidInput("laser wavelength must be finite and > 0 angstrom");
  }
  if (intensity_W_per_cm2 && (!std::isfinite(*intensity_W_per_cm2) || *intensity_W_per_cm2 < 0.0)) {
    throw InvalidInput("laser intensity must be finite and >= 0 W/cm^2");
  }
  return LaserField(wavelength_angstrom, intensity_W_per_cm2);
}

double LaserField::vacuum_wavelength_m() const { return wavelength_angstrom_ * units::angstrom_to_m; }

double LaserField::angular_frequency() const { return units::two_pi * c / vacuum_wavelength_m(); }

double LaserField::photon_energy_J() const { return hbar * angular_frequency(); }

double LaserField::photon_energy_eV() const { return photon_energy_J() / units::eV_to_J; }

BeamParameters beam_from_kinetic_energy(double kinetic_energy_keV) {
  return BeamParameters::from_kinetic_energy(kinetic_energy_keV);
}

double energy_ratio(const BeamParameters& beam, const LaserField& laser) {
  return beam.total_energy_J() / laser.photon_energy_J();
}

SidebandSet sideband_momenta(const BeamParameters& beam, const LaserField& laser,
                             double refractive_index) {
  if (!std::isfinite(refractive_index) || refractive_index < 1.0) {
    throw InvalidInput("medium refractive index must be >= 1, got " +
                       std::to_string(refractive_index));
  }
  const double omega = laser.angular_frequency();
  const double photon = laser.photon_energy_J();
  const double k = refractive_index * omega / c;
  const double e0 = beam.total_energy_J();
  const double p0 = beam.momentum();

  SidebandSet set;
  set.medium_wavenumber = k;

  // delta_n = p_nz^2 - p0^2, expanded so the p0^2 terms cancel analytically.
  std::array<double, 3> delta{};
  for (int order = -1; order <= 1; ++order) {
    const double eps = order * photon;
    const double px = order * hbar * k;
    const double d = (2.0 * e0 * eps + eps * eps) / (c * c) - px * px;
    const double pz_sq = p0 * p0 + d;
    if (!(pz_sq > 0.0)) {
      throw DomainError("sideband n = " + std::to_string(order) +
                        " is evanescent (p_z^2 <= 0) for this beam energy");
    }
    auto& ch = set.channels[static_cast<std::size_t>(order + 1)];
    ch.order = order;
    ch.energy_J = e0 + eps;
    ch.momentum_x = px;
    ch.momentum_z = order == 0 ? p0 : std::sqrt(pz_sq);
    delta[static_cast<std::size_t>(order + 1)] = d;
  }

  const double p_minus = set.at(-1).momentum_z;
  const double p_plus = set.at(1).momentum_z;
  set.momentum_deficit = -(delta[2] / (p_plus + p0) + delta[0] / (p_minus + p0));
  set.momentum_split = (delta[2] - delta[0]) / (p_plus + p_minus);
  return set;
}

double lambda_b0(const BeamParameters& beam, const LaserField& laser) {
  const double v = beam.velocity_ratio();
  return 2.0 * laser.vacuum_wavelength_m() * energy_ratio(beam, laser) * v * v * v *
         units::m_to_cm;
}

double optimal_thickness_d0(const BeamParameters& beam, const LaserField& laser) {
  return 0.5 * laser.vacuum_wavelength_angstrom() * beam.velocity_ratio();
}

double absorption_probability(const SlabCoupling& coupling) {
  if (!(coupling.beta >= 0.0)) throw InvalidInput("coupling beta must be >= 0");
  if (!(coupling.thickness_angstrom >= 0.0)) throw InvalidInput("slab thickness must be >= 0");
  if (!(coupling.optimal_thickness_angstrom > 0.0)) {
    throw InvalidInput("optimal thickness d0 must be > 0");
  }
  const double q = coupling.beta / 4.0;
  const double s = std::sin(units::pi * coupling.thickness_angstrom /
                            (2.0 * coupling.optimal_thickness_angstrom));
  return q * q * s * s;
}

}  // namespace shbeat
