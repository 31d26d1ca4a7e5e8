#pragma once

#include <array>
#include <optional>

namespace shbeat {

/// State of a monoenergetic relativistic electron beam.
///
/// Built from the kinetic energy; total energy and momentum are stored in SI
/// and every other reader is derived from them, so the mass-shell relation
/// holds to rounding.
class BeamParameters {
 public:
  static BeamParameters from_kinetic_energy(double kinetic_energy_keV,
                                            std::optional<double> current_uA = {});

  double kinetic_energy_keV() const;
  double total_energy_J() const { return total_energy_J_; }
  double total_energy_keV() const;
  /// p0 in kg m/s.
  double momentum() const { return momentum_; }
  /// v0/c = p0 c / E0.
  double velocity_ratio() const;
  double lorentz_gamma() const;
  std::optional<double> current_uA() const { return current_uA_; }

 private:
  BeamParameters(double total_energy_J, double momentum, std::optional<double> current_uA)
      : total_energy_J_(total_energy_J), momentum_(momentum), current_uA_(current_uA) {}

  double total_energy_J_;
  double momentum_;
  std::optional<double> current_uA_;
};

/// Monochromatic laser light, characterised by its vacuum wavelength.
class LaserField {
 public:
  static LaserField from_vacuum_wavelength(double wavelength_angstrom,
                                           std::optional<double> intensity_W_per_cm2 = {});

  double vacuum_wavelength_angstrom() const { return wavelength_angstrom_; }
  double vacuum_wavelength_m() const;
  /// omega in rad/s.
  double angular_frequency() const;
  double photon_energy_J() const;
  double photon_energy_eV() const;
  std::optional<double> intensity_W_per_cm2() const { return intensity_; }

 private:
  LaserField(double wavelength_angstrom, std::optional<double> intensity)
      : wavelength_angstrom_(wavelength_angstrom), intensity_(intensity) {}

  double wavelength_angstrom_;
  std::optional<double> intensity_;
};

/// One electron channel after the slab: n photons absorbed (n = +1),
/// emitted (n = -1) or none (n = 0).
struct Sideband {
  int order = 0;
  double energy_J = 0.0;
  double momentum_x = 0.0;  // kg m/s
  double momentum_z = 0.0;  // kg m/s
};

/// The three channels of one-photon exchange inside a medium of index n.
struct SidebandSet {
  std::array<Sideband, 3> channels;  // orders -1, 0, +1
  double medium_wavenumber = 0.0;    // k = n omega / c, 1/m
  /// 2 p0 - p_{+1,z} - p_{-1,z}, evaluated without subtractive cancellation.
  double momentum_deficit = 0.0;
  /// p_{+1,z} - p_{-1,z}.
  double momentum_split = 0.0;

  const Sideband& at(int order) const { return channels.at(static_cast<std::size_t>(order + 1)); }
};

/// Laser coupling inside the slab and the slab thickness it acts over.
struct SlabCoupling {
  double beta = 0.35;
  double thickness_angstrom = 0.0;
  double optimal_thickness_angstrom = 1.0;
};

BeamParameters beam_from_kinetic_energy(double kinetic_energy_keV);

/// E0 / (hbar omega).
double energy_ratio(const BeamParameters& beam, const LaserField& laser);

/// Exact mass-shell momenta of the three channels. Throws DomainError if a
/// sideband would be evanescent (p_z^2 <= 0), InvalidInput for n < 1.
SidebandSet sideband_momenta(const BeamParameters& beam, const LaserField& laser,
                             double refractive_index);

/// Vacuum beating wavelength 2 lambda_p (E0/hbar omega)(v0/c)^3, in cm.
double lambda_b0(const BeamParameters& beam, const LaserField& laser);

/// Smallest thickness maximising one-photon exchange, lambda_p (v0/c) / 2,
/// in angstrom. Equivalent to pi hbar v0 / (hbar omega).
double optimal_thickness_d0(const BeamParameters& beam, const LaserField& laser);

/// (beta/4)^2 sin^2(pi d / 2 d0).
double absorption_probability(const SlabCoupling& coupling);

}  // namespace shbeat
