#pragma once

#include <numbers>

namespace shbeat {

/// Physical constants (CODATA 2018 exact/recommended values) and the unit
/// conversions used at the public boundary. Internal arithmetic is SI.
struct PhysicalConstants {
  static constexpr double light_speed = 299'792'458.0;          // m/s
  static constexpr double reduced_planck = 1.054'571'817e-34;   // J s
  static constexpr double elementary_charge = 1.602'176'634e-19; // C
  // m c^2 = 510.998950 keV, kept to 6 significant digits beyond the decimal
  static constexpr double electron_rest_energy_keV = 510.998'950;
  static constexpr double electron_rest_energy_J =
      electron_rest_energy_keV * 1.0e3 * elementary_charge;
};

namespace units {
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline constexpr double keV_to_J = 1.0e3 * PhysicalConstants::elementary_charge;
inline constexpr double eV_to_J = PhysicalConstants::elementary_charge;
inline constexpr double angstrom_to_m = 1.0e-10;
inline constexpr double cm_to_m = 1.0e-2;
inline constexpr double uA_to_A = 1.0e-6;

inline constexpr double m_to_angstrom = 1.0e10;
inline constexpr double m_to_cm = 1.0e2;
}  // namespace units

}  // namespace shbeat
