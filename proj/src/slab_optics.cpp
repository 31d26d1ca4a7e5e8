#include "shbeat/slab_optics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"

namespace shbeat {

namespace {

double vacuum_wavenumber(double wavelength_angstrom) {
  return units::two_pi / (wavelength_angstrom * units::angstrom_to_m);
}

}  // namespace

void SlabGeometry::validate() const {
  if (!(refractive_index > 1.0) || !std::isfinite(refractive_index)) {
    throw InvalidInput("slab refractive index must be > 1 for guided modes");
  }
  if (!(thickness_angstrom > 0.0) || !std::isfinite(thickness_angstrom)) {
    throw InvalidInput("slab thickness must be > 0 angstrom");
  }
  if (!(vacuum_wavelength_angstrom > 0.0) || !std::isfinite(vacuum_wavelength_angstrom)) {
    throw InvalidInput("vacuum wavelength must be > 0 angstrom");
  }
}

ModeSolution ModeSolution::from_effective_index(double refractive_index, double effective_index,
                                                double vacuum_wavelength_angstrom,
                                                int mode_label) {
  if (!(effective_index > 1.0) || !(effective_index <= refractive_index)) {
    std::ostringstream msg;
    msg << "effective index " << effective_index << " is not guided in (1, "
        << refractive_index << "]";
    throw DomainError(msg.str());
  }
  if (!(vacuum_wavelength_angstrom > 0.0)) throw InvalidInput("vacuum wavelength must be > 0");
  const double k0 = vacuum_wavenumber(vacuum_wavelength_angstrom);
  const double n = refractive_index;
  ModeSolution mode;
  mode.mode_label = mode_label;
  mode.refractive_index = n;
  mode.effective_index = effective_index;
  mode.tilt_angle = std::acos(effective_index / n);
  mode.transverse_wavenumber = k0 * std::sqrt((n - effective_index) * (n + effective_index));
  mode.decay_constant = k0 * std::sqrt((effective_index - 1.0) * (effective_index + 1.0));
  return mode;
}

double tm1_cutoff_thickness(double refractive_index, double vacuum_wavelength_angstrom) {
  if (!(refractive_index > 1.0)) {
    throw DomainError("no total internal reflection for n <= 1");
  }
  if (!(vacuum_wavelength_angstrom > 0.0)) throw InvalidInput("vacuum wavelength must be > 0");
  return vacuum_wavelength_angstrom /
         (2.0 * std::sqrt(refractive_index * refractive_index - 1.0));
}

int mode_count(const SlabGeometry& geom) {
  geom.validate();
  const double cutoff = tm1_cutoff_thickness(geom.refractive_index, geom.vacuum_wavelength_angstrom);
  return 1 + static_cast<int>(std::floor(geom.thickness_angstrom / cutoff));
}

double tm0_dispersion_residual(const SlabGeometry& geom, double effective_index) {
  const double k0 = vacuum_wavenumber(geom.vacuum_wavelength_angstrom);
  const double n = geom.refractive_index;
  const double ne = effective_index;
  const double kappa = k0 * std::sqrt(std::max(0.0, (n - ne) * (n + ne)));
  const double gamma = k0 * std::sqrt(std::max(0.0, (ne - 1.0) * (ne + 1.0)));
  const double half_d = 0.5 * geom.thickness_angstrom * units::angstrom_to_m;
  return kappa * half_d - std::atan2(n * n * gamma, kappa);
}

ModeSolution solve_tm0_mode(const SlabGeometry& geom) {
  geom.validate();
  double lo = 1.0;
  double hi = geom.refractive_index;
  double f_lo = tm0_dispersion_residual(geom, lo);
  const double f_hi = tm0_dispersion_residual(geom, hi);
  if (!(f_lo > 0.0 && f_hi < 0.0)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "TM0 root not bracketed on [" << lo << ", " << hi << "]: residuals " << f_lo
        << ", " << f_hi;
    throw NumericalError(msg.str());
  }
  // Bisect down to adjacent doubles; the residual is strictly decreasing.
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = tm0_dispersion_residual(geom, mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  if (!(root > 1.0 && root < geom.refractive_index)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "TM0 root " << root << " collapsed onto the bracket edge [1, "
        << geom.refractive_index << "]";
    throw NumericalError(msg.str());
  }
  return ModeSolution::from_effective_index(geom.refractive_index, root,
                                            geom.vacuum_wavelength_angstrom, 0);
}

}  // namespace shbeat
