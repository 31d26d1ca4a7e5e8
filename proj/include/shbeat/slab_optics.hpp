#pragma once

namespace shbeat {

/// Symmetric dielectric slab in vacuum, illuminated at vacuum wavelength
/// lambda_p.
struct SlabGeometry {
  double refractive_index = 1.550;
  double thickness_angstrom = 1007.0;
  double vacuum_wavelength_angstrom = 4880.0;

  /// Throws InvalidInput unless n > 1, d > 0, lambda_p > 0.
  void validate() const;
};

/// A guided TM mode written as two plane waves at angles +-alpha to the slab
/// plane; n_eff = n cos(alpha).
struct ModeSolution {
  int mode_label = 0;
  double refractive_index = 1.0;
  double effective_index = 1.0;
  double tilt_angle = 0.0;             // radians
  double transverse_wavenumber = 0.0;  // kappa inside the slab, 1/m
  double decay_constant = 0.0;         // gamma outside the slab, 1/m

  /// Fills the derived fields from n_eff. Throws DomainError unless
  /// 1 < n_eff <= n; n_eff == n is the alpha = 0 plane-wave limit.
  static ModeSolution from_effective_index(double refractive_index, double effective_index,
                                           double vacuum_wavelength_angstrom, int mode_label = 0);
};

/// Thickness above which TM1 is guided: lambda_p / (2 sqrt(n^2 - 1)).
double tm1_cutoff_thickness(double refractive_index, double vacuum_wavelength_angstrom);

/// Number of guided TM modes, 1 + floor(d / d_TM1).
int mode_count(const SlabGeometry& geom);

/// kappa d / 2 - atan2(n^2 gamma, kappa) for the even TM mode. Zero at the
/// TM0 root, positive below it, negative above; defined on the closed
/// interval [1, n].
double tm0_dispersion_residual(const SlabGeometry& geom, double effective_index);

/// Bisection solve of the TM0 dispersion relation. Throws NumericalError
/// with the bracket if the root cannot be isolated.
ModeSolution solve_tm0_mode(const SlabGeometry& geom);

}  // namespace shbeat
