#pragma once

// Scalar reference formulas shared by the library and the scalar sweep
// kernels. The vector kernels evaluate the same operations in the same order.

namespace shbeat::detail {

inline double focus_ratio(double z, double r) { return r / (z + r); }

/// scale * z / lambda_b0 * (1 - v^2 (1 - n_eff^2 u)); scale is 2 pi for chi
/// and 4 pi for the light phase difference.
inline double phase_at(double scale, double z, double lambda_b0, double v2, double neff2,
                       double u) {
  const double bracket = 1.0 - v2 * (1.0 - neff2 * u);
  return scale * z / lambda_b0 * bracket;
}

inline double local_wavelength_fixed_r(double z, double r, double lambda_b0, double v2,
                                       double neff2) {
  const double q = r / (z + r);
  return lambda_b0 / (1.0 - v2 * (1.0 - neff2 * (q * q)));
}

}  // namespace shbeat::detail
