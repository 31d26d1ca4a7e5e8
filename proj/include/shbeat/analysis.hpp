#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shbeat/beating.hpp"

namespace shbeat {

struct ReportedWavelength {
  double value_cm = 0.0;
  std::optional<double> uncertainty_cm;
  std::string source;
};

/// Measured beating data for one experiment series.
struct ExperimentRecord {
  std::vector<ReportedWavelength> reported_wavelengths;
  std::vector<double> maxima_cm;
  double reference_maximum_cm = 10.2;

  /// 1.70, 1.75 and 1.73 +- 0.01 cm; maxima at 10.2, 15.3 and 34.0 cm.
  /// Some published copies print the 1.70 value in angstrom; it is cm.
  static ExperimentRecord schwarz_dataset();
  void validate() const;
};

/// u and r at z0 making the fixed-ratio wavelength equal a target.
struct FixedRatioFit {
  double ratio = 0.0;
  double focus_distance_cm = 0.0;
  bool at_boundary = false;
};

/// Under fixed u the phase is linear in z and lambda_b is constant. Throws
/// InfeasibleError (band in cm) when the target lies outside
/// [collimated wavelength, asymptote].
FixedRatioFit fit_fixed_ratio(const ExperimentRecord& record, double target_lambda_b_cm,
                              const PhaseCoefficients& coeffs);

struct MaximaSpacing {
  double z_from_cm = 0.0;
  double z_to_cm = 0.0;
  double spacing_cm = 0.0;
  double half_periods = 0.0;  // spacing / (lambda_b / 2)
  long nearest_integer = 0;
  double residual = 0.0;      // |half_periods - nearest_integer|
};

struct MaximaReport {
  std::vector<MaximaSpacing> spacings;
  double threshold = 0.05;
  bool consistent = true;
};

/// Checks successive maxima (sorted) against an intensity period lambda_b/2.
MaximaReport check_maxima_consistency(const ExperimentRecord& record, double lambda_b_cm,
                                      double threshold = 0.05);

struct Figure2Curve {
  double mode_order = 0.0;
  double focus_distance_cm = 0.0;
  std::vector<double> z_cm;
  std::vector<double> lambda_b_cm;
};

/// lambda_b(z) under fixed r for each m, with r solved so chi(z0) = m pi.
std::vector<Figure2Curve> reproduce_figure2(const PhaseCoefficients& coeffs, double z0_cm,
                                            std::span<const double> mode_orders,
                                            std::span<const double> z_grid_cm);

/// Interior local maxima of a sampled curve, refined by a parabola through
/// the three samples around each peak. Plateaus are skipped.
std::vector<double> locate_maxima(std::span<const double> x, std::span<const double> y);

}  // namespace shbeat
