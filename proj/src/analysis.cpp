#include "shbeat/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "shbeat/errors.hpp"
#include "shbeat/sweep.hpp"

namespace shbeat {

ExperimentRecord ExperimentRecord::schwarz_dataset() {
  ExperimentRecord rec;
  rec.reported_wavelengths = {
      {1.70, std::nullopt, "recording with maxima"},
      {1.75, std::nullopt, "second measurement"},
      {1.73, 0.01, "third measurement"},
  };
  rec.maxima_cm = {10.2, 15.3, 34.0};
  rec.reference_maximum_cm = 10.2;
  return rec;
}

void ExperimentRecord::validate() const {
  for (const auto& w : reported_wavelengths) {
    if (!(w.value_cm > 0.0)) throw InvalidInput("reported wavelengths must be > 0 cm");
  }
  for (double z : maxima_cm) {
    if (!(z > 0.0)) throw InvalidInput("maxima positions must be > 0 cm");
  }
  if (!(reference_maximum_cm > 0.0)) throw InvalidInput("reference maximum z0 must be > 0 cm");
}

FixedRatioFit fit_fixed_ratio(const ExperimentRecord& record, double target_lambda_b_cm,
                              const PhaseCoefficients& coeffs) {
  record.validate();
  if (!(target_lambda_b_cm > 0.0)) throw InvalidInput("target wavelength must be > 0 cm");
  const double v2 = coeffs.velocity_ratio_sq;
  const double neff2 = coeffs.effective_index * coeffs.effective_index;
  // lambda_b0 / lambda = 1 - v^2 + v^2 n_eff^2 u
  const double u = (coeffs.lambda_b0_cm / target_lambda_b_cm - 1.0 + v2) / (v2 * neff2);
  const double z0 = record.reference_maximum_cm;

  constexpr double edge = 1e-12;
  FixedRatioFit fit;
  if (std::abs(u - 1.0) <= edge) {
    fit.ratio = 1.0;
    fit.focus_distance_cm = std::numeric_limits<double>::infinity();
    fit.at_boundary = true;
    return fit;
  }
  if (std::abs(u) <= edge) {
    fit.ratio = 0.0;
    fit.focus_distance_cm = 0.0;
    fit.at_boundary = true;
    return fit;
  }
  if (!(u > 0.0 && u < 1.0)) {
    const double low = coeffs.collimated_wavelength_cm();
    const double high = coeffs.asymptotic_wavelength_cm();
    std::ostringstream msg;
    msg.precision(10);
    msg << "target lambda_b = " << target_lambda_b_cm << " cm is outside the fixed-ratio band ["
        << low << ", " << high << "] cm";
    throw InfeasibleError(msg.str(), low, high);
  }
  fit.ratio = u;
  fit.focus_distance_cm = z0 * u / (1.0 - u);
  return fit;
}

MaximaReport check_maxima_consistency(const ExperimentRecord& record, double lambda_b_cm,
                                      double threshold) {
  if (!(lambda_b_cm > 0.0)) throw InvalidInput("lambda_b must be > 0 cm");
  std::vector<double> maxima = record.maxima_cm;
  std::sort(maxima.begin(), maxima.end());
  MaximaReport report;
  report.threshold = threshold;
  const double half = 0.5 * lambda_b_cm;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    MaximaSpacing s;
    s.z_from_cm = maxima[i - 1];
    s.z_to_cm = maxima[i];
    s.spacing_cm = s.z_to_cm - s.z_from_cm;
    s.half_periods = s.spacing_cm / half;
    s.nearest_integer = std::lround(s.half_periods);
    s.residual = std::abs(s.half_periods - static_cast<double>(s.nearest_integer));
    if (!(s.residual < threshold)) report.consistent = false;
    report.spacings.push_back(s);
  }
  return report;
}

std::vector<Figure2Curve> reproduce_figure2(const PhaseCoefficients& coeffs, double z0_cm,
                                            std::span<const double> mode_orders,
                                            std::span<const double> z_grid_cm) {
  std::vector<Figure2Curve> curves;
  curves.reserve(mode_orders.size());
  for (double m : mode_orders) {
    const FocusSolution focus = solve_r_for_phase(z0_cm, m, coeffs);
    if (focus.at_boundary) {
      std::ostringstream msg;
      msg << "m = " << m << " sits on the feasible band edge; r is not finite and positive";
      const PhaseBand band = feasible_mode_orders(z0_cm, coeffs);
      throw InfeasibleError(msg.str(), band.low, band.high);
    }
    GeometryScenario geom;
    geom.scheme = FocusScheme::fixed_r;
    geom.focus_distance_cm = focus.focus_distance_cm;
    geom.reference_distance_cm = z0_cm;
    geom.mode_order = m;

    Figure2Curve curve;
    curve.mode_order = m;
    curve.focus_distance_cm = focus.focus_distance_cm;
    curve.z_cm.assign(z_grid_cm.begin(), z_grid_cm.end());
    curve.lambda_b_cm = sweep::local_wavelength_grid(coeffs, geom, z_grid_cm);
    curves.push_back(std::move(curve));
  }
  return curves;
}

std::vector<double> locate_maxima(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidInput("locate_maxima: x and y differ in length");
  std::vector<double> peaks;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (!(y[i] > y[i - 1] && y[i] >= y[i + 1])) continue;
    // Parabola through three (not necessarily uniform) samples.
    const double x0 = x[i - 1], x1 = x[i], x2 = x[i + 1];
    const double y0 = y[i - 1], y1 = y[i], y2 = y[i + 1];
    const double d01 = (y1 - y0) / (x1 - x0);
    const double d12 = (y2 - y1) / (x2 - x1);
    const double curvature = (d12 - d01) / (x2 - x0);
    if (curvature < 0.0) {
      peaks.push_back(0.5 * (x0 + x1) - d01 / (2.0 * curvature));
    } else {
      peaks.push_back(x1);
    }
  }
  return peaks;
}

}  // namespace shbeat
