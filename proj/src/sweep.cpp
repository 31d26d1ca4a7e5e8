#include "shbeat/sweep.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "shbeat/constants.hpp"
#include "shbeat/errors.hpp"
#include "simd/kernels.hpp"

namespace shbeat::sweep {

namespace {

bool host_supports(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(SHBEAT_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select_kernels() {
  if (const char* forced = std::getenv("SHBEAT_ISA"); forced && std::string(forced) == "scalar") {
    return detail::scalar_table();
  }
  const auto isas = available_isas();
  return kernels_for(isas.back());
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out{Isa::scalar};
  if (host_supports(Isa::avx2)) out.push_back(Isa::avx2);
  return out;
}

const KernelTable& kernels_for(Isa isa) {
  if (!host_supports(isa)) {
    throw InvalidInput("kernel ISA " + std::string(to_string(isa)) + " is not available here");
  }
  switch (isa) {
    case Isa::scalar: return detail::scalar_table();
    case Isa::avx2:
#if defined(SHBEAT_HAVE_AVX2)
      return detail::avx2_table();
#else
      break;
#endif
  }
  return detail::scalar_table();
}

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

KernelArgs make_args(const PhaseCoefficients& coeffs, double scale) {
  return KernelArgs{coeffs.lambda_b0_cm, coeffs.velocity_ratio_sq,
                    coeffs.effective_index * coeffs.effective_index, scale};
}

std::vector<double> phase_grid(const PhaseCoefficients& coeffs, const GeometryScenario& geometry,
                               std::span<const double> z_cm, double scale) {
  GeometryScenario probe = geometry;
  probe.z_cm = 0.0;
  probe.validate();
  for (double z : z_cm) {
    if (!(z >= 0.0)) throw InvalidInput("z grid must be >= 0 cm");
  }
  std::vector<double> out(z_cm.size());
  const auto args = make_args(coeffs, scale);
  const auto& k = active_kernels();
  switch (geometry.scheme) {
    case FocusScheme::fixed_r: k.phase_fixed_r(args, geometry.focus_distance_cm, z_cm, out); break;
    case FocusScheme::fixed_ratio: k.phase_fixed_ratio(args, geometry.ratio, z_cm, out); break;
    case FocusScheme::collimated: k.phase_fixed_ratio(args, 1.0, z_cm, out); break;
  }
  return out;
}

std::vector<double> chi_grid(const PhaseCoefficients& coeffs, const GeometryScenario& geometry,
                             std::span<const double> z_cm) {
  return phase_grid(coeffs, geometry, z_cm, units::two_pi);
}

std::vector<double> local_wavelength_grid(const PhaseCoefficients& coeffs,
                                          const GeometryScenario& geometry,
                                          std::span<const double> z_cm) {
  GeometryScenario probe = geometry;
  probe.z_cm = 0.0;
  probe.validate();
  if (geometry.scheme != FocusScheme::fixed_r) {
    return std::vector<double>(z_cm.size(), coeffs.wavelength_at_ratio(geometry.focus_ratio_at(0.0)));
  }
  for (double z : z_cm) {
    if (!(z >= 0.0)) throw InvalidInput("z grid must be >= 0 cm");
  }
  std::vector<double> out(z_cm.size());
  active_kernels().wavelength_fixed_r(make_args(coeffs, 0.0), geometry.focus_distance_cm, z_cm, out);
  return out;
}

std::vector<double> uniform_grid(double start, double stop, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) throw InvalidInput("grid step must be > 0");
  if (!(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
    throw InvalidInput("grid stop must be >= start");
  }
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-6)) + 1;
  std::vector<double> z(count);
  for (std::size_t i = 0; i < count; ++i) z[i] = start + static_cast<double>(i) * step;
  return z;
}

}  // namespace shbeat::sweep
