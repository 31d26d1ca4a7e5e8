#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "shbeat/beating.hpp"

namespace shbeat::sweep {

/// Instruction sets with a kernel implementation. The scalar set is the
/// reference every other variant is tested against.
enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Inputs shared by every z-grid kernel.
struct KernelArgs {
  double lambda_b0 = 0.0;
  double v2 = 0.0;
  double neff2 = 1.0;
  double scale = 0.0;  // phase prefactor (2 pi for chi, 4 pi for delta phi)
};

struct KernelTable {
  Isa isa = Isa::scalar;
  /// out[i] = phase at z[i] with u = r/(z[i]+r).
  void (*phase_fixed_r)(const KernelArgs&, double r, std::span<const double> z,
                        std::span<double> out) = nullptr;
  /// out[i] = phase at z[i] with constant u.
  void (*phase_fixed_ratio)(const KernelArgs&, double u, std::span<const double> z,
                            std::span<double> out) = nullptr;
  /// out[i] = closed-form local wavelength at z[i] for fixed r.
  void (*wavelength_fixed_r)(const KernelArgs&, double r, std::span<const double> z,
                             std::span<double> out) = nullptr;
};

/// Every ISA this binary was built with and the host can run.
std::vector<Isa> available_isas();

/// Kernel table for a specific ISA. Throws InvalidInput if unavailable.
const KernelTable& kernels_for(Isa isa);

/// Widest available ISA, chosen once. SHBEAT_ISA=scalar in the environment
/// forces the reference kernels.
const KernelTable& active_kernels();

KernelArgs make_args(const PhaseCoefficients& coeffs, double scale);

/// Phase over a z grid for any focus scheme.
std::vector<double> phase_grid(const PhaseCoefficients& coeffs, const GeometryScenario& geometry,
                               std::span<const double> z_cm, double scale);

/// chi(z) over a grid.
std::vector<double> chi_grid(const PhaseCoefficients& coeffs, const GeometryScenario& geometry,
                             std::span<const double> z_cm);

/// lambda_b(z) over a grid.
std::vector<double> local_wavelength_grid(const PhaseCoefficients& coeffs,
                                          const GeometryScenario& geometry,
                                          std::span<const double> z_cm);

/// Uniform grid start, start + step, ... not exceeding stop (within step/1e6).
std::vector<double> uniform_grid(double start, double stop, double step);

}  // namespace shbeat::sweep
