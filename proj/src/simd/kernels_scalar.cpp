#include "shbeat/detail/phase_formulas.hpp"
#include "kernels.hpp"

namespace shbeat::sweep::detail {

namespace {

void phase_fixed_r(const KernelArgs& a, double r, std::span<const double> z, std::span<double> out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = shbeat::detail::phase_at(a.scale, z[i], a.lambda_b0, a.v2, a.neff2,
                                      shbeat::detail::focus_ratio(z[i], r));
  }
}

void phase_fixed_ratio(const KernelArgs& a, double u, std::span<const double> z,
                       std::span<double> out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = shbeat::detail::phase_at(a.scale, z[i], a.lambda_b0, a.v2, a.neff2, u);
  }
}

void wavelength_fixed_r(const KernelArgs& a, double r, std::span<const double> z,
                        std::span<double> out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    out[i] = shbeat::detail::local_wavelength_fixed_r(z[i], r, a.lambda_b0, a.v2, a.neff2);
  }
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{Isa::scalar, &phase_fixed_r, &phase_fixed_ratio,
                                 &wavelength_fixed_r};
  return table;
}

}  // namespace shbeat::sweep::detail
