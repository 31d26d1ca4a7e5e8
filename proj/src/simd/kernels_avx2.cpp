// Built with -mavx2 only (no -mfma) so every lane performs the same rounded
// operations as the scalar reference.
#include <immintrin.h>

#include "shbeat/detail/phase_formulas.hpp"
#include "kernels.hpp"

namespace shbeat::sweep::detail {

namespace {

constexpr std::size_t kLanes = 4;

// scale * z / lambda_b0 * (1 - v2 * (1 - neff2 * u))
inline __m256d phase_lanes(__m256d z, __m256d u, __m256d scale, __m256d lb0, __m256d v2,
                           __m256d neff2, __m256d one) {
  const __m256d bracket = _mm256_sub_pd(one, _mm256_mul_pd(v2, _mm256_sub_pd(one, _mm256_mul_pd(neff2, u))));
  return _mm256_mul_pd(_mm256_div_pd(_mm256_mul_pd(scale, z), lb0), bracket);
}

void phase_fixed_r(const KernelArgs& a, double r, std::span<const double> z, std::span<double> out) {
  const std::size_t n = z.size();
  const __m256d scale = _mm256_set1_pd(a.scale);
  const __m256d lb0 = _mm256_set1_pd(a.lambda_b0);
  const __m256d v2 = _mm256_set1_pd(a.v2);
  const __m256d neff2 = _mm256_set1_pd(a.neff2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d rv = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d zv = _mm256_loadu_pd(z.data() + i);
    const __m256d u = _mm256_div_pd(rv, _mm256_add_pd(zv, rv));
    _mm256_storeu_pd(out.data() + i, phase_lanes(zv, u, scale, lb0, v2, neff2, one));
  }
  for (; i < n; ++i) {
    out[i] = shbeat::detail::phase_at(a.scale, z[i], a.lambda_b0, a.v2, a.neff2,
                                      shbeat::detail::focus_ratio(z[i], r));
  }
}

void phase_fixed_ratio(const KernelArgs& a, double u, std::span<const double> z,
                       std::span<double> out) {
  const std::size_t n = z.size();
  const __m256d scale = _mm256_set1_pd(a.scale);
  const __m256d lb0 = _mm256_set1_pd(a.lambda_b0);
  const __m256d v2 = _mm256_set1_pd(a.v2);
  const __m256d neff2 = _mm256_set1_pd(a.neff2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d uv = _mm256_set1_pd(u);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d zv = _mm256_loadu_pd(z.data() + i);
    _mm256_storeu_pd(out.data() + i, phase_lanes(zv, uv, scale, lb0, v2, neff2, one));
  }
  for (; i < n; ++i) {
    out[i] = shbeat::detail::phase_at(a.scale, z[i], a.lambda_b0, a.v2, a.neff2, u);
  }
}

void wavelength_fixed_r(const KernelArgs& a, double r, std::span<const double> z,
                        std::span<double> out) {
  const std::size_t n = z.size();
  const __m256d lb0 = _mm256_set1_pd(a.lambda_b0);
  const __m256d v2 = _mm256_set1_pd(a.v2);
  const __m256d neff2 = _mm256_set1_pd(a.neff2);
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d rv = _mm256_set1_pd(r);
  std::size_t i = 0;
  for (; i + kLanes <= n; i += kLanes) {
    const __m256d zv = _mm256_loadu_pd(z.data() + i);
    const __m256d q = _mm256_div_pd(rv, _mm256_add_pd(zv, rv));
    const __m256d denom = _mm256_sub_pd(
        one, _mm256_mul_pd(v2, _mm256_sub_pd(one, _mm256_mul_pd(neff2, _mm256_mul_pd(q, q)))));
    _mm256_storeu_pd(out.data() + i, _mm256_div_pd(lb0, denom));
  }
  for (; i < n; ++i) {
    out[i] = shbeat::detail::local_wavelength_fixed_r(z[i], r, a.lambda_b0, a.v2, a.neff2);
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{Isa::avx2, &phase_fixed_r, &phase_fixed_ratio,
                                 &wavelength_fixed_r};
  return table;
}

}  // namespace shbeat::sweep::detail
