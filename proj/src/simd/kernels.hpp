#pragma once

#include "shbeat/sweep.hpp"

namespace shbeat::sweep::detail {

const KernelTable& scalar_table();
#if defined(SHBEAT_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace shbeat::sweep::detail
