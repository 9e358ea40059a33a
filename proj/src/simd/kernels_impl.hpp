#pragma once

#include "majassign/simd/kernels.hpp"

namespace majassign::simd {

// Shared by the wide variants for their tails.
void classify_scalar(const std::int8_t* margins, std::size_t count, std::uint64_t* positive, std::uint64_t* zero);

#if defined(MAJASSIGN_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace majassign::simd
