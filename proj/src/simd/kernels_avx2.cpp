// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace majassign::simd {

namespace {

void margin_row_avx2(const std::int8_t* ranks, std::size_t stride, int agents, const std::int8_t* pivot,
                     std::size_t count, std::int8_t* out) {
  std::size_t j = 0;
  for (; j + 32 <= count; j += 32) {
    __m256i acc = _mm256_setzero_si256();
    for (int x = 0; x < agents; ++x) {
      const auto* row = reinterpret_cast<const __m256i*>(ranks + static_cast<std::size_t>(x) * stride + j);
      const __m256i v = _mm256_loadu_si256(row);
      const __m256i p = _mm256_set1_epi8(pivot[x]);
      // compare masks are 0 / -1: subtracting "worse" adds one, adding "better" subtracts one
      acc = _mm256_sub_epi8(acc, _mm256_cmpgt_epi8(v, p));
      acc = _mm256_add_epi8(acc, _mm256_cmpgt_epi8(p, v));
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + j), acc);
  }
  for (; j < count; ++j) {
    int m = 0;
    for (int x = 0; x < agents; ++x) {
      const std::int8_t r = ranks[static_cast<std::size_t>(x) * stride + j];
      m += (r > pivot[x]) - (r < pivot[x]);
    }
    out[j] = static_cast<std::int8_t>(m);
  }
}

void classify_avx2(const std::int8_t* margins, std::size_t count, std::uint64_t* positive, std::uint64_t* zero) {
  const __m256i zeros = _mm256_setzero_si256();
  std::size_t w = 0;
  for (; (w + 1) * 64 <= count; ++w) {
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(margins + w * 64));
    const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(margins + w * 64 + 32));
    const auto pos_lo = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(lo, zeros)));
    const auto pos_hi = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpgt_epi8(hi, zeros)));
    const auto eq_lo = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lo, zeros)));
    const auto eq_hi = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(hi, zeros)));
    positive[w] = std::uint64_t{pos_lo} | (std::uint64_t{pos_hi} << 32);
    zero[w] = std::uint64_t{eq_lo} | (std::uint64_t{eq_hi} << 32);
  }
  if (w * 64 < count) {
    classify_scalar(margins + w * 64, count - w * 64, positive + w, zero + w);
  }
}

std::int8_t min_value_avx2(const std::int8_t* margins, std::size_t count) {
  std::int8_t m = margins[0];
  std::size_t j = 0;
  if (count >= 32) {
    __m256i acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(margins));
    for (j = 32; j + 32 <= count; j += 32) {
      acc = _mm256_min_epi8(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(margins + j)));
    }
    __m128i v = _mm_min_epi8(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    v = _mm_min_epi8(v, _mm_srli_si128(v, 8));
    v = _mm_min_epi8(v, _mm_srli_si128(v, 4));
    v = _mm_min_epi8(v, _mm_srli_si128(v, 2));
    v = _mm_min_epi8(v, _mm_srli_si128(v, 1));
    m = static_cast<std::int8_t>(_mm_extract_epi8(v, 0));
  }
  for (; j < count; ++j) m = margins[j] < m ? margins[j] : m;
  return m;
}

bool any_andnot_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const __m256i d = _mm256_andnot_si256(vb, va);
    if (!_mm256_testz_si256(d, d)) return true;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return true;
  }
  return false;
}

bool any_andnot2_avx2(const std::uint64_t* a1, const std::uint64_t* b1, const std::uint64_t* a2,
                      const std::uint64_t* b2, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i d1 = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b1 + i)),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a1 + i)));
    const __m256i d2 = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b2 + i)),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a2 + i)));
    const __m256i d = _mm256_or_si256(d1, d2);
    if (!_mm256_testz_si256(d, d)) return true;
  }
  for (; i < words; ++i) {
    if ((a1[i] & ~b1[i]) | (a2[i] & ~b2[i])) return true;
  }
  return false;
}

void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d),
                                           _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i))));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

bool or_andnot_into_avx2(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                         std::size_t words) {
  __m256i changed = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i old = _mm256_loadu_si256(d);
    const __m256i add = _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i)),
                                            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
    const __m256i next = _mm256_or_si256(old, add);
    changed = _mm256_or_si256(changed, _mm256_xor_si256(next, old));
    _mm256_storeu_si256(d, next);
  }
  std::uint64_t tail_changed = 0;
  for (; i < words; ++i) {
    const std::uint64_t next = dst[i] | (src[i] & ~mask[i]);
    tail_changed |= next ^ dst[i];
    dst[i] = next;
  }
  return tail_changed != 0 || !_mm256_testz_si256(changed, changed);
}

std::size_t popcount_avx2(const std::uint64_t* words, std::size_t count) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(words[i]));
  return total;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      Isa::Avx2,         "avx2",           margin_row_avx2,  classify_avx2,       min_value_avx2,
      any_andnot_avx2,   any_andnot2_avx2, or_into_avx2,     or_andnot_into_avx2, popcount_avx2,
  };
  return table;
}

}  // namespace majassign::simd
