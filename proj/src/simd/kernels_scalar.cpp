#include <bit>

#include "kernels_impl.hpp"

namespace majassign::simd {

namespace {

void margin_row_scalar(const std::int8_t* ranks, std::size_t stride, int agents, const std::int8_t* pivot,
                       std::size_t count, std::int8_t* out) {
  for (std::size_t j = 0; j < count; ++j) out[j] = 0;
  for (int x = 0; x < agents; ++x) {
    const std::int8_t* row = ranks + static_cast<std::size_t>(x) * stride;
    const std::int8_t p = pivot[x];
    for (std::size_t j = 0; j < count; ++j) {
      out[j] = static_cast<std::int8_t>(out[j] + (row[j] > p) - (row[j] < p));
    }
  }
}

std::int8_t min_value_scalar(const std::int8_t* margins, std::size_t count) {
  std::int8_t m = margins[0];
  for (std::size_t j = 1; j < count; ++j) m = margins[j] < m ? margins[j] : m;
  return m;
}

bool any_andnot_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return true;
  }
  return false;
}

bool any_andnot2_scalar(const std::uint64_t* a1, const std::uint64_t* b1, const std::uint64_t* a2,
                        const std::uint64_t* b2, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a1[i] & ~b1[i]) | (a2[i] & ~b2[i])) return true;
  }
  return false;
}

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

bool or_andnot_into_scalar(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask,
                           std::size_t words) {
  std::uint64_t changed = 0;
  for (std::size_t i = 0; i < words; ++i) {
    const std::uint64_t next = dst[i] | (src[i] & ~mask[i]);
    changed |= next ^ dst[i];
    dst[i] = next;
  }
  return changed != 0;
}

std::size_t popcount_scalar(const std::uint64_t* words, std::size_t count) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < count; ++i) total += static_cast<std::size_t>(std::popcount(words[i]));
  return total;
}

}  // namespace

void classify_scalar(const std::int8_t* margins, std::size_t count, std::uint64_t* positive, std::uint64_t* zero) {
  const std::size_t words = (count + 63) / 64;
  for (std::size_t w = 0; w < words; ++w) {
    positive[w] = 0;
    zero[w] = 0;
  }
  for (std::size_t j = 0; j < count; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    if (margins[j] > 0) positive[j / 64] |= bit;
    if (margins[j] == 0) zero[j / 64] |= bit;
  }
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      Isa::Scalar,          "scalar",          margin_row_scalar,     classify_scalar, min_value_scalar,
      any_andnot_scalar,    any_andnot2_scalar, or_into_scalar,       or_andnot_into_scalar,
      popcount_scalar,
  };
  return table;
}

}  // namespace majassign::simd
