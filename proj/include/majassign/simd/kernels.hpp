#pragma once

// Data-parallel inner loops behind the majority matrix and the bit relations.
// Every kernel has a portable scalar reference; wider variants are selected
// once at runtime and must agree with the reference bit for bit.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace majassign::simd {

enum class Isa { Scalar, Avx2 };

struct KernelTable {
  Isa isa;
  std::string_view name;

  /// out[j] = sum over agents x of sign(ranks[x*stride + j] - pivot[x]), j < count.
  /// Positive means the pivot assignment is preferred by more agents.
  void (*margin_row)(const std::int8_t* ranks, std::size_t stride, int agents, const std::int8_t* pivot,
                     std::size_t count, std::int8_t* out);

  /// Packs (margins[j] > 0) into `positive` and (margins[j] == 0) into `zero`.
  /// Writes ceil(count/64) words to each; bits past `count` are cleared.
  void (*classify)(const std::int8_t* margins, std::size_t count, std::uint64_t* positive, std::uint64_t* zero);

  /// Smallest entry of margins[0..count), count >= 1.
  std::int8_t (*min_value)(const std::int8_t* margins, std::size_t count);

  /// (a & ~b) has a set bit.
  bool (*any_andnot)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);

  /// ((a1 & ~b1) | (a2 & ~b2)) has a set bit.
  bool (*any_andnot2)(const std::uint64_t* a1, const std::uint64_t* b1, const std::uint64_t* a2,
                      const std::uint64_t* b2, std::size_t words);

  /// dst |= src.
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);

  /// dst |= (src & ~mask); returns whether dst changed.
  bool (*or_andnot_into)(std::uint64_t* dst, const std::uint64_t* src, const std::uint64_t* mask, std::size_t words);

  std::size_t (*popcount)(const std::uint64_t* words, std::size_t count);
};

const KernelTable& scalar_kernels();

/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// The table used by the library. Chosen on first use: AVX2 when available,
/// unless the environment variable MAJASSIGN_SIMD is set to "scalar".
const KernelTable& kernels();

/// Overrides the runtime choice (tests and benchmarks). Returns false if the
/// requested ISA is unavailable, leaving the selection unchanged.
bool select_kernels(Isa isa);

}  // namespace majassign::simd
