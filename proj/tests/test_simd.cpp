#include <random>
#include <vector>

#include "doctest.h"
#include "majassign/majority.hpp"
#include "majassign/simd/kernels.hpp"
#include "oracles.hpp"

using namespace majassign;
using simd::KernelTable;

namespace {

struct Restore {
  simd::Isa isa = simd::kernels().isa;
  ~Restore() { simd::select_kernels(isa); }
};

std::vector<std::uint64_t> random_words(std::mt19937_64& gen, std::size_t words, int sparsity) {
  std::vector<std::uint64_t> w(words);
  for (auto& x : w) {
    x = gen();
    for (int s = 0; s < sparsity; ++s) x &= gen();
  }
  return w;
}

}  // namespace

TEST_SUITE_BEGIN("simd");

TEST_CASE("scalar and avx2 kernels agree") {
  const KernelTable& s = simd::scalar_kernels();
  const KernelTable* v = simd::avx2_kernels();
  if (v == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this build or CPU; only the scalar path is exercised");
    return;
  }
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 300; ++trial) {
    const int agents = 1 + trial % 8;
    const std::size_t count = 1 + gen() % 700;
    const std::size_t stride = count + gen() % 40;
    std::vector<std::int8_t> ranks(static_cast<std::size_t>(agents) * stride);
    for (auto& r : ranks) r = static_cast<std::int8_t>(1 + gen() % 8);
    std::vector<std::int8_t> pivot(static_cast<std::size_t>(agents));
    for (auto& p : pivot) p = static_cast<std::int8_t>(1 + gen() % 8);

    std::vector<std::int8_t> a(count), b(count);
    s.margin_row(ranks.data(), stride, agents, pivot.data(), count, a.data());
    v->margin_row(ranks.data(), stride, agents, pivot.data(), count, b.data());
    REQUIRE(a == b);

    const std::size_t words = (count + 63) / 64;
    std::vector<std::uint64_t> pa(words), za(words), pb(words), zb(words);
    s.classify(a.data(), count, pa.data(), za.data());
    v->classify(a.data(), count, pb.data(), zb.data());
    REQUIRE(pa == pb);
    REQUIRE(za == zb);
    REQUIRE(s.min_value(a.data(), count) == v->min_value(a.data(), count));

    const int sparsity = trial % 5;
    auto w1 = random_words(gen, words, sparsity);
    auto w2 = random_words(gen, words, 0);
    auto w3 = random_words(gen, words, sparsity);
    auto w4 = random_words(gen, words, 0);
    // force the "no bit" outcome sometimes
    if (trial % 3 == 0) w2 = w1;
    REQUIRE(s.any_andnot(w1.data(), w2.data(), words) == v->any_andnot(w1.data(), w2.data(), words));
    REQUIRE(s.any_andnot2(w1.data(), w2.data(), w3.data(), w4.data(), words) ==
            v->any_andnot2(w1.data(), w2.data(), w3.data(), w4.data(), words));
    REQUIRE(s.popcount(w1.data(), words) == v->popcount(w1.data(), words));

    auto d1 = random_words(gen, words, 2);
    auto d2 = d1;
    const bool c1 = s.or_andnot_into(d1.data(), w3.data(), w4.data(), words);
    const bool c2 = v->or_andnot_into(d2.data(), w3.data(), w4.data(), words);
    REQUIRE(c1 == c2);
    REQUIRE(d1 == d2);
    s.or_into(d1.data(), w1.data(), words);
    v->or_into(d2.data(), w1.data(), words);
    REQUIRE(d1 == d2);
  }
}

TEST_CASE("majority matrix is identical under both kernel sets") {
  Restore restore;
  if (simd::avx2_kernels() == nullptr) return;
  std::mt19937_64 gen(5);
  for (int n = 1; n <= 6; ++n) {
    for (int t = 0; t < 5; ++t) {
      const Profile p = oracle::random_profile(n, gen);
      REQUIRE(simd::select_kernels(simd::Isa::Scalar));
      const MajorityMatrix a(p, 6);
      REQUIRE(simd::select_kernels(simd::Isa::Avx2));
      const MajorityMatrix b(p, 6);
      REQUIRE(a == b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a.worst_defeat(static_cast<AssignmentIndex>(i)) == b.worst_defeat(static_cast<AssignmentIndex>(i)));
      }
    }
  }
}

TEST_CASE("scalar kernel is always selectable") {
  Restore restore;
  CHECK(simd::select_kernels(simd::Isa::Scalar));
  CHECK(simd::kernels().isa == simd::Isa::Scalar);
}

TEST_SUITE_END();
