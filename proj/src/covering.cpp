#include "majassign/covering.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "majassign/parallel.hpp"
#include "majassign/simd/kernels.hpp"

namespace majassign {

const char* to_string(CoveringVariant v) {
  switch (v) {
    case CoveringVariant::McKelvey: return "mckelvey";
    case CoveringVariant::Bordes: return "bordes";
    case CoveringVariant::Gillies: return "gillies";
  }
  return "?";
}

std::optional<CoveringVariant> parse_covering_variant(std::string_view name) {
  std::string s(name);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto v : kCoveringVariants) {
    if (s == to_string(v)) return v;
  }
  return std::nullopt;
}

bool covers(const MajorityMatrix& m, CoveringVariant v, AssignmentIndex mu, AssignmentIndex lambda) {
  if (mu == lambda || !m.strict(mu, lambda)) return false;
  const bool bordes = v != CoveringVariant::Gillies;
  const bool gillies = v != CoveringVariant::Bordes;
  for (AssignmentIndex eta = 0; eta < m.size(); ++eta) {
    if (bordes && m.strict(lambda, eta) && !m.strict(mu, eta)) return false;
    if (gillies && m.strict(eta, mu) && !m.strict(eta, lambda)) return false;
  }
  return true;
}

Bitset uncovered_set(const MajorityMatrix& m, CoveringVariant v) {
  Bitset out(m.size());
  for (AssignmentIndex lambda = 0; lambda < m.size(); ++lambda) {
    bool covered = false;
    for (AssignmentIndex mu = 0; mu < m.size() && !covered; ++mu) covered = covers(m, v, mu, lambda);
    if (!covered) out.set(lambda);
  }
  return out;
}

namespace {

// For a beater c of target t (c > t), c fails to cover t iff
//   Bordes:  some eta with t > eta and not c > eta   (strict_out(t) \ strict_out(c))
//   Gillies: some eta with t >= eta and eta > c      (weak_out(t) \ weak_out(c))
//   McKelvey: either of the two.
bool uncovered(const MajorityMatrix& m, const simd::KernelTable& k, CoveringVariant v, AssignmentIndex t) {
  const std::size_t words = m.words();
  const std::uint64_t* weak_t = m.weak_row(t);
  const std::uint64_t* strict_t = m.strict_row(t);
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t beaters = ~weak_t[w];
    if (w + 1 == words && m.size() % 64) beaters &= (std::uint64_t{1} << (m.size() % 64)) - 1;
    while (beaters) {
      const auto c = static_cast<AssignmentIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(beaters)));
      beaters &= beaters - 1;
      bool answered = false;
      switch (v) {
        case CoveringVariant::Bordes: answered = k.any_andnot(strict_t, m.strict_row(c), words); break;
        case CoveringVariant::Gillies: answered = k.any_andnot(weak_t, m.weak_row(c), words); break;
        case CoveringVariant::McKelvey:
          answered = k.any_andnot2(strict_t, m.strict_row(c), weak_t, m.weak_row(c), words);
          break;
      }
      if (!answered) return false;
    }
  }
  return true;
}

}  // namespace

bool is_uncovered(const MajorityMatrix& m, CoveringVariant v, AssignmentIndex mu) {
  return uncovered(m, simd::kernels(), v, mu);
}

Bitset uncovered_two_step(const MajorityMatrix& m, CoveringVariant v, int jobs) {
  const simd::KernelTable& k = simd::kernels();
  if (jobs <= 0) jobs = default_jobs();
  if (m.size() < 1024) jobs = 1;
  std::vector<std::uint8_t> keep(m.size(), 0);
  parallel_ranges(0, m.size(), jobs, [&](int, std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t t = lo; t < hi; ++t) keep[t] = uncovered(m, k, v, static_cast<AssignmentIndex>(t));
  });
  Bitset out(m.size());
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t]) out.set(t);
  }
  return out;
}

}  // namespace majassign
