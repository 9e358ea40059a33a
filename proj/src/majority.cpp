#include "majassign/majority.hpp"

#include <stdexcept>
#include <string>

#include "majassign/errors.hpp"
#include "majassign/parallel.hpp"
#include "majassign/simd/kernels.hpp"

namespace majassign {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::FirstWins: return "FirstWins";
    case Verdict::SecondWins: return "SecondWins";
    case Verdict::Tie: return "Tie";
  }
  return "?";
}

MajorityOutcome MajorityOutcome::from_margin(int margin) {
  MajorityOutcome o;
  o.margin = margin;
  o.verdict = margin > 0 ? Verdict::FirstWins : margin < 0 ? Verdict::SecondWins : Verdict::Tie;
  return o;
}

MajorityOutcome compare(const Profile& profile, const Assignment& first, const Assignment& second) {
  const int n = profile.size();
  if (first.size() != n || second.size() != n) {
    throw std::invalid_argument("assignment size " + std::to_string(first.size()) + "/" +
                                std::to_string(second.size()) + " does not match profile size " +
                                std::to_string(n));
  }
  int margin = 0;
  for (AgentId x = 0; x < n; ++x) {
    const PreferenceOrder& o = profile.order(x);
    const int a = o.rank_of(first[x]);
    const int b = o.rank_of(second[x]);
    margin += (a < b) - (a > b);
  }
  return MajorityOutcome::from_margin(margin);
}

void RankTable::assign(const Profile& profile) {
  const int n = profile.size();
  const Universe& u = Universe::of(n);
  agents_ = n;
  size_ = u.size();
  stride_ = (size_ + 63) / 64 * 64;
  ranks_.assign(static_cast<std::size_t>(n) * stride_, 0);
  for (AgentId x = 0; x < n; ++x) {
    const PreferenceOrder& o = profile.order(x);
    std::int8_t* row = ranks_.data() + static_cast<std::size_t>(x) * stride_;
    for (std::size_t i = 0; i < size_; ++i) {
      row[i] = static_cast<std::int8_t>(o.rank_of(u.house(static_cast<AssignmentIndex>(i), x)));
    }
  }
}

void RankTable::pivot(AssignmentIndex i, std::int8_t* out) const {
  for (int x = 0; x < agents_; ++x) out[x] = at(x, i);
}

void margin_row(const RankTable& ranks, AssignmentIndex mu, std::span<std::int8_t> out) {
  if (out.size() < ranks.size()) throw std::invalid_argument("margin_row: output too small");
  std::int8_t pivot[kMaxBruteLimit];
  ranks.pivot(mu, pivot);
  simd::kernels().margin_row(ranks.data(), ranks.stride(), ranks.agents(), pivot, ranks.size(), out.data());
}

MajorityMatrix::MajorityMatrix(const Profile& profile, int brute_limit, int jobs) {
  rebuild(profile, brute_limit, jobs);
}

void MajorityMatrix::rebuild(const Profile& profile, int brute_limit, int jobs) {
  require_dense(profile.size(), brute_limit);
  n_ = profile.size();
  ranks_.assign(profile);
  size_ = ranks_.size();
  words_ = (size_ + 63) / 64;
  const std::size_t total = size_ * words_;
  strict_.resize(total);
  tie_.resize(total);
  weak_.resize(total);
  worst_defeat_.resize(size_);

  const simd::KernelTable& k = simd::kernels();
  if (jobs <= 0) jobs = default_jobs();
  if (size_ < 1024) jobs = 1;
  parallel_ranges(0, size_, jobs, [&](int, std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int8_t> margins(ranks_.stride());
    std::int8_t pivot[kMaxBruteLimit];
    for (std::uint64_t i = lo; i < hi; ++i) {
      ranks_.pivot(static_cast<AssignmentIndex>(i), pivot);
      // Padding columns hold rank 0, so their margin is -n: neither strict nor tied.
      k.margin_row(ranks_.data(), ranks_.stride(), n_, pivot, ranks_.stride(), margins.data());
      std::uint64_t* s = strict_.data() + i * words_;
      std::uint64_t* t = tie_.data() + i * words_;
      std::uint64_t* w = weak_.data() + i * words_;
      k.classify(margins.data(), ranks_.stride(), s, t);
      for (std::size_t q = 0; q < words_; ++q) w[q] = s[q] | t[q];
      worst_defeat_[i] = -static_cast<int>(k.min_value(margins.data(), size_));
    }
  });
}

std::size_t MajorityMatrix::weak_wins(AssignmentIndex i) const {
  return simd::kernels().popcount(weak_row(i), words_);
}

namespace {

// Popularity checks only need one margin row, not the whole matrix.
std::vector<std::int8_t> row_for(const Profile& profile, const Assignment& mu, int brute_limit, RankTable& table,
                                 AssignmentIndex& index) {
  require_dense(profile.size(), brute_limit);
  if (mu.size() != profile.size()) throw std::invalid_argument("assignment size does not match profile size");
  table.assign(profile);
  index = Universe::of(profile.size()).index_of(mu);
  std::vector<std::int8_t> out(table.stride());
  margin_row(table, index, out);
  out.resize(table.size());
  return out;
}

}  // namespace

bool is_popular(const Profile& profile, const Assignment& mu, int brute_limit) {
  RankTable t;
  AssignmentIndex i = 0;
  const auto row = row_for(profile, mu, brute_limit, t, i);
  return simd::kernels().min_value(row.data(), row.size()) >= 0;
}

bool is_strongly_popular(const Profile& profile, const Assignment& mu, int brute_limit) {
  RankTable t;
  AssignmentIndex i = 0;
  const auto row = row_for(profile, mu, brute_limit, t, i);
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j != i && row[j] <= 0) return false;
  }
  return true;
}

bool is_semi_popular(const Profile& profile, const Assignment& mu, int brute_limit) {
  RankTable t;
  AssignmentIndex i = 0;
  const auto row = row_for(profile, mu, brute_limit, t, i);
  std::size_t wins = 0;
  for (const auto m : row) wins += m >= 0;
  return 2 * wins >= row.size();
}

bool is_popular(const MajorityMatrix& m, AssignmentIndex mu) { return m.worst_defeat(mu) <= 0; }

bool is_strongly_popular(const MajorityMatrix& m, AssignmentIndex mu) {
  return m.size() == 1 || simd::kernels().popcount(m.strict_row(mu), m.words()) == m.size() - 1;
}

bool is_semi_popular(const MajorityMatrix& m, AssignmentIndex mu) { return 2 * m.weak_wins(mu) >= m.size(); }

}  // namespace majassign
