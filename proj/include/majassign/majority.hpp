#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "majassign/assignment.hpp"
#include "majassign/bitset.hpp"
#include "majassign/profile.hpp"

namespace majassign {

enum class Verdict { FirstWins, SecondWins, Tie };

const char* to_string(Verdict v);

/// Pairwise comparison of two assignments. margin = (#agents strictly
/// preferring the first) - (#agents strictly preferring the second).
struct MajorityOutcome {
  int margin = 0;
  Verdict verdict = Verdict::Tie;

  static MajorityOutcome from_margin(int margin);
  friend bool operator==(const MajorityOutcome&, const MajorityOutcome&) = default;
};

/// Throws std::invalid_argument on a dimension mismatch.
MajorityOutcome compare(const Profile& profile, const Assignment& first, const Assignment& second);

/// Rank of every agent's house for every assignment of the universe:
/// entry [x * stride + i] is r(order_x, mu_i(x)). Rows are padded with zeros.
class RankTable {
 public:
  RankTable() = default;
  explicit RankTable(const Profile& profile) { assign(profile); }
  void assign(const Profile& profile);

  [[nodiscard]] int agents() const noexcept { return agents_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t stride() const noexcept { return stride_; }
  [[nodiscard]] const std::int8_t* data() const noexcept { return ranks_.data(); }
  std::int8_t at(AgentId x, AssignmentIndex i) const {
    return ranks_[static_cast<std::size_t>(x) * stride_ + i];
  }
  /// Ranks of assignment i, one per agent.
  void pivot(AssignmentIndex i, std::int8_t* out) const;

 private:
  int agents_ = 0;
  std::size_t size_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::int8_t> ranks_;
};

/// Margins of one assignment against the whole universe: out[j] = margin(mu, lambda_j).
void margin_row(const RankTable& ranks, AssignmentIndex mu, std::span<std::int8_t> out);

/// Dense majority graph over the universe of all n! assignments.
/// Rows are bit-packed; strict, tie and weak (= strict | tie) are kept separately.
class MajorityMatrix {
 public:
  MajorityMatrix() = default;
  /// Throws LimitExceeded when n exceeds brute_limit. jobs <= 0 picks all cores.
  explicit MajorityMatrix(const Profile& profile, int brute_limit = kDefaultBruteLimit, int jobs = 1);

  /// Recomputes for another profile, reusing storage.
  void rebuild(const Profile& profile, int brute_limit = kDefaultBruteLimit, int jobs = 1);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] std::size_t size() const noexcept { return size_; }
  [[nodiscard]] std::size_t words() const noexcept { return words_; }
  [[nodiscard]] const Universe& universe() const { return Universe::of(n_); }

  /// Row i strictly majority-dominates column j.
  [[nodiscard]] bool strict(AssignmentIndex i, AssignmentIndex j) const { return bit(strict_, i, j); }
  [[nodiscard]] bool tie(AssignmentIndex i, AssignmentIndex j) const { return bit(tie_, i, j); }
  [[nodiscard]] bool weak(AssignmentIndex i, AssignmentIndex j) const { return bit(weak_, i, j); }

  [[nodiscard]] const std::uint64_t* strict_row(AssignmentIndex i) const { return strict_.data() + i * words_; }
  [[nodiscard]] const std::uint64_t* tie_row(AssignmentIndex i) const { return tie_.data() + i * words_; }
  [[nodiscard]] const std::uint64_t* weak_row(AssignmentIndex i) const { return weak_.data() + i * words_; }

  /// max over lambda of margin(lambda, mu_i); <= 0 iff mu_i is popular.
  [[nodiscard]] int worst_defeat(AssignmentIndex i) const { return worst_defeat_[i]; }
  /// |{lambda : mu_i weakly dominates lambda}|, mu_i included.
  [[nodiscard]] std::size_t weak_wins(AssignmentIndex i) const;

  [[nodiscard]] const RankTable& ranks() const noexcept { return ranks_; }

  /// Same majority graph.
  friend bool operator==(const MajorityMatrix& a, const MajorityMatrix& b) {
    return a.n_ == b.n_ && a.strict_ == b.strict_ && a.tie_ == b.tie_;
  }

 private:
  bool bit(const std::vector<std::uint64_t>& rel, AssignmentIndex i, AssignmentIndex j) const {
    return (rel[i * words_ + j / 64] >> (j % 64)) & 1u;
  }

  int n_ = 0;
  std::size_t size_ = 0;
  std::size_t words_ = 0;
  RankTable ranks_;
  std::vector<std::uint64_t> strict_;
  std::vector<std::uint64_t> tie_;
  std::vector<std::uint64_t> weak_;
  std::vector<int> worst_defeat_;
};

/// mu weakly majority-dominates every assignment (brute force over M).
bool is_popular(const Profile& profile, const Assignment& mu, int brute_limit = kDefaultBruteLimit);
/// mu strictly majority-dominates every other assignment.
bool is_strongly_popular(const Profile& profile, const Assignment& mu, int brute_limit = kDefaultBruteLimit);
/// 2 * |{lambda : mu weakly dominates lambda}| >= n!, mu itself counted.
bool is_semi_popular(const Profile& profile, const Assignment& mu, int brute_limit = kDefaultBruteLimit);

/// Matrix-backed variants.
bool is_popular(const MajorityMatrix& m, AssignmentIndex mu);
bool is_strongly_popular(const MajorityMatrix& m, AssignmentIndex mu);
bool is_semi_popular(const MajorityMatrix& m, AssignmentIndex mu);

}  // namespace majassign
