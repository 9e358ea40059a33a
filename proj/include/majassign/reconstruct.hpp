#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "majassign/assignment.hpp"
#include "majassign/majority.hpp"
#include "majassign/profile.hpp"

namespace majassign {

/// Answers majority comparisons without revealing margins. Counts and logs
/// every answered query; comparing an assignment with itself is a free Tie.
class MajorityOracle {
 public:
  using Answer = std::function<Verdict(const Assignment&, const Assignment&)>;

  MajorityOracle(int n, Answer answer);
  /// Oracle backed by the majority graph of `profile`.
  static MajorityOracle of(const Profile& profile);

  [[nodiscard]] int n() const noexcept { return n_; }
  Verdict operator()(const Assignment& mu, const Assignment& lambda);

  struct Query {
    Assignment first;
    Assignment second;
    Verdict verdict;
  };
  [[nodiscard]] std::uint64_t queries() const noexcept { return log_.size(); }
  [[nodiscard]] const std::vector<Query>& log() const noexcept { return log_; }

 private:
  int n_;
  Answer answer_;
  std::vector<Query> log_;
};

/// Upper bound on oracle calls made by reconstruct(): n^4 (a constant factor of 1).
std::uint64_t reconstruct_query_bound(int n);

/// Assignment giving each listed agent its listed house; every other agent
/// receives the remaining houses in increasing index order.
Assignment fill_assignment(int n, std::span<const std::pair<AgentId, HouseId>> fixed);

/// Compares mu (x gets p, y gets q) with mu after x and y swap.
/// `filler` must give p to x and q to y. FirstWins means p >_x q and q >_y p;
/// SecondWins the reverse; Tie means x and y agree on {p, q}.
Verdict pair_query(MajorityOracle& oracle, AgentId x, AgentId y, HouseId p, HouseId q, const Assignment& filler);
/// Same with the default filler.
Verdict pair_query(MajorityOracle& oracle, AgentId x, AgentId y, HouseId p, HouseId q);

/// Preferences of all agents over one pair of houses, if the oracle reveals them.
struct PairColumn {
  /// Every tried query tied: all agents agree, direction unknown.
  bool all_agree = true;
  /// prefers_first[x] is 1 when agent x ranks p above q (valid when !all_agree).
  std::vector<std::uint8_t> prefers_first;
};

PairColumn infer_pair_column(MajorityOracle& oracle, HouseId p, HouseId q);

/// Pairwise knowledge about agents' orders: for each pair (p, q) either
/// unknown or, for every agent, whether p is preferred to q.
class PairwiseKnowledge {
 public:
  explicit PairwiseKnowledge(int n);

  [[nodiscard]] int n() const noexcept { return n_; }
  [[nodiscard]] bool known(HouseId p, HouseId q) const { return cell(p, q, 0) != 0; }
  /// Requires known(p, q).
  [[nodiscard]] bool prefers(AgentId x, HouseId p, HouseId q) const { return cell(p, q, x) > 0; }
  void set(HouseId p, HouseId q, std::span<const std::uint8_t> prefers_p);

 private:
  std::int8_t cell(HouseId p, HouseId q, AgentId x) const {
    return table_[(static_cast<std::size_t>(p) * n_ + q) * n_ + x];
  }
  int n_;
  std::vector<std::int8_t> table_;
};

/// Derives the (p, r) column from known (p, q) and (q, r) columns, by
/// transitivity when some agent ranks q between p and r, otherwise with one
/// three-agent query. Throws Unresolvable on contradictory answers.
void resolve_within_component(MajorityOracle& oracle, PairwiseKnowledge& k, HouseId p, HouseId q, HouseId r);

enum class Orientation {
  /// p before q before r up to a cyclic shift.
  Forward,
  /// p before r before q up to a cyclic shift.
  Backward,
};

/// Cyclic orientation of {p, q, r} for agents x, y, z, which must order the
/// three houses identically. One query.
Orientation cycle_type(MajorityOracle& oracle, HouseId p, HouseId q, HouseId r, AgentId x = 0, AgentId y = 1,
                       AgentId z = 2);

/// Ordered partition of the houses; every agent of the base ranks block j
/// entirely above block j + 1.
using Decomposition = std::vector<std::vector<HouseId>>;

/// The finest decomposition of a profile.
Decomposition finest_decomposition(const Profile& profile);

/// Profile whose blocks appear in the order (H_{1+r}, ..., H_k, H_1, ..., H_r),
/// with the orders inside blocks unchanged.
Profile rotate_profile(const Profile& profile, const Decomposition& d, int shift);

struct RotationClass {
  Profile base;
  Decomposition decomposition;
  std::vector<int> shifts;

  [[nodiscard]] std::size_t size() const noexcept { return shifts.size(); }
  [[nodiscard]] std::vector<Profile> members() const;
  [[nodiscard]] bool contains(const Profile& p) const;
};

/// Connected components of the house graph whose edges are the pairs with a
/// revealed column, together with the full in-component orders.
struct Components {
  std::vector<std::vector<HouseId>> blocks;  // houses ascending inside a block, blocks by smallest house
  PairwiseKnowledge knowledge;
};

Components component_decomposition(MajorityOracle& oracle);

/// All profiles inducing the oracle's majority graph. Throws Unresolvable when
/// the answers fit no profile.
RotationClass reconstruct(MajorityOracle& oracle);

/// Structural test: same finest decomposition up to a cyclic shift, same
/// orders inside blocks.
bool rotation_equivalent(const Profile& a, const Profile& b);

/// Margin of any pair under every member of the class (computed on the base).
MajorityOutcome infer_margin(const RotationClass& c, const Assignment& mu, const Assignment& lambda);

}  // namespace majassign
