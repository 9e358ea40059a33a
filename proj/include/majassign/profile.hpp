#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "majassign/assignment.hpp"

namespace majassign {

/// Strict linear order over houses, most preferred first.
class PreferenceOrder {
 public:
  /// Throws std::invalid_argument unless `ranking` is a permutation of 0..n-1.
  explicit PreferenceOrder(std::vector<HouseId> ranking);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(ranking_.size()); }
  [[nodiscard]] std::span<const HouseId> ranking() const noexcept { return ranking_; }
  /// House at 0-based position.
  HouseId at(int position) const { return ranking_[static_cast<std::size_t>(position)]; }
  /// 1 for the top choice, n for the bottom one.
  int rank_of(HouseId h) const { return rank_[static_cast<std::size_t>(h)]; }
  bool prefers(HouseId p, HouseId q) const { return rank_of(p) < rank_of(q); }
  [[nodiscard]] HouseId top() const { return ranking_.front(); }
  [[nodiscard]] HouseId bottom() const { return ranking_.back(); }
  [[nodiscard]] PreferenceOrder reversed() const;

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) { return a.ranking_ == b.ranking_; }
  friend auto operator<=>(const PreferenceOrder& a, const PreferenceOrder& b) { return a.ranking_ <=> b.ranking_; }

 private:
  std::vector<HouseId> ranking_;
  std::vector<int> rank_;
};

/// r(order, h) = 1 + number of houses preferred to h.
inline int rank(const PreferenceOrder& order, HouseId h) { return order.rank_of(h); }

/// One strict order per agent over a common set of n houses.
class Profile {
 public:
  Profile(std::vector<PreferenceOrder> orders, std::vector<std::string> labels);
  /// Uses default_labels(n).
  explicit Profile(std::vector<PreferenceOrder> orders);
  static Profile from_rankings(const std::vector<std::vector<HouseId>>& rankings);

  [[nodiscard]] int size() const noexcept { return static_cast<int>(orders_.size()); }
  const PreferenceOrder& order(AgentId x) const { return orders_[static_cast<std::size_t>(x)]; }
  [[nodiscard]] std::span<const PreferenceOrder> orders() const noexcept { return orders_; }
  [[nodiscard]] std::span<const std::string> labels() const noexcept { return *labels_; }
  const std::string& label(HouseId h) const { return (*labels_)[static_cast<std::size_t>(h)]; }
  [[nodiscard]] std::optional<HouseId> house(std::string_view label) const;

  friend bool operator==(const Profile& a, const Profile& b);

 private:
  std::vector<PreferenceOrder> orders_;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// a, b, c, ... for n <= 26; h1, h2, ... beyond.
std::shared_ptr<const std::vector<std::string>> default_labels(int n);

/// Profile file: first non-comment line n, then n lines of n house labels.
/// Lines starting with '#' and blank lines are skipped. Houses are indexed in
/// lexicographic label order.
Profile parse_profile(std::string_view text);
Profile load_profile(const std::filesystem::path& path);
std::string format_profile(const Profile& profile);

/// Accepts "c,a,b" or "(c,a,b)".
Assignment parse_assignment(const Profile& profile, std::string_view literal);
/// "(a,b,c)" tuple notation, agent order.
std::string format_assignment(const Profile& profile, const Assignment& assignment);

/// Reverses every agent's ranking.
Profile invert_profile(const Profile& profile);

/// Keeps `agents` (in increasing order) and their orders filtered to `houses`.
/// Houses are re-indexed in increasing original index; labels are preserved.
Profile restrict_profile(const Profile& profile, std::span<const AgentId> agents, std::span<const HouseId> houses);

/// Relabels houses so agent 1 ranks them in label order, then sorts agents
/// 2..n lexicographically by ranking. Output carries default labels.
Profile canonical_form(const Profile& profile);

/// Agent x of the result is agent perm[x] of the input.
Profile permute_agents(const Profile& profile, std::span<const AgentId> perm);
/// House h becomes house mapping[h]; the label table stays attached to indices.
Profile relabel_houses(const Profile& profile, std::span<const HouseId> mapping);

}  // namespace majassign
