#include "majassign/rules.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <stdexcept>

#include "majassign/simd/kernels.hpp"

namespace majassign {

namespace {

using Counts = std::array<std::uint8_t, kMaxBruteLimit>;

Counts counts_of(const Profile& p, std::span<const HouseId> mu) {
  Counts c{};
  for (AgentId x = 0; x < p.size(); ++x) ++c[static_cast<std::size_t>(p.order(x).rank_of(mu[x]) - 1)];
  return c;
}

// Keeps every index whose key is best under `better(a, b)` (a strictly better than b).
template <class Key, class Better>
std::vector<AssignmentIndex> argbest(const Profile& p, int brute_limit, Key&& key, Better&& better) {
  require_dense(p.size(), brute_limit);
  const Universe& u = Universe::of(p.size());
  std::vector<AssignmentIndex> best;
  Counts best_key{};
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto idx = static_cast<AssignmentIndex>(i);
    const Counts k = key(u.houses(idx));
    if (best.empty() || better(k, best_key)) {
      best.assign(1, idx);
      best_key = k;
    } else if (!better(best_key, k)) {
      best.push_back(idx);
    }
  }
  return best;
}

}  // namespace

std::vector<int> rank_signature(const Profile& profile, const Assignment& mu) {
  if (mu.size() != profile.size()) throw std::invalid_argument("assignment size does not match profile");
  std::vector<int> c(static_cast<std::size_t>(profile.size()), 0);
  for (AgentId x = 0; x < profile.size(); ++x) ++c[static_cast<std::size_t>(profile.order(x).rank_of(mu[x]) - 1)];
  return c;
}

std::vector<AssignmentIndex> rank_maximal_set(const Profile& profile, int brute_limit) {
  const int n = profile.size();
  return argbest(
      profile, brute_limit, [&](std::span<const HouseId> mu) { return counts_of(profile, mu); },
      [n](const Counts& a, const Counts& b) {
        for (int r = 0; r < n; ++r) {
          if (a[r] != b[r]) return a[r] > b[r];
        }
        return false;
      });
}

std::vector<AssignmentIndex> generous_set(const Profile& profile, int brute_limit) {
  const int n = profile.size();
  return argbest(
      profile, brute_limit, [&](std::span<const HouseId> mu) { return counts_of(profile, mu); },
      [n](const Counts& a, const Counts& b) {
        for (int r = n - 1; r >= 0; --r) {
          if (a[r] != b[r]) return a[r] < b[r];
        }
        return false;
      });
}

LeastUnpopular least_unpopular_set(const Profile& profile, int brute_limit) {
  require_dense(profile.size(), brute_limit);
  const RankTable table(profile);
  std::vector<std::int8_t> row(table.stride());
  const auto& k = simd::kernels();
  LeastUnpopular out;
  out.margin = INT_MAX;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto idx = static_cast<AssignmentIndex>(i);
    margin_row(table, idx, row);
    const int u = -static_cast<int>(k.min_value(row.data(), table.size()));
    if (u < out.margin) {
      out.margin = u;
      out.members.assign(1, idx);
    } else if (u == out.margin) {
      out.members.push_back(idx);
    }
  }
  return out;
}

LeastUnpopular least_unpopular_set(const MajorityMatrix& m) {
  LeastUnpopular out;
  out.margin = INT_MAX;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int u = m.worst_defeat(static_cast<AssignmentIndex>(i));
    if (u < out.margin) {
      out.margin = u;
      out.members.assign(1, static_cast<AssignmentIndex>(i));
    } else if (u == out.margin) {
      out.members.push_back(static_cast<AssignmentIndex>(i));
    }
  }
  return out;
}

std::vector<AssignmentIndex> popular_set(const Profile& profile, int brute_limit) {
  LeastUnpopular lu = least_unpopular_set(profile, brute_limit);
  if (lu.margin > 0) return {};
  return std::move(lu.members);
}

std::vector<AssignmentIndex> popular_set(const MajorityMatrix& m) {
  LeastUnpopular lu = least_unpopular_set(m);
  if (lu.margin > 0) return {};
  return std::move(lu.members);
}

}  // namespace majassign
