#include "majassign/pareto.hpp"

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>

#include "majassign/errors.hpp"

namespace majassign {

namespace {

void check_order(const Profile& profile, const PriorityOrder& order) {
  if (order.size() != profile.size()) throw std::invalid_argument("priority order size does not match profile");
}

void check_size(const Profile& profile, const Assignment& mu) {
  if (mu.size() != profile.size()) throw std::invalid_argument("assignment size does not match profile");
}

// Cycle detection on a graph of at most 64 vertices given as adjacency bitmasks.
bool has_cycle(const std::uint64_t* adj, std::size_t n) {
  std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  // Peel vertices without outgoing edges; a cycle remains iff something survives.
  bool progress = true;
  while (alive != 0 && progress) {
    progress = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (((alive >> v) & 1u) && (adj[v] & alive) == 0) {
        alive &= ~(std::uint64_t{1} << v);
        progress = true;
      }
    }
  }
  return alive != 0;
}

// General fallback using DFS colouring for larger n.
bool has_cycle_dfs(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> colour(n, 0);
  std::vector<std::pair<int, std::size_t>> stack;
  for (int s = 0; s < n; ++s) {
    if (colour[s] != 0) continue;
    stack.emplace_back(s, 0);
    colour[s] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < adj[v].size()) {
        const int w = adj[v][next++];
        if (colour[w] == 1) return true;
        if (colour[w] == 0) {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        colour[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

// Edge x -> y iff agent x ranks mu(y) better (envy) or worse (pessimal) than mu(x).
bool acyclic(const Profile& profile, std::span<const HouseId> mu, bool envy) {
  const int n = profile.size();
  auto edge = [&](int x, int y) {
    const PreferenceOrder& o = profile.order(x);
    return envy ? o.prefers(mu[y], mu[x]) : o.prefers(mu[x], mu[y]);
  };
  if (n <= 64) {
    std::uint64_t adj[64] = {};
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x != y && edge(x, y)) adj[x] |= std::uint64_t{1} << y;
      }
    }
    return !has_cycle(adj, static_cast<std::size_t>(n));
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && edge(x, y)) adj[x].push_back(y);
    }
  }
  return !has_cycle_dfs(adj);
}

Assignment serial_pick(const Profile& profile, const PriorityOrder& order, bool best) {
  check_order(profile, order);
  const int n = profile.size();
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  std::vector<HouseId> out(static_cast<std::size_t>(n), -1);
  for (int pos = 0; pos < n; ++pos) {
    const AgentId x = order[pos];
    const PreferenceOrder& o = profile.order(x);
    for (int r = 0; r < n; ++r) {
      const HouseId h = o.at(best ? r : n - 1 - r);
      if (!taken[h]) {
        taken[h] = true;
        out[x] = h;
        break;
      }
    }
  }
  return Assignment(std::move(out));
}

std::vector<AssignmentIndex> filter_universe(const Profile& profile, int brute_limit, bool optimal) {
  require_dense(profile.size(), brute_limit);
  const Universe& u = Universe::of(profile.size());
  std::vector<AssignmentIndex> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (acyclic(profile, u.houses(static_cast<AssignmentIndex>(i)), optimal)) out.push_back(static_cast<AssignmentIndex>(i));
  }
  return out;
}

}  // namespace

RankVector rank_vector(const Profile& profile, const Assignment& mu) {
  check_size(profile, mu);
  RankVector r(static_cast<std::size_t>(mu.size()));
  for (AgentId x = 0; x < mu.size(); ++x) r[x] = profile.order(x).rank_of(mu[x]);
  std::sort(r.begin(), r.end());
  return r;
}

Assignment serial_dictatorship(const Profile& profile, const PriorityOrder& order) {
  return serial_pick(profile, order, true);
}

Assignment serial_antidictatorship(const Profile& profile, const PriorityOrder& order) {
  return serial_pick(profile, order, false);
}

bool pareto_dominates(const Profile& profile, const Assignment& mu, const Assignment& lambda) {
  check_size(profile, mu);
  check_size(profile, lambda);
  bool strict = false;
  for (AgentId x = 0; x < profile.size(); ++x) {
    const PreferenceOrder& o = profile.order(x);
    if (o.prefers(lambda[x], mu[x])) return false;
    strict = strict || o.prefers(mu[x], lambda[x]);
  }
  return strict;
}

bool is_pareto_optimal(const Profile& profile, const Assignment& mu) {
  check_size(profile, mu);
  return acyclic(profile, mu.houses(), true);
}

bool is_pareto_pessimal(const Profile& profile, const Assignment& mu) {
  check_size(profile, mu);
  return acyclic(profile, mu.houses(), false);
}

std::vector<AssignmentIndex> pareto_optimal_set(const Profile& profile, int brute_limit) {
  return filter_universe(profile, brute_limit, true);
}

std::vector<AssignmentIndex> pareto_pessimal_set(const Profile& profile, int brute_limit) {
  return filter_universe(profile, brute_limit, false);
}

}  // namespace majassign
