#pragma once

#include <vector>

#include "majassign/assignment.hpp"
#include "majassign/profile.hpp"

namespace majassign {

/// Ranks r(order_x, mu(x)) of all agents, sorted increasingly.
using RankVector = std::vector<int>;

RankVector rank_vector(const Profile& profile, const Assignment& mu);

/// Agents pick, in priority order, their favourite house still available.
Assignment serial_dictatorship(const Profile& profile, const PriorityOrder& order);
/// Agents pick, in priority order, their least preferred house still available.
Assignment serial_antidictatorship(const Profile& profile, const PriorityOrder& order);

/// Every agent weakly prefers mu to lambda and at least one strictly.
bool pareto_dominates(const Profile& profile, const Assignment& mu, const Assignment& lambda);

/// No trading cycle: the graph x -> y iff mu(y) is better than mu(x) for x is acyclic.
bool is_pareto_optimal(const Profile& profile, const Assignment& mu);
/// The graph x -> y iff mu(x) is better than mu(y) for x is acyclic.
bool is_pareto_pessimal(const Profile& profile, const Assignment& mu);

/// Universe indices, increasing. Throws LimitExceeded above brute_limit.
std::vector<AssignmentIndex> pareto_optimal_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);
std::vector<AssignmentIndex> pareto_pessimal_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);

}  // namespace majassign
