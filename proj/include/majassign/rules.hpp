#pragma once

#include <vector>

#include "majassign/assignment.hpp"
#include "majassign/majority.hpp"
#include "majassign/profile.hpp"

namespace majassign {

/// counts[r-1] = number of agents receiving their r-th choice under mu.
std::vector<int> rank_signature(const Profile& profile, const Assignment& mu);

/// Maximize the number of first choices, then second choices, and so on.
std::vector<AssignmentIndex> rank_maximal_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);
/// Minimize the number of last choices, then second-to-last choices, and so on.
std::vector<AssignmentIndex> generous_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);

struct LeastUnpopular {
  /// Smallest worst-defeat margin max_lambda margin(lambda, mu); 0 iff a popular assignment exists.
  int margin = 0;
  std::vector<AssignmentIndex> members;
};

LeastUnpopular least_unpopular_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);
LeastUnpopular least_unpopular_set(const MajorityMatrix& m);

/// May be empty.
std::vector<AssignmentIndex> popular_set(const Profile& profile, int brute_limit = kDefaultBruteLimit);
std::vector<AssignmentIndex> popular_set(const MajorityMatrix& m);

}  // namespace majassign
