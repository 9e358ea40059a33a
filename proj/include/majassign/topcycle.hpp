#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "majassign/assignment.hpp"
#include "majassign/bitset.hpp"
#include "majassign/majority.hpp"
#include "majassign/profile.hpp"

namespace majassign {

/// Maximal elements of the transitive closure of weak majority domination.
Bitset tc_brute(const MajorityMatrix& m);
/// Minimal elements of the same closure.
Bitset bc_brute(const MajorityMatrix& m);

/// Assignments reachable from `from` along weak majority edges (including `from`).
Bitset forward_reach(const MajorityMatrix& m, AssignmentIndex from);
/// Assignments that reach `to` along weak majority edges (including `to`).
Bitset backward_reach(const MajorityMatrix& m, AssignmentIndex to);

namespace tc {

/// All agents have distinct top choices; the top cycle is that single assignment.
struct CaseI {
  Assignment winner;
};
/// Two agents share top and second choice; the top cycle is these two assignments.
struct CaseII {
  Assignment first;
  Assignment second;
};
/// Everything except two Pareto-pessimal assignments.
struct CaseIII {
  Assignment first;
  Assignment second;
};
/// Everything except one Pareto-pessimal assignment.
struct CaseIV {
  Assignment excluded;
};
/// All assignments.
struct CaseV {};
/// Small n: the members themselves, as universe indices.
struct Explicit {
  std::vector<AssignmentIndex> members;
};

}  // namespace tc

struct TcDescription {
  int n = 0;
  std::variant<tc::CaseI, tc::CaseII, tc::CaseIII, tc::CaseIV, tc::CaseV, tc::Explicit> shape;
  boost::multiprecision::cpp_int size;

  /// "I".."V" or "explicit".
  [[nodiscard]] std::string case_name() const;
};

/// Closed-form top cycle for n >= 5 in O(n^2); for n <= 4 falls back to tc_brute.
TcDescription tc_characterize(const Profile& profile);
/// Bottom cycle, as the top cycle of the inverted profile.
TcDescription bc_characterize(const Profile& profile);

/// Membership in O(n) from a description produced for the same profile.
bool tc_contains(const TcDescription& desc, const Assignment& mu);

/// Members as a bitset over the universe; requires desc.n <= brute_limit.
Bitset tc_members(const TcDescription& desc, int brute_limit = kDefaultBruteLimit);

}  // namespace majassign
