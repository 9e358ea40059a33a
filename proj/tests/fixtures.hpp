#pragma once

#include <string>

#include "majassign/assignment.hpp"
#include "majassign/profile.hpp"
#include "majassign/reconstruct.hpp"

namespace fixture {

inline majassign::Profile load(const std::string& name) {
  return majassign::load_profile(std::string(MAJASSIGN_TEST_DATA) + "/" + name + ".txt");
}

inline majassign::Assignment assignment(const majassign::Profile& p, const std::string& literal) {
  return majassign::parse_assignment(p, literal);
}

inline majassign::AssignmentIndex index(const majassign::Profile& p, const std::string& literal) {
  return majassign::Universe::of(p.size()).index_of(assignment(p, literal));
}

inline majassign::Profile parse(const std::string& text) { return majassign::parse_profile(text); }

}  // namespace fixture
