#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "majassign/errors.hpp"
#include "oracles.hpp"

using namespace majassign;

TEST_SUITE_BEGIN("core");

TEST_CASE("parse_profile") {
  const Profile p = parse_profile("3\na b c\na b c\na b c");
  CHECK(p.size() == 3);
  for (int x = 0; x < 3; ++x) CHECK(p.order(x).ranking()[0] == 0);

  const Profile single = parse_profile("1\na");
  CHECK(single.size() == 1);
  CHECK(single.order(0).top() == 0);

  CHECK_THROWS_AS(parse_profile("2\na b\nb b"), ParseError);
  CHECK_THROWS_AS(parse_profile("2\na b\na"), ParseError);
  CHECK_THROWS_AS(parse_profile("0\n"), ParseError);
  CHECK_THROWS_AS(parse_profile("2\na b\na c"), ParseError);
  CHECK_THROWS_AS(parse_profile("3\na b c\na b c"), ParseError);

  SUBCASE("comments and labels") {
    const Profile q = parse_profile("# comment\n2\n\ny x\nx y\n");
    CHECK(q.label(0) == "x");
    CHECK(q.order(0).top() == 1);
    CHECK(format_profile(q) == "2\ny x\nx y\n");
  }
}

TEST_CASE("rank") {
  const Profile p = parse_profile("3\na b c\na b c\na b c");
  CHECK(rank(p.order(0), 0) == 1);
  CHECK(rank(p.order(0), 2) == 3);
  const Profile rm = fixture::load("rank_maximal_p");
  CHECK(rank(rm.order(1), *rm.house("c")) == 2);
}

TEST_CASE("assignment literals") {
  const Profile p = fixture::load("uc_example");
  const Assignment a = parse_assignment(p, "c,a,b");
  CHECK(a[0] == 2);
  CHECK(parse_assignment(p, "(c,a,b)") == a);
  CHECK(format_assignment(p, a) == "(c,a,b)");
  CHECK_THROWS_AS(parse_assignment(p, "c,a"), ParseError);
  CHECK_THROWS_AS(parse_assignment(p, "c,a,a"), ParseError);
  CHECK_THROWS_AS(parse_assignment(p, "c,a,z"), ParseError);
}

TEST_CASE("indexer round trip and order") {
  for (int n = 1; n <= 7; ++n) {
    const AssignmentIndexer ix(n);
    const auto perms = oracle::permutations(n);
    REQUIRE(ix.size() == perms.size());
    for (std::size_t i = 0; i < perms.size(); ++i) {
      const Assignment a(perms[i]);
      REQUIRE(ix.index(a) == i);
      REQUIRE(ix.unindex(i) == a);
    }
  }
  const Universe& u = Universe::of(4);
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    CHECK(u.at(static_cast<AssignmentIndex>(i)) < u.at(static_cast<AssignmentIndex>(i + 1)));
  }
  CHECK(factorial(20) == boost::multiprecision::cpp_int(factorial_u64(20)));
  CHECK(factorial(25) > boost::multiprecision::cpp_int(factorial_u64(20)));
}

TEST_CASE("require_dense") {
  CHECK_NOTHROW(require_dense(7, 7));
  CHECK_THROWS_AS(require_dense(8, 7), LimitExceeded);
  CHECK_THROWS_AS(require_dense(3, 9), LimitExceeded);
}

TEST_CASE("invert_profile") {
  const Profile p = parse_profile("3\na b c\na b c\na b c");
  CHECK(invert_profile(p) == parse_profile("3\nc b a\nc b a\nc b a"));
  CHECK(invert_profile(parse_profile("1\na")) == parse_profile("1\na"));
  std::mt19937_64 gen(7);
  for (int i = 0; i < 100; ++i) {
    const Profile q = oracle::random_profile(2 + i % 6, gen);
    REQUIRE(invert_profile(invert_profile(q)) == q);
  }
}

TEST_CASE("restrict_profile") {
  const Profile p = fixture::load("bad_tc");
  const std::vector<AgentId> agents{0, 1, 2, 3, 4};
  std::vector<HouseId> houses;
  for (const char* h : {"f", "d", "a", "e", "c"}) houses.push_back(*p.house(h));
  const Profile r = restrict_profile(p, agents, houses);
  std::vector<std::string> first;
  for (HouseId h : r.order(0).ranking()) first.push_back(r.label(h));
  CHECK(first == std::vector<std::string>{"f", "d", "e", "c", "a"});

  std::vector<AgentId> all_agents(7);
  std::vector<HouseId> all_houses(7);
  for (int i = 0; i < 7; ++i) all_agents[i] = all_houses[i] = i;
  CHECK(restrict_profile(p, all_agents, all_houses) == p);

  CHECK_THROWS(restrict_profile(p, agents, std::vector<HouseId>{0, 1}));

  std::mt19937_64 gen(11);
  for (int t = 0; t < 50; ++t) {
    const Profile q = oracle::random_profile(6, gen);
    const std::vector<AgentId> keep_agents{1, 3, 4};
    const std::vector<HouseId> keep_houses{0, 2, 5};
    const Profile s = restrict_profile(q, keep_agents, keep_houses);
    for (int i = 0; i < 3; ++i) {
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          REQUIRE(s.order(i).prefers(a, b) == q.order(keep_agents[i]).prefers(keep_houses[a], keep_houses[b]));
        }
      }
    }
  }
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(parse_profile("3\nc a b\nc a b\nc a b")) == parse_profile("3\na b c\na b c\na b c"));

  std::mt19937_64 gen(3);
  for (int t = 0; t < 1000; ++t) {
    const int n = 2 + t % 5;
    const Profile p = oracle::random_profile(n, gen);
    const Profile c = canonical_form(p);
    REQUIRE(canonical_form(c) == c);

    // agent permutation fixing agent 1, plus an arbitrary house relabeling
    std::vector<AgentId> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), gen);
    std::vector<HouseId> relabel(static_cast<std::size_t>(n));
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), gen);
    REQUIRE(canonical_form(relabel_houses(permute_agents(p, perm), relabel)) == c);
  }

  // every n = 3 profile maps to one of C(3! + 1, 2) = 21 representatives
  const auto perms = oracle::permutations(3);
  std::set<std::string> seen;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      for (const auto& c : perms) {
        seen.insert(format_profile(canonical_form(Profile::from_rankings({a, b, c}))));
      }
    }
  }
  CHECK(seen.size() == 21);
}

TEST_SUITE_END();
