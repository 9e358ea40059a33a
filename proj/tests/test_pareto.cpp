#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "majassign/errors.hpp"
#include "majassign/pareto.hpp"
#include "majassign/topcycle.hpp"
#include "oracles.hpp"

using namespace majassign;

TEST_SUITE_BEGIN("pareto");

TEST_CASE("serial dictatorship") {
  const Profile u = fixture::load("unanimous3");
  CHECK(serial_dictatorship(u, PriorityOrder::identity(3)) == fixture::assignment(u, "a,b,c"));
  CHECK(serial_antidictatorship(u, PriorityOrder::identity(3)) == fixture::assignment(u, "c,b,a"));

  const Profile uc = fixture::load("uc_example");
  CHECK(serial_dictatorship(uc, PriorityOrder({1, 2, 0})) == fixture::assignment(uc, "c,a,b"));

  const Profile bad = fixture::load("bad_tc");
  CHECK(serial_dictatorship(bad, PriorityOrder({2, 3, 5, 6, 0, 4, 1})) == fixture::assignment(bad, "b,e,d,a,g,f,c"));

  const Profile one = parse_profile("1\na");
  CHECK(serial_antidictatorship(one, PriorityOrder::identity(1)) == Assignment::identity(1));

  std::mt19937_64 gen(43);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 6;
    const Profile p = oracle::random_profile(n, gen);
    std::vector<AgentId> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), gen);
    const PriorityOrder sigma(order);
    REQUIRE(serial_dictatorship(p, sigma).houses().size() == static_cast<std::size_t>(n));
    const auto sd = serial_dictatorship(p, sigma);
    REQUIRE(std::vector<int>(sd.houses().begin(), sd.houses().end()) == oracle::serial_dictatorship(p, order));
    const auto asd = serial_antidictatorship(p, sigma);
    REQUIRE(std::vector<int>(asd.houses().begin(), asd.houses().end()) ==
            oracle::serial_dictatorship(p, order, true));
    REQUIRE(asd == serial_dictatorship(invert_profile(p), sigma));
    REQUIRE(is_pareto_optimal(p, sd));
    REQUIRE(is_pareto_pessimal(p, asd));
  }
}

TEST_CASE("pareto dominance") {
  const Profile q = fixture::load("rank_maximal_q");
  CHECK_FALSE(pareto_dominates(q, fixture::assignment(q, "d,f,e,a,b,c"), fixture::assignment(q, "a,c,b,d,e,f")));
  const Profile uc = fixture::load("uc_example");
  const auto mu = fixture::assignment(uc, "c,a,b");
  const auto la = fixture::assignment(uc, "a,b,c");
  CHECK_FALSE(pareto_dominates(uc, mu, mu));
  CHECK_FALSE(pareto_dominates(uc, mu, la));
  CHECK_FALSE(pareto_dominates(uc, la, mu));
  CHECK(is_pareto_optimal(uc, la));
  CHECK_FALSE(is_pareto_optimal(fixture::load("bad_tc"), fixture::assignment(fixture::load("bad_tc"), "g,c,f,e,d,b,a")));
}

TEST_CASE("cycle test agrees with quantified dominance") {
  // every n = 3 profile
  const auto perms = oracle::permutations(3);
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      for (const auto& c : perms) {
        const Profile p = Profile::from_rankings({a, b, c});
        REQUIRE(pareto_optimal_set(p) == oracle::pareto_set(p, true));
        REQUIRE(pareto_pessimal_set(p) == oracle::pareto_set(p, false));
      }
    }
  }
  std::mt19937_64 gen(47);
  for (int t = 0; t < 40; ++t) {
    const Profile p = oracle::random_profile(4 + t % 2, gen);
    REQUIRE(pareto_optimal_set(p) == oracle::pareto_set(p, true));
    REQUIRE(pareto_pessimal_set(p) == oracle::pareto_set(p, false));
  }
}

TEST_CASE("serial dictatorship outcomes are exactly the Pareto optima") {
  std::mt19937_64 gen(53);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 4;
    const Profile p = oracle::random_profile(n, gen);
    std::set<AssignmentIndex> outcomes;
    for (const auto& order : oracle::permutations(n)) {
      outcomes.insert(Universe::of(n).index_of(serial_dictatorship(p, PriorityOrder(order))));
    }
    const auto po = pareto_optimal_set(p);
    REQUIRE(std::vector<AssignmentIndex>(outcomes.begin(), outcomes.end()) == po);
    REQUIRE_FALSE(po.empty());
    REQUIRE(pareto_pessimal_set(p) == pareto_optimal_set(invert_profile(p)));
  }
}

TEST_CASE("pareto sets on fixtures") {
  CHECK(pareto_optimal_set(fixture::load("unanimous3")).size() == 6);
  CHECK(pareto_pessimal_set(fixture::load("unanimous3")).size() == 6);

  // two agents share top a and second b, b is nobody's top, others have distinct tops
  const Profile p = parse_profile("5\na b c d e\na b e d c\nc a b d e\nd e a b c\ne d c b a");
  const TcDescription d = tc_characterize(p);
  REQUIRE(d.case_name() == "II");
  const auto& pair = std::get<tc::CaseII>(d.shape);
  CHECK(is_pareto_optimal(p, pair.first));
  CHECK(is_pareto_optimal(p, pair.second));

  std::mt19937_64 gen(59);
  CHECK_THROWS_AS(pareto_optimal_set(oracle::random_profile(8, gen)), LimitExceeded);
}

TEST_SUITE_END();
