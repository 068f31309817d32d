#include "rcsp/oracle.hpp"

#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace rcsp;
using rcsp::testing::GoldenMap;
using rcsp::testing::make_problem;

TEST_CASE("oracle enumerates the hand-computed optima") {
  auto tight = enumerate_solutions(
      make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::ug, {3, 3}));
  REQUIRE(tight.solutions.size() == 2);
  CHECK(tight.solutions[0].cost == CostVector{2, 2, 2});
  CHECK(tight.solutions[1].cost == CostVector{2, 3, 0});

  auto loose = enumerate_solutions(
      make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::ug, {9, 9}));
  REQUIRE(loose.solutions.size() == 1);
  CHECK(loose.solutions[0].cost == CostVector{-1, 1, 4});
  CHECK(loose.solutions[0].path ==
        std::vector<StateId>{GoldenMap::us, GoldenMap::u1, GoldenMap::ug});

  auto none = enumerate_solutions(
      make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::ug, {0, 0}));
  CHECK(none.solutions.empty());
}

TEST_CASE("oracle corner cases") {
  auto self = enumerate_solutions(
      make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::us, {5, 5}));
  REQUIRE(self.solutions.size() == 1);
  CHECK(self.solutions[0].cost == CostVector{0, 0, 0});
  CHECK(self.solutions[0].path == std::vector<StateId>{GoldenMap::us});

  auto unreachable = enumerate_solutions(
      make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::u4, {99, 99}));
  CHECK(unreachable.solutions.empty());

  Graph big(15, {}, 3);
  CHECK_THROWS_AS(
      enumerate_solutions(Problem(std::move(big), 0, 1, {1, 1})),
      std::invalid_argument);
}

TEST_CASE("verify cross-checks vectors and paths") {
  auto p = make_problem(GoldenMap::graph(), GoldenMap::us, GoldenMap::ug, {3, 3});
  auto want = enumerate_solutions(p);
  auto got = prepare_and_solve(p);
  REQUIRE(got.has_value());

  auto ok = verify(p, *got, want);
  CHECK(ok.pass);
  CHECK(ok.missing.empty());
  CHECK(ok.extra.empty());
  CHECK(ok.path_errors.empty());

  SUBCASE("a dropped vector is missing") {
    auto crippled = *got;
    crippled.solutions.pop_back();
    auto rep = verify(p, crippled, want);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.missing.size() == 1);
    CHECK(rep.missing[0] == CostVector{2, 3, 0});
  }

  SUBCASE("an invented vector is extra") {
    auto padded = *got;
    padded.solutions.push_back(
        {CostVector{2, 1, 1},
         {GoldenMap::us, GoldenMap::u3, GoldenMap::ug}});
    auto rep = verify(p, padded, want);
    CHECK_FALSE(rep.pass);
    REQUIRE(rep.extra.size() == 1);
    CHECK(rep.extra[0] == CostVector{2, 1, 1});
  }

  SUBCASE("a path that cannot produce its vector is flagged") {
    auto lied = *got;
    lied.solutions[0].path = {GoldenMap::us, GoldenMap::u2, GoldenMap::ug};
    auto rep = verify(p, lied, want);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.path_errors.empty());
  }

  SUBCASE("a repeated state is flagged") {
    auto looped = *got;
    looped.solutions[0].path = {GoldenMap::us, GoldenMap::u3, GoldenMap::u3, GoldenMap::ug};
    auto rep = verify(p, looped, want);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.path_errors.empty());
  }

  SUBCASE("wrong endpoints are flagged") {
    auto wrong = *got;
    wrong.solutions[0].path = {GoldenMap::u1, GoldenMap::ug};
    auto rep = verify(p, wrong, want);
    CHECK_FALSE(rep.pass);
    CHECK_FALSE(rep.path_errors.empty());
  }
}

TEST_CASE("deterministic helpers are stable across runs") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    CHECK(rand_below(a, 17) == rand_below(b, 17));
    double x = rand_real01(a), y = rand_real01(b);
    CHECK(x == y);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(rand_below(a, 0) == 0);
}

TEST_CASE("random instances are reproducible and well-formed") {
  std::mt19937_64 a(7), b(7);
  auto ia = make_random_instance(a);
  auto ib = make_random_instance(b);
  CHECK(ia.problem.graph().edge_count() == ib.problem.graph().edge_count());
  CHECK(ia.problem.start() == ib.problem.start());
  CHECK(ia.problem.goal() == ib.problem.goal());
  REQUIRE(ia.problem.resource_count() == ib.problem.resource_count());
  for (int k = 0; k < ia.problem.resource_count(); ++k)
    CHECK(ia.problem.resource_limits()[k] == ib.problem.resource_limits()[k]);

  std::set<std::uint32_t> state_counts, arities;
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    auto inst = make_random_instance(rng);
    state_counts.insert(inst.problem.graph().state_count());
    arities.insert(static_cast<std::uint32_t>(inst.problem.graph().arity()));
    CHECK(inst.problem.graph().state_count() >= 4);
    CHECK(inst.problem.graph().state_count() <= 12);
    CHECK(inst.prepared.limits.size() ==
          static_cast<std::size_t>(inst.problem.resource_count()));
    CHECK(heuristic_is_consistent(*inst.prepared.graph, inst.prepared.heuristics,
                                  inst.prepared.goal));
  }
  CHECK(state_counts.size() > 3);   // sizes actually vary
  CHECK(arities.size() == 3);       // d = 1, 2 and 3 all occur
}

TEST_CASE("solver matches the oracle on two thousand random instances") {
  std::mt19937_64 rng(20240815);
  for (int i = 0; i < 2000; ++i) {
    auto inst = make_random_instance(rng);
    auto got = solve(inst.prepared);
    REQUIRE(got.status == SolveStatus::completed);
    auto want = enumerate_solutions(inst.problem);
    auto rep = verify(inst.problem, got, want);
    if (!rep.pass) {
      CAPTURE(i);
      CAPTURE(inst.problem.start());
      CAPTURE(inst.problem.goal());
      for (auto& m : rep.missing) {
        CAPTURE(m);
      }
      for (auto& e : rep.path_errors) {
        CAPTURE(e);
      }
      REQUIRE(rep.pass);
    }
  }
}
