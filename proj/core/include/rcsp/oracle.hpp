#pragma once

#include "rcsp/graph.hpp"
#include "rcsp/heuristic.hpp"
#include "rcsp/search.hpp"

#include <random>
#include <string>
#include <vector>

namespace rcsp {

struct OracleSolution {
  CostVector cost;
  std::vector<StateId> path;
};

// Lex-sorted by cost vector; one witness path per distinct vector.
struct OracleResult {
  std::vector<OracleSolution> solutions;
};

// Reference solver: enumerates every simple start-goal path, filters by the
// resource limits, keeps the non-dominated vectors of minimal primary cost.
// Valid when no negative cycle lies on a start-goal walk (i.e. preparation
// did not report one); refuses graphs with more than 14 states.
OracleResult enumerate_solutions(const Problem& p);

struct VerifyReport {
  bool pass = true;
  std::vector<CostVector> missing;  // oracle has them, solver does not
  std::vector<CostVector> extra;    // solver has them, oracle does not
  std::vector<std::string> path_errors;
};

// Set-compares solver output against the oracle and revalidates each solver
// path: endpoints, simplicity, edge existence, and that edge costs can sum
// to the reported vector.
VerifyReport verify(const Problem& p, const SolveResult& got, const OracleResult& want);

// Deterministic helpers used wherever seeded randomness must be reproducible
// across standard libraries.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  return n ? rng() % n : 0;
}
inline double rand_real01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct FuzzConfig {
  std::uint32_t min_states = 4;
  std::uint32_t max_states = 12;
  double min_edge_prob = 0.25;
  double max_edge_prob = 0.5;
  Cost min_cost = -3;
  Cost max_cost = 5;
  std::vector<int> resource_choices = {1, 2, 3};
};

struct FuzzInstance {
  Problem problem;
  PreparedInstance prepared;
};

// Random sparse digraph with signed costs plus a query and limits chosen to
// cover tight, loose, and infeasible regimes. Instances whose preparation
// reports a negative cycle are discarded and regenerated.
FuzzInstance make_random_instance(std::mt19937_64& rng, const FuzzConfig& cfg = {});

}  // namespace rcsp
