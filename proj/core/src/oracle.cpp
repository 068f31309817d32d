#include "rcsp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rcsp {

namespace {

struct PathEnum {
  const Graph& g;
  StateId goal;
  std::vector<Cost> acc;
  std::vector<StateId> path;
  std::uint32_t visited = 0;  // bitmask, state_count <= 14
  std::vector<OracleSolution> found;

  void dfs(StateId u) {
    if (u == goal) {
      found.push_back({CostVector::from(acc), path});
      return;  // extending past the goal cannot stay simple and return again
    }
    for (EdgeId e : g.out_edges(u)) {
      StateId v = g.target(e);
      if (visited & (1u << v)) continue;
      visited |= 1u << v;
      path.push_back(v);
      for (int k = 0; k < g.arity(); ++k) acc[k] += g.cost(e, k);
      dfs(v);
      for (int k = 0; k < g.arity(); ++k) acc[k] -= g.cost(e, k);
      path.pop_back();
      visited &= ~(1u << v);
    }
  }
};

bool lex_less_vec(const CostVector& a, const CostVector& b) {
  return std::lexicographical_compare(a.values().begin(), a.values().end(),
                                      b.values().begin(), b.values().end());
}

std::string tuple_str(const CostVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Can some choice of parallel edges along `path` sum to `want`?
bool edge_sums_match(const Graph& g, const std::vector<StateId>& path,
                     std::size_t step, const std::vector<Cost>& acc,
                     const CostVector& want) {
  if (step + 1 >= path.size()) {
    for (int k = 0; k < g.arity(); ++k)
      if (acc[k] != want[k]) return false;
    return true;
  }
  for (EdgeId e : g.out_edges(path[step])) {
    if (g.target(e) != path[step + 1]) continue;
    std::vector<Cost> next(acc);
    for (int k = 0; k < g.arity(); ++k) next[k] += g.cost(e, k);
    if (edge_sums_match(g, path, step + 1, next, want)) return true;
  }
  return false;
}

}  // namespace

OracleResult enumerate_solutions(const Problem& p) {
  const Graph& g = p.graph();
  if (g.state_count() > 14)
    throw std::invalid_argument("enumerate_solutions: more than 14 states");

  PathEnum en{g, p.goal(), std::vector<Cost>(g.arity(), 0), {p.start()},
              1u << p.start(), {}};
  en.dfs(p.start());

  std::span<const Cost> limits = p.resource_limits();
  std::vector<OracleSolution> feasible;
  for (OracleSolution& s : en.found) {
    bool ok = true;
    for (int k = 0; k < p.resource_count(); ++k)
      if (s.cost[k + 1] > limits[k]) ok = false;
    if (ok) feasible.push_back(std::move(s));
  }
  if (feasible.empty()) return {};

  Cost best = feasible.front().cost[0];
  for (const OracleSolution& s : feasible) best = std::min(best, s.cost[0]);

  std::vector<OracleSolution> optimal;
  for (OracleSolution& s : feasible)
    if (s.cost[0] == best) optimal.push_back(std::move(s));

  std::sort(optimal.begin(), optimal.end(),
            [](const OracleSolution& a, const OracleSolution& b) {
              return lex_less_vec(a.cost, b.cost);
            });
  optimal.erase(std::unique(optimal.begin(), optimal.end(),
                            [](const OracleSolution& a, const OracleSolution& b) {
                              return a.cost == b.cost;
                            }),
                optimal.end());

  std::vector<bool> dominated(optimal.size(), false);
  for (std::size_t i = 0; i < optimal.size(); ++i)
    for (std::size_t j = 0; j < optimal.size() && !dominated[i]; ++j)
      if (i != j && !dominated[j] &&
          weakly_dominates(optimal[j].cost, optimal[i].cost))
        dominated[i] = true;

  OracleResult out;
  for (std::size_t i = 0; i < optimal.size(); ++i)
    if (!dominated[i]) out.solutions.push_back(std::move(optimal[i]));
  return out;
}

VerifyReport verify(const Problem& p, const SolveResult& got, const OracleResult& want) {
  VerifyReport rep;

  std::vector<CostVector> a, b;
  for (const Solution& s : got.solutions) a.push_back(s.cost);
  for (const OracleSolution& s : want.solutions) b.push_back(s.cost);
  std::sort(a.begin(), a.end(), lex_less_vec);
  std::sort(b.begin(), b.end(), lex_less_vec);
  std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                      std::back_inserter(rep.missing), lex_less_vec);
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(rep.extra), lex_less_vec);

  const Graph& g = p.graph();
  for (const Solution& s : got.solutions) {
    if (s.path.empty() || s.path.front() != p.start() || s.path.back() != p.goal()) {
      rep.path_errors.push_back("bad endpoints for " + tuple_str(s.cost));
      continue;
    }
    std::vector<StateId> sorted_states(s.path);
    std::sort(sorted_states.begin(), sorted_states.end());
    if (std::adjacent_find(sorted_states.begin(), sorted_states.end()) !=
        sorted_states.end()) {
      rep.path_errors.push_back("repeated state on path for " + tuple_str(s.cost));
      continue;
    }
    if (!edge_sums_match(g, s.path, 0, std::vector<Cost>(g.arity(), 0), s.cost))
      rep.path_errors.push_back("edge costs do not sum to " + tuple_str(s.cost));
  }

  rep.pass = rep.missing.empty() && rep.extra.empty() && rep.path_errors.empty();
  return rep;
}

FuzzInstance make_random_instance(std::mt19937_64& rng, const FuzzConfig& cfg) {
  for (;;) {
    const std::uint32_t n =
        cfg.min_states +
        static_cast<std::uint32_t>(rand_below(rng, cfg.max_states - cfg.min_states + 1));
    const int d = cfg.resource_choices[rand_below(rng, cfg.resource_choices.size())];
    const int arity = d + 1;
    const double edge_prob =
        cfg.min_edge_prob + rand_real01(rng) * (cfg.max_edge_prob - cfg.min_edge_prob);
    const std::uint64_t cost_range =
        static_cast<std::uint64_t>(cfg.max_cost - cfg.min_cost + 1);

    std::vector<Edge> edges;
    for (StateId u = 0; u < n; ++u)
      for (StateId v = 0; v < n; ++v) {
        if (u == v || rand_real01(rng) >= edge_prob) continue;
        CostVector c = CostVector::zeros(arity);
        for (int k = 0; k < arity; ++k)
          c[k] = cfg.min_cost + static_cast<Cost>(rand_below(rng, cost_range));
        edges.push_back({u, v, std::move(c)});
      }

    const StateId start = static_cast<StateId>(rand_below(rng, n));
    const StateId goal = static_cast<StateId>(rand_below(rng, n));

    auto graph = std::make_shared<const Graph>(n, std::move(edges), arity);
    Problem probe(graph, start, goal, std::vector<Cost>(d, 0));
    PrepareResult prep = build_heuristics(probe);
    if (prep.status == PrepareStatus::negative_cycle) continue;
    PreparedInstance inst = std::move(*prep.instance);

    // Limits: interpolate between the per-dimension lower bound at the start
    // and the consumption of the unconstrained optimum when the goal is
    // reachable, overshooting both ends; otherwise plain random.
    std::vector<Cost> limits(static_cast<std::size_t>(d));
    const bool reachable =
        inst.goal != kNoState && is_finite(inst.heuristics.value(inst.start, 0));
    if (reachable) {
      OneToAllResult fwd =
          one_to_all_optimal(*graph, start, 0, SearchDirection::forward);
      std::vector<StateId> opt_path = extract_forward_path(*graph, fwd, start, goal);
      std::vector<Cost> ub(static_cast<std::size_t>(arity), 0);
      for (std::size_t i = 0; i + 1 < opt_path.size(); ++i) {
        // Walk the parent edges again to charge the exact edges used.
        EdgeId e = fwd.parent_edge[opt_path[i + 1]];
        for (int k = 0; k < arity; ++k) ub[k] += graph->cost(e, k);
      }
      for (int k = 0; k < d; ++k) {
        const Cost lo = inst.heuristics.value(inst.start, k + 1);
        const Cost span = ub[k + 1] - lo;
        if (rand_below(rng, 4) == 0) {
          limits[k] = cfg.min_cost * 3 +
                      static_cast<Cost>(rand_below(rng, cost_range * 6));
        } else if (span <= 0) {
          limits[k] = lo + static_cast<Cost>(rand_below(rng, 3)) - 1;
        } else {
          const double t = rand_real01(rng) * 1.3 - 0.15;
          limits[k] = lo + static_cast<Cost>(std::floor(t * static_cast<double>(span)));
        }
      }
    } else {
      for (int k = 0; k < d; ++k)
        limits[k] = static_cast<Cost>(rand_below(rng, 16)) - 5;
    }

    Problem problem(graph, start, goal, limits);
    inst.limits = limits;
    inst.bounds = init_upper_bounds(problem);
    return {std::move(problem), std::move(inst)};
  }
}

}  // namespace rcsp
