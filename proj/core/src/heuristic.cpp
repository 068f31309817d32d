#include "rcsp/heuristic.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace rcsp {

namespace {

// Neighbor receiving a value propagated out of w in the given direction.
inline StateId relax_neighbor(const Graph& g, EdgeId e, SearchDirection dir) {
  return dir == SearchDirection::backward ? g.source(e) : g.target(e);
}

inline std::span<const EdgeId> relax_edges(const Graph& g, StateId w,
                                           SearchDirection dir) {
  return dir == SearchDirection::backward ? g.in_edges(w) : g.out_edges(w);
}

}  // namespace

OneToAllResult one_to_all_optimal(const Graph& g, StateId origin, int dim,
                                  SearchDirection dir) {
  const std::uint32_t n = g.state_count();
  if (origin >= n) throw std::invalid_argument("one_to_all_optimal: origin out of range");
  if (dim < 0 || dim >= g.arity())
    throw std::invalid_argument("one_to_all_optimal: dimension out of range");

  OneToAllResult r;
  r.dist.assign(n, kInfCost);
  r.parent_edge.assign(n, kNoEdge);

  std::vector<std::uint8_t> in_queue(n, 0), marked(n, 0);
  std::vector<std::uint32_t> enqueues(n, 0);
  std::deque<StateId> queue;

  // Marks v and everything whose value flows through v as unbounded.
  auto mark_unbounded = [&](StateId v) {
    r.has_unbounded = true;
    std::vector<StateId> stack{v};
    marked[v] = 1;
    r.dist[v] = kNegInfCost;
    while (!stack.empty()) {
      StateId w = stack.back();
      stack.pop_back();
      for (EdgeId e : relax_edges(g, w, dir)) {
        StateId u = relax_neighbor(g, e, dir);
        if (!marked[u]) {
          marked[u] = 1;
          r.dist[u] = kNegInfCost;
          stack.push_back(u);
        }
      }
    }
  };

  r.dist[origin] = 0;
  queue.push_back(origin);
  in_queue[origin] = 1;
  enqueues[origin] = 1;

  while (!queue.empty()) {
    StateId w = queue.front();
    queue.pop_front();
    in_queue[w] = 0;
    if (marked[w]) continue;
    const Cost dw = r.dist[w];
    for (EdgeId e : relax_edges(g, w, dir)) {
      StateId u = relax_neighbor(g, e, dir);
      if (marked[u]) continue;
      const Cost cand = dw + g.cost(e, dim);
      if (cand < r.dist[u]) {
        r.dist[u] = cand;
        r.parent_edge[u] = e;
        if (!in_queue[u]) {
          // A state can be queued at most n-1 times when its value is
          // bounded; one more means a negative cycle feeds it.
          if (++enqueues[u] >= n) {
            mark_unbounded(u);
          } else {
            in_queue[u] = 1;
            queue.push_back(u);
          }
        }
      }
    }
  }
  return r;
}

std::vector<StateId> extract_forward_path(const Graph& g, const OneToAllResult& r,
                                          StateId origin, StateId to) {
  if (to >= g.state_count() || origin >= g.state_count())
    throw std::invalid_argument("extract_forward_path: state out of range");
  if (!is_finite(r.dist[to])) return {};
  std::vector<StateId> rev{to};
  StateId u = to;
  while (u != origin) {
    EdgeId e = r.parent_edge[u];
    if (e == kNoEdge || rev.size() > g.state_count())
      throw std::logic_error("extract_forward_path: broken parent chain");
    u = g.source(e);
    rev.push_back(u);
  }
  return {rev.rbegin(), rev.rend()};
}

bool heuristic_is_consistent(const Graph& g, const HeuristicTable& h, StateId goal) {
  if (goal != kNoState)
    for (int k = 0; k < g.arity(); ++k)
      if (h.value(goal, k) != 0) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    StateId u = g.source(e), v = g.target(e);
    for (int k = 0; k < g.arity(); ++k)
      if (h.value(u, k) > saturating_add(g.cost(e, k), h.value(v, k))) return false;
  }
  return true;
}

UpperBounds init_upper_bounds(const Problem& p) {
  UpperBounds b;
  b.primary = kInfCost;
  b.resources.assign(p.resource_limits().begin(), p.resource_limits().end());
  return b;
}

PrepareResult build_heuristics(const Problem& p) {
  const Graph& g = p.graph();
  PreparedInstance inst;

  std::vector<bool> reach = reachable_from(g, p.start());
  std::size_t kept = static_cast<std::size_t>(
      std::count(reach.begin(), reach.end(), true));
  if (kept == g.state_count()) {
    inst.graph = p.graph_ptr();
    inst.old_of_new.resize(g.state_count());
    inst.new_of_old.resize(g.state_count());
    for (StateId u = 0; u < g.state_count(); ++u) {
      inst.old_of_new[u] = u;
      inst.new_of_old[u] = static_cast<std::int32_t>(u);
    }
  } else {
    RestrictedGraph r = restrict_to(g, reach);
    inst.graph = std::make_shared<const Graph>(std::move(r.graph));
    inst.old_of_new = std::move(r.old_of_new);
    inst.new_of_old = std::move(r.new_of_old);
  }

  inst.start = static_cast<StateId>(inst.new_of_old[p.start()]);
  inst.goal = inst.new_of_old[p.goal()] < 0
                  ? kNoState
                  : static_cast<StateId>(inst.new_of_old[p.goal()]);
  inst.limits.assign(p.resource_limits().begin(), p.resource_limits().end());

  const Graph& rg = *inst.graph;
  inst.heuristics = HeuristicTable(rg.state_count(), rg.arity());
  if (inst.goal != kNoState) {
    for (int k = 0; k < rg.arity(); ++k) {
      OneToAllResult one = backward_optimal_costs(rg, inst.goal, k);
      if (one.has_unbounded) return {PrepareStatus::negative_cycle, std::nullopt};
      for (StateId u = 0; u < rg.state_count(); ++u)
        inst.heuristics.set(u, k, one.dist[u]);
    }
  }
  // Goal unreachable leaves the table at +inf; the bound test then prunes
  // every generated node and the search reports no solutions.

  if (!heuristic_is_consistent(rg, inst.heuristics, inst.goal))
    throw std::logic_error("build_heuristics: inconsistent lower bounds");

  inst.bounds = init_upper_bounds(p);
  return {PrepareStatus::ok, std::move(inst)};
}

}  // namespace rcsp
