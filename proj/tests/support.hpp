#pragma once

#include "rcsp/cost_vector.hpp"
#include "rcsp/graph.hpp"

#include <deque>
#include <memory>
#include <vector>

namespace rcsp::testing {

// Small three-attribute instance with a negative cycle (u4,u5,u6) that is
// unreachable from the start. Edge order is significant: several tests pin
// down the exact generation order of successors.
struct GoldenMap {
  static constexpr StateId us = 0, u1 = 1, u2 = 2, u3 = 3;
  static constexpr StateId u4 = 4, u5 = 5, u6 = 6, ug = 7;

  static std::vector<Edge> edges() {
    return {
        {us, u1, CostVector{1, 1, 1}},   {us, u2, CostVector{0, 1, -1}},
        {us, u3, CostVector{1, 1, 1}},   {u1, u3, CostVector{1, 1, 1}},
        {u1, ug, CostVector{-2, 0, 3}},  {u2, ug, CostVector{2, 2, 1}},
        {u2, u3, CostVector{1, 1, 1}},   {u3, ug, CostVector{1, 1, 1}},
        {u4, u5, CostVector{1, 1, 1}},   {u5, u6, CostVector{-3, 1, -3}},
        {u6, u4, CostVector{1, 1, 1}},   {u4, ug, CostVector{1, 1, 1}},
        {u4, u2, CostVector{1, 1, 1}},
    };
  }

  static Graph graph() { return Graph(8, edges()); }

  // Same map plus u3 -> u4, which puts the negative cycle on a
  // start-to-goal walk.
  static Graph with_cycle_bridge() {
    auto e = edges();
    e.push_back({u3, u4, CostVector{1, 1, 1}});
    return Graph(8, std::move(e));
  }
};

inline Problem make_problem(Graph g, StateId start, StateId goal,
                            std::vector<Cost> limits) {
  return Problem(std::make_shared<const Graph>(std::move(g)), start, goal,
                 std::move(limits));
}

// Reference one-to-all backward optimal values in one dimension, written
// the textbook way: synchronous rounds, then unbounded marking by closure
// over predecessors of still-relaxable states. Independent of the
// queue-based implementation under test.
inline std::vector<Cost> bellman_ford_backward(const Graph& g, StateId origin,
                                               int dim) {
  const auto n = g.state_count();
  std::vector<Cost> dist(n, kInfCost);
  dist[origin] = 0;
  for (std::uint32_t round = 1; round < n; ++round) {
    bool changed = false;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      Cost cand = saturating_add(g.cost(e, dim), dist[g.target(e)]);
      if (cand < dist[g.source(e)]) {
        dist[g.source(e)] = cand;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::deque<StateId> affected;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (saturating_add(g.cost(e, dim), dist[g.target(e)]) < dist[g.source(e)])
      affected.push_back(g.source(e));
  }
  while (!affected.empty()) {
    StateId v = affected.front();
    affected.pop_front();
    if (dist[v] == kNegInfCost) continue;
    dist[v] = kNegInfCost;
    for (EdgeId e : g.in_edges(v)) affected.push_back(g.source(e));
  }
  return dist;
}

}  // namespace rcsp::testing
