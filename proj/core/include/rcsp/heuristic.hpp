#pragma once

#include "rcsp/cost_vector.hpp"
#include "rcsp/graph.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace rcsp {

enum class SearchDirection { forward, backward };

// One-to-all optimal values in a single cost dimension.
//   forward:  dist[u] = optimal cost origin -> u
//   backward: dist[u] = optimal cost u -> origin
// dist is kInfCost when no path exists and kNegInfCost when walks of
// unboundedly low cost exist (fed by a negative cycle).
struct OneToAllResult {
  std::vector<Cost> dist;
  std::vector<EdgeId> parent_edge;  // last improving edge, kNoEdge at origin/unreached
  bool has_unbounded = false;
};

OneToAllResult one_to_all_optimal(const Graph& g, StateId origin, int dim,
                                  SearchDirection dir);

inline OneToAllResult backward_optimal_costs(const Graph& g, StateId goal, int dim) {
  return one_to_all_optimal(g, goal, dim, SearchDirection::backward);
}

// Follows parent edges of a forward run from `to` back to the origin.
// Returns the state sequence origin..to; empty if `to` was not reached.
std::vector<StateId> extract_forward_path(const Graph& g, const OneToAllResult& r,
                                          StateId origin, StateId to);

// Per-state lower bounds, one value per cost dimension.
class HeuristicTable {
 public:
  HeuristicTable() = default;
  HeuristicTable(std::uint32_t state_count, int arity)
      : arity_(arity), values_(static_cast<std::size_t>(state_count) * arity, kInfCost) {}

  int arity() const { return arity_; }
  std::uint32_t state_count() const {
    return arity_ ? static_cast<std::uint32_t>(values_.size() / arity_) : 0;
  }
  Cost value(StateId u, int dim) const {
    return values_[static_cast<std::size_t>(u) * arity_ + dim];
  }
  std::span<const Cost> at(StateId u) const {
    return {values_.data() + static_cast<std::size_t>(u) * arity_,
            static_cast<std::size_t>(arity_)};
  }
  void set(StateId u, int dim, Cost c) {
    values_[static_cast<std::size_t>(u) * arity_ + dim] = c;
  }

 private:
  int arity_ = 0;
  std::vector<Cost> values_;
};

// h_k(u) <= cost_k(u,v) + h_k(v) over all edges and dimensions, h(goal) = 0.
// goal may be kNoState (then only the edge inequalities are checked).
bool heuristic_is_consistent(const Graph& g, const HeuristicTable& h, StateId goal);

// Search upper bounds: primary starts at +inf and shrinks as solutions are
// found; resources are the fixed per-dimension limits.
struct UpperBounds {
  Cost primary = kInfCost;
  std::vector<Cost> resources;
};

UpperBounds init_upper_bounds(const Problem& p);

// Output of the preparation phase: the graph restricted to states reachable
// from the start, the id remapping, and consistent per-state lower bounds.
struct PreparedInstance {
  std::shared_ptr<const Graph> graph;    // restricted
  std::vector<StateId> old_of_new;
  std::vector<std::int32_t> new_of_old;
  StateId start = kNoState;              // restricted id
  StateId goal = kNoState;               // restricted id, kNoState if unreachable
  std::vector<Cost> limits;
  HeuristicTable heuristics;
  UpperBounds bounds;
};

enum class PrepareStatus { ok, negative_cycle };

struct PrepareResult {
  PrepareStatus status = PrepareStatus::ok;
  std::optional<PreparedInstance> instance;  // engaged iff status == ok
};

// Restricts the problem to start-reachable states and computes backward
// optimal values per dimension. Reports negative_cycle when any retained
// state has an unbounded value, i.e. a negative cycle lies on some
// start-to-goal walk.
PrepareResult build_heuristics(const Problem& p);

}  // namespace rcsp
