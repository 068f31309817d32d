#pragma once

#include "rcsp/cost_vector.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

namespace rcsp {

using StateId = std::uint32_t;
using EdgeId = std::uint32_t;
inline constexpr StateId kNoState = static_cast<StateId>(-1);
inline constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

struct Edge {
  StateId source;
  StateId target;
  CostVector cost;
};

// Immutable directed multigraph over dense state ids 0..n-1 with a uniform
// cost-vector arity on every edge. Adjacency preserves edge insertion order,
// which in turn fixes successor generation order in the search.
class Graph {
 public:
  Graph() = default;  // empty graph

  // Throws std::invalid_argument on out-of-range endpoints or ragged arity.
  // arity > 0 forces the arity (required for edgeless graphs); 0 deduces it
  // from the first edge.
  Graph(std::uint32_t state_count, std::vector<Edge> edges, int arity = 0);

  std::uint32_t state_count() const { return n_; }
  std::size_t edge_count() const { return src_.size(); }
  int arity() const { return arity_; }
  int resource_count() const { return arity_ - 1; }

  StateId source(EdgeId e) const { return src_[e]; }
  StateId target(EdgeId e) const { return dst_[e]; }
  std::span<const Cost> cost(EdgeId e) const {
    return {cost_.data() + static_cast<std::size_t>(e) * arity_,
            static_cast<std::size_t>(arity_)};
  }
  Cost cost(EdgeId e, int dim) const {
    return cost_[static_cast<std::size_t>(e) * arity_ + dim];
  }
  CostVector cost_vector(EdgeId e) const { return CostVector::from(cost(e)); }

  std::span<const EdgeId> out_edges(StateId u) const {
    return {fwd_edge_.data() + fwd_off_[u], fwd_edge_.data() + fwd_off_[u + 1]};
  }
  std::span<const EdgeId> in_edges(StateId u) const {
    return {bwd_edge_.data() + bwd_off_[u], bwd_edge_.data() + bwd_off_[u + 1]};
  }

 private:
  std::uint32_t n_ = 0;
  int arity_ = 1;
  std::vector<StateId> src_, dst_;
  std::vector<Cost> cost_;  // flat, stride arity_
  std::vector<std::uint32_t> fwd_off_, bwd_off_;
  std::vector<EdgeId> fwd_edge_, bwd_edge_;
};

// States reachable from source along forward edges (bit per state).
std::vector<bool> reachable_from(const Graph& g, StateId source);

struct RestrictedGraph {
  Graph graph;
  std::vector<StateId> old_of_new;      // new id -> original id
  std::vector<std::int32_t> new_of_old; // original id -> new id, -1 if dropped
};

// Induced subgraph on the kept states; kept states are renumbered densely in
// ascending original order and surviving edges keep their relative order.
RestrictedGraph restrict_to(const Graph& g, const std::vector<bool>& keep);

// Component id per state; ids are assigned so that they count 0..k-1.
std::vector<std::uint32_t> strongly_connected_components(const Graph& g);

// A point-to-point query with per-resource upper limits (one per resource
// dimension, i.e. arity-1 entries).
class Problem {
 public:
  Problem(std::shared_ptr<const Graph> graph, StateId start, StateId goal,
          std::vector<Cost> resource_limits);
  Problem(Graph&& graph, StateId start, StateId goal,
          std::vector<Cost> resource_limits)
      : Problem(std::make_shared<const Graph>(std::move(graph)), start, goal,
                std::move(resource_limits)) {}

  const Graph& graph() const { return *graph_; }
  std::shared_ptr<const Graph> graph_ptr() const { return graph_; }
  StateId start() const { return start_; }
  StateId goal() const { return goal_; }
  std::span<const Cost> resource_limits() const { return limits_; }
  int resource_count() const { return static_cast<int>(limits_.size()); }

 private:
  std::shared_ptr<const Graph> graph_;
  StateId start_;
  StateId goal_;
  std::vector<Cost> limits_;
};

}  // namespace rcsp
