#include "rcsp/graph.hpp"

#include <algorithm>
#include <string>

namespace rcsp {

Graph::Graph(std::uint32_t state_count, std::vector<Edge> edges, int arity)
    : n_(state_count) {
  arity_ = arity > 0 ? arity : (edges.empty() ? 1 : edges.front().cost.arity());
  if (arity_ < 1) throw std::invalid_argument("graph: edge cost arity must be >= 1");

  const std::size_t m = edges.size();
  src_.resize(m);
  dst_.resize(m);
  cost_.resize(m * static_cast<std::size_t>(arity_));
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& e = edges[i];
    if (e.source >= n_ || e.target >= n_)
      throw std::invalid_argument("graph: edge " + std::to_string(i) +
                                  " has endpoint out of range");
    if (e.cost.arity() != arity_)
      throw std::invalid_argument("graph: edge " + std::to_string(i) +
                                  " has arity " + std::to_string(e.cost.arity()) +
                                  ", expected " + std::to_string(arity_));
    src_[i] = e.source;
    dst_[i] = e.target;
    std::copy(e.cost.values().begin(), e.cost.values().end(),
              cost_.begin() + static_cast<std::size_t>(i) * arity_);
  }

  // Stable counting sort of edge ids by endpoint keeps insertion order
  // within each adjacency list.
  auto build_csr = [m, this](const std::vector<StateId>& key,
                             std::vector<std::uint32_t>& off, std::vector<EdgeId>& adj) {
    off.assign(n_ + 1, 0);
    for (std::size_t i = 0; i < m; ++i) ++off[key[i] + 1];
    for (std::uint32_t u = 0; u < n_; ++u) off[u + 1] += off[u];
    adj.resize(m);
    std::vector<std::uint32_t> cursor(off.begin(), off.end() - 1);
    for (std::size_t i = 0; i < m; ++i)
      adj[cursor[key[i]]++] = static_cast<EdgeId>(i);
  };
  build_csr(src_, fwd_off_, fwd_edge_);
  build_csr(dst_, bwd_off_, bwd_edge_);
}

std::vector<bool> reachable_from(const Graph& g, StateId source) {
  if (source >= g.state_count())
    throw std::invalid_argument("reachable_from: source out of range");
  std::vector<bool> seen(g.state_count(), false);
  std::vector<StateId> stack{source};
  seen[source] = true;
  while (!stack.empty()) {
    StateId u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.out_edges(u)) {
      StateId v = g.target(e);
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

RestrictedGraph restrict_to(const Graph& g, const std::vector<bool>& keep) {
  if (keep.size() != g.state_count())
    throw std::invalid_argument("restrict_to: keep mask size mismatch");
  RestrictedGraph r;
  r.new_of_old.assign(g.state_count(), -1);
  for (StateId u = 0; u < g.state_count(); ++u) {
    if (keep[u]) {
      r.new_of_old[u] = static_cast<std::int32_t>(r.old_of_new.size());
      r.old_of_new.push_back(u);
    }
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    StateId u = g.source(e), v = g.target(e);
    if (keep[u] && keep[v])
      edges.push_back({static_cast<StateId>(r.new_of_old[u]),
                       static_cast<StateId>(r.new_of_old[v]), g.cost_vector(e)});
  }
  r.graph = Graph(static_cast<std::uint32_t>(r.old_of_new.size()), std::move(edges),
                  g.arity());
  return r;
}

namespace {

// Iterative Tarjan. Frame second pass resumes at the out-edge index.
struct TarjanFrame {
  StateId u;
  std::size_t next;
};

}  // namespace

std::vector<std::uint32_t> strongly_connected_components(const Graph& g) {
  const std::uint32_t n = g.state_count();
  constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> comp(n, kUnset), index(n, kUnset), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> scc_stack;
  std::vector<TarjanFrame> frames;
  std::uint32_t next_index = 0, comp_count = 0;

  for (StateId root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    scc_stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      TarjanFrame& f = frames.back();
      auto edges = g.out_edges(f.u);
      if (f.next < edges.size()) {
        StateId v = g.target(edges[f.next++]);
        if (index[v] == kUnset) {
          index[v] = low[v] = next_index++;
          scc_stack.push_back(v);
          on_stack[v] = true;
          frames.push_back({v, 0});
        } else if (on_stack[v]) {
          low[f.u] = std::min(low[f.u], index[v]);
        }
      } else {
        StateId u = f.u;
        frames.pop_back();
        if (!frames.empty()) low[frames.back().u] = std::min(low[frames.back().u], low[u]);
        if (low[u] == index[u]) {
          StateId w;
          do {
            w = scc_stack.back();
            scc_stack.pop_back();
            on_stack[w] = false;
            comp[w] = comp_count;
          } while (w != u);
          ++comp_count;
        }
      }
    }
  }
  return comp;
}

Problem::Problem(std::shared_ptr<const Graph> graph, StateId start, StateId goal,
                 std::vector<Cost> resource_limits)
    : graph_(std::move(graph)), start_(start), goal_(goal),
      limits_(std::move(resource_limits)) {
  if (!graph_) throw std::invalid_argument("problem: null graph");
  if (graph_->arity() < 2)
    throw std::invalid_argument("problem: graph needs a primary cost plus at least one resource");
  if (start_ >= graph_->state_count() || goal_ >= graph_->state_count())
    throw std::invalid_argument("problem: start or goal out of range");
  if (static_cast<int>(limits_.size()) != graph_->resource_count())
    throw std::invalid_argument(
        "problem: expected " + std::to_string(graph_->resource_count()) +
        " resource limits, got " + std::to_string(limits_.size()));
  for (Cost r : limits_)
    if (!is_finite(r)) throw std::invalid_argument("problem: non-finite resource limit");
}

}  // namespace rcsp
