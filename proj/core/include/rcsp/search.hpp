#pragma once

#include "rcsp/cost_vector.hpp"
#include "rcsp/graph.hpp"
#include "rcsp/heuristic.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace rcsp {

// Bucket priority queue keyed by f1 offset from the minimum possible f1.
// Ties pop newest-first (LIFO). Consistent lower bounds guarantee keys never
// fall behind the cursor; a push below it is rejected as a logic error.
class Frontier {
 public:
  explicit Frontier(Cost base) : base_(base) {}

  void push(Cost f1, std::uint32_t node);

  struct Item {
    Cost f1;
    std::uint32_t node;
  };
  std::optional<Item> pop();

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

 private:
  Cost base_;
  std::size_t cursor_ = 0;
  std::size_t size_ = 0;
  std::vector<std::vector<std::uint32_t>> buckets_;
};

// Lexicographically sorted list of mutually non-dominated truncated vectors,
// stored flat with a fixed stride.
class ClosedList {
 public:
  explicit ClosedList(int width = 1) : width_(width) {}

  std::size_t size() const { return flat_.size() / width_; }
  std::span<const Cost> at(std::size_t i) const {
    return {flat_.data() + i * width_, static_cast<std::size_t>(width_)};
  }

  // Scans forward; the sort order lets it stop at the first entry that is
  // not lexicographically <= v.
  bool is_dominated(std::span<const Cost> v) const;

  // Inserts v, walking backward from the tail to drop entries v weakly
  // dominates. Call only when is_dominated(v) returned false.
  void consolidate(std::span<const Cost> v);

 private:
  int width_;
  std::vector<Cost> flat_;
};

// Per-state closed lists plus the truncated vector of each state's most
// recent expansion (initially +inf, which dominates nothing).
class DominanceStore {
 public:
  DominanceStore(std::uint32_t state_count, int width)
      : width_(width), closed_(state_count, ClosedList(width)),
        last_(static_cast<std::size_t>(state_count) * width, kInfCost) {}

  bool quick_dominated(StateId u, std::span<const Cost> tr) const {
    return weakly_dominates(last(u), tr);
  }
  bool is_dominated(StateId u, std::span<const Cost> tr) const {
    return closed_[u].is_dominated(tr);
  }
  void consolidate(StateId u, std::span<const Cost> tr) { closed_[u].consolidate(tr); }
  void set_last(StateId u, std::span<const Cost> tr);

  std::span<const Cost> last(StateId u) const {
    return {last_.data() + static_cast<std::size_t>(u) * width_,
            static_cast<std::size_t>(width_)};
  }
  const ClosedList& closed(StateId u) const { return closed_[u]; }

 private:
  int width_;
  std::vector<ClosedList> closed_;
  std::vector<Cost> last_;
};

// Search node snapshot passed to observers. The state id refers to the
// restricted graph of the instance being solved.
struct NodeInfo {
  std::uint32_t id;
  StateId state;
  CostVector g;
  CostVector f;
};

// Hooks into the search loop, for tracing and conformance tests. All
// callbacks default to no-ops; the solver skips snapshot construction
// entirely when no observer is installed.
class SearchObserver {
 public:
  virtual ~SearchObserver() = default;
  virtual void on_enqueue(const NodeInfo&) {}
  virtual void on_extract(const NodeInfo&) {}
  virtual void on_skip_last_dominated(const NodeInfo&) {}
  virtual void on_skip_closed_dominated(const NodeInfo&) {}
  virtual void on_closed_updated(StateId, const std::vector<TruncatedVector>&) {}
  virtual void on_goal(const NodeInfo&, const std::vector<std::uint32_t>& /*solution_ids*/) {}
  virtual void on_pruned_bound(const NodeInfo&) {}
  virtual void on_pruned_last_dominated(const NodeInfo&) {}
  virtual void on_terminated(Cost /*extracted_f1*/, Cost /*bound_f1*/) {}
};

struct SolveOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
  std::uint32_t deadline_check_interval = 4096;
  SearchObserver* observer = nullptr;
};

struct SearchStats {
  std::uint64_t extracted = 0;
  std::uint64_t enqueued = 0;
  std::uint64_t generated = 0;
  std::uint64_t pruned_bound = 0;
  std::uint64_t pruned_last_dominated = 0;
  std::uint64_t skipped_last_dominated = 0;
  std::uint64_t skipped_closed_dominated = 0;
  std::uint64_t solutions_recorded = 0;
  std::uint64_t monotone_violations = 0;  // must stay 0; counted, not assumed
};

struct Solution {
  CostVector cost;
  std::vector<StateId> path;  // original state ids, start..goal
};

enum class SolveStatus { completed, timeout };

struct SolveResult {
  SolveStatus status = SolveStatus::completed;
  std::vector<Solution> solutions;
  SearchStats stats;
};

// Best-first search over the prepared instance. Returns every feasible
// non-dominated solution of minimal primary cost; solutions are complete
// exactly when status == completed.
SolveResult solve(const PreparedInstance& inst, const SolveOptions& opt = {});

// Convenience wrapper: prepare + solve. Returns nullopt when preparation
// reports a negative cycle.
std::optional<SolveResult> prepare_and_solve(const Problem& p,
                                             const SolveOptions& opt = {});

}  // namespace rcsp
