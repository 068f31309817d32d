#pragma once

#include "rcsp/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rcsp {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(msg + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class MergeError : public std::runtime_error {
 public:
  MergeError(const std::string& msg, std::size_t arc_index)
      : std::runtime_error(msg + " (arc index " + std::to_string(arc_index) + ")"),
        arc_index_(arc_index) {}
  std::size_t arc_index() const { return arc_index_; }

 private:
  std::size_t arc_index_;
};

class GenerationError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One attribute file: a weighted arc list over 1-based state ids, stored
// 0-based in memory.
struct RawArc {
  StateId source;
  StateId target;
  Cost weight;
};

struct RawAttributeGraph {
  std::uint32_t state_count = 0;
  std::vector<RawArc> arcs;
  std::string name;
};

// Grammar: 'c ...' comments, one 'p sp <states> <arcs>' line, then
// 'a <from> <to> <weight>' lines. Anything else is a ParseError with the
// offending line number.
RawAttributeGraph parse_gr(std::istream& in, std::string name = "");
void write_gr(const RawAttributeGraph& g, std::ostream& out);

// Zips per-attribute arc lists into one graph; every file must list the
// same arcs in the same order.
Graph merge_attributes(std::span<const RawAttributeGraph> attrs);

// Derives extra cost dimensions for a 2-attribute graph: the third is the
// half-sum of endpoint out-degrees rounded half up, the fourth is 1.
// target_arity equal to the current arity returns the graph unchanged.
Graph extend_costs(const Graph& g, int target_arity);

// Interpolation parameter as an exact decimal fraction.
struct Delta {
  std::int64_t num = 1;
  std::int64_t den = 1;

  static Delta parse(std::string_view text);  // e.g. "0.3"; throws std::invalid_argument
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string to_string() const;

  friend bool operator==(Delta a, Delta b) { return a.num * b.den == b.num * a.den; }
};

struct UnconstrainedOptimum {
  CostVector cost;  // full cost vector of a primary-optimal path
  std::vector<StateId> path;
};

// Primary-optimal start-goal path and its consumption in every dimension.
// Throws GenerationError when the goal is unreachable or the primary cost
// is unbounded.
UnconstrainedOptimum unconstrained_optimum(const Graph& g, StateId start, StateId goal);

// R_k = lower_bound_k + floor(delta * (consumption_k - lower_bound_k)) for
// each resource dimension, with exact rational arithmetic. delta must lie
// in (0, 1].
std::vector<Cost> generate_limits(const Graph& g, StateId start, StateId goal,
                                  Delta delta);

struct InstanceSpec {
  StateId start;
  StateId goal;
  Delta delta;
  int resource_count;
};

struct QueryPair {
  StateId start;
  StateId goal;
};

// Query files: one "start goal" pair per line, 1-based ids.
std::vector<QueryPair> load_queries(std::istream& in, std::uint32_t state_count);
void write_queries(std::span<const QueryPair> queries, std::ostream& out);

}  // namespace rcsp
