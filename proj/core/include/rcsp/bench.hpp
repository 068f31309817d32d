#pragma once

#include "rcsp/dimacs.hpp"
#include "rcsp/graph.hpp"
#include "rcsp/search.hpp"

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rcsp {

enum class Outcome { solved, timeout, infeasible, negative_cycle, error };

std::string_view to_string(Outcome o);
std::optional<Outcome> outcome_from_string(std::string_view s);

// One benchmark run. start/goal are external 1-based ids; delta is absent
// when explicit limits were supplied; seconds has microsecond resolution so
// records survive a CSV round trip unchanged.
struct RunRecord {
  std::string map;
  std::uint32_t instance = 0;
  std::uint64_t start = 0;
  std::uint64_t goal = 0;
  std::optional<Delta> delta;
  int resource_count = 0;
  Outcome outcome = Outcome::error;
  double seconds = 0.0;
  std::size_t num_solutions = 0;
  std::vector<CostVector> solutions;

  bool operator==(const RunRecord&) const = default;
};

struct BenchConfig {
  std::vector<std::string> gr_paths;   // one file per attribute, order = dimension
  int extend_to = 0;                   // 0 keeps the merged arity
  std::string map_name;                // empty: derived from the first path
  std::vector<Delta> deltas;
  double timeout_seconds = 3600.0;
  std::string query_path;              // when empty, draw random queries
  std::uint64_t seed = 0;
  std::size_t query_count = 0;
  int jobs = 1;
};

std::string derive_map_name(const std::vector<std::string>& gr_paths);

// Parse + merge + extend per the config. Throws on unreadable or malformed
// inputs (a configuration failure, unlike per-instance errors).
Graph load_graph(const BenchConfig& cfg);

// Uniform start/goal pairs from the largest strongly connected component.
std::vector<QueryPair> random_queries(const Graph& g, std::uint64_t seed,
                                      std::size_t count);

// Full pipeline for one instance: parse, merge, extend, lower bounds,
// limits from delta, search. I/O and parse problems become outcome=error;
// wall time covers everything after parsing.
RunRecord run_instance(const BenchConfig& cfg, const InstanceSpec& inst);

// Shared-graph variant used by the batch runner and the CLI.
RunRecord run_on_graph(std::shared_ptr<const Graph> g, const std::string& map_name,
                       std::uint32_t index, const InstanceSpec& inst,
                       double timeout_seconds);

// Explicit limits instead of delta interpolation.
RunRecord run_with_limits(std::shared_ptr<const Graph> g, const std::string& map_name,
                          std::uint32_t index, StateId start, StateId goal,
                          std::vector<Cost> limits, double timeout_seconds);

// Parses once, runs every query at every delta. Record order is by
// (query, delta) regardless of the number of worker threads.
std::vector<RunRecord> run_batch(const BenchConfig& cfg);

void write_records_csv(std::span<const RunRecord> records, std::ostream& out);
std::vector<RunRecord> read_records_csv(std::istream& in);
void write_records_json(std::span<const RunRecord> records, std::ostream& out);

struct GroupSummary {
  std::string map;
  int resource_count = 0;
  std::optional<Delta> delta;
  std::size_t total = 0;
  std::size_t solved = 0;
  std::size_t timeouts = 0;
  std::size_t infeasible = 0;
  std::size_t negative_cycle = 0;
  std::size_t errors = 0;
  double min_seconds = 0.0;   // over solved runs
  double mean_seconds = 0.0;
  double max_seconds = 0.0;
};

// Groups by (map, d, delta) in order of first appearance.
std::vector<GroupSummary> summarize(std::span<const RunRecord> records);
void write_summary_csv(std::span<const GroupSummary> groups, std::ostream& out);

// Sorted solved runtimes per group, one rank per row (cactus plot input).
void write_cactus_csv(std::span<const RunRecord> records, std::ostream& out);

}  // namespace rcsp
