// Command line front end over the library: solve single instances, run
// benchmark batches, generate query files, and cross-check the solver
// against the exhaustive oracle.
//
// Exit codes: 0 when every requested run completed (whatever its outcome),
// 1 on configuration or parse failures. `verify` additionally exits 1 when
// any instance disagrees with the oracle.

#include "rcsp/bench.hpp"
#include "rcsp/oracle.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace rcsp;

// Routes output to --out when given, stdout otherwise.
class OutputTarget {
 public:
  explicit OutputTarget(const std::string& path) {
    if (path.empty()) return;
    file_.open(path);
    if (!file_) throw std::runtime_error("cannot open output file: " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit_records(std::span<const RunRecord> records, const std::string& format,
                  const std::string& path) {
  OutputTarget target(path);
  if (format == "json") {
    write_records_json(records, target.stream());
  } else {
    write_records_csv(records, target.stream());
  }
}

std::vector<Delta> parse_deltas(const std::vector<std::string>& texts) {
  std::vector<Delta> deltas;
  deltas.reserve(texts.size());
  for (const auto& t : texts) deltas.push_back(Delta::parse(t));
  return deltas;
}

struct SolveArgs {
  BenchConfig cfg;
  std::uint64_t start = 0;  // 1-based, as in query files
  std::uint64_t goal = 0;
  std::vector<Cost> limits;
  std::string delta_text;
  std::string out_path;
  std::string format = "csv";
  bool show_paths = false;
};

void require_resource_dimensions(const Graph& g) {
  if (g.arity() < 2)
    throw std::runtime_error(
        "need at least two attribute files: the primary cost plus one per "
        "resource dimension");
}

int run_solve(const SolveArgs& a) {
  auto g = std::make_shared<const Graph>(load_graph(a.cfg));
  require_resource_dimensions(*g);
  const std::string map =
      a.cfg.map_name.empty() ? derive_map_name(a.cfg.gr_paths) : a.cfg.map_name;
  if (a.start < 1 || a.start > g->state_count() || a.goal < 1 ||
      a.goal > g->state_count()) {
    throw std::runtime_error("start/goal out of range: graph has " +
                             std::to_string(g->state_count()) + " states");
  }
  const auto s = static_cast<StateId>(a.start - 1);
  const auto t = static_cast<StateId>(a.goal - 1);
  const int d = g->arity() - 1;

  RunRecord rec;
  if (!a.delta_text.empty()) {
    const InstanceSpec spec{s, t, Delta::parse(a.delta_text), d};
    rec = run_on_graph(g, map, 0, spec, a.cfg.timeout_seconds);
  } else {
    if (a.limits.empty())
      throw std::runtime_error("need --limits or --delta");
    if (static_cast<int>(a.limits.size()) != d) {
      throw std::runtime_error("graph has " + std::to_string(d) +
                               " resource dimensions, --limits gave " +
                               std::to_string(a.limits.size()));
    }
    rec = run_with_limits(g, map, 0, s, t, a.limits, a.cfg.timeout_seconds);
  }
  emit_records({&rec, 1}, a.format, a.out_path);

  std::cerr << rec.start << " -> " << rec.goal << ": " << to_string(rec.outcome);
  if (rec.outcome == Outcome::solved)
    std::cerr << ", " << rec.num_solutions << " solution(s)";
  std::cerr << " in " << rec.seconds << " s\n";

  if (a.show_paths && rec.outcome == Outcome::solved) {
    // The record keeps cost vectors only; rerun the (already solved)
    // instance through the library to recover witness paths.
    std::vector<Cost> limits = a.limits;
    if (!a.delta_text.empty())
      limits = generate_limits(*g, s, t, Delta::parse(a.delta_text));
    const auto solved = prepare_and_solve(Problem(g, s, t, std::move(limits)));
    for (const auto& sol : solved->solutions) {
      std::cerr << sol.cost << ":";
      for (StateId u : sol.path) std::cerr << ' ' << (u + 1);
      std::cerr << '\n';
    }
  }
  return 0;
}

struct BenchArgs {
  BenchConfig cfg;
  std::vector<std::string> delta_texts;
  std::string out_path;
  std::string format = "csv";
  std::string summary_path;
  std::string cactus_path;
};

int run_bench(BenchArgs a) {
  a.cfg.deltas = parse_deltas(a.delta_texts);
  if (a.cfg.gr_paths.size() < 2 && a.cfg.extend_to == 0)
    throw std::runtime_error(
        "need at least two attribute files: the primary cost plus one per "
        "resource dimension");
  if (a.cfg.query_path.empty() && a.cfg.query_count == 0)
    throw std::runtime_error("need --queries or a --count of random queries");

  const auto records = run_batch(a.cfg);
  emit_records(records, a.format, a.out_path);

  const auto groups = summarize(records);
  if (!a.summary_path.empty()) {
    OutputTarget target(a.summary_path);
    write_summary_csv(groups, target.stream());
  }
  if (!a.cactus_path.empty()) {
    OutputTarget target(a.cactus_path);
    write_cactus_csv(records, target.stream());
  }

  for (const auto& grp : groups) {
    std::cerr << grp.map << " d=" << grp.resource_count << " delta="
              << (grp.delta ? grp.delta->to_string() : "-") << ": "
              << grp.solved << "/" << grp.total << " solved";
    if (grp.timeouts) std::cerr << ", " << grp.timeouts << " timeouts";
    if (grp.infeasible) std::cerr << ", " << grp.infeasible << " infeasible";
    if (grp.negative_cycle)
      std::cerr << ", " << grp.negative_cycle << " negative cycles";
    if (grp.errors) std::cerr << ", " << grp.errors << " errors";
    if (grp.solved) std::cerr << ", mean " << grp.mean_seconds << " s";
    std::cerr << '\n';
  }
  return 0;
}

struct GenArgs {
  BenchConfig cfg;
  std::string out_path;
};

int run_gen(const GenArgs& a) {
  const Graph g = load_graph(a.cfg);
  const auto queries = random_queries(g, a.cfg.seed, a.cfg.query_count);
  OutputTarget target(a.out_path);
  write_queries(queries, target.stream());
  return 0;
}

struct VerifyArgs {
  std::uint64_t seed = 1;
  std::uint64_t cases = 1000;
};

int run_verify(const VerifyArgs& a) {
  std::mt19937_64 rng(a.seed);
  std::uint64_t mismatches = 0;
  for (std::uint64_t i = 0; i < a.cases; ++i) {
    const auto inst = make_random_instance(rng);
    const auto got = solve(inst.prepared);
    const auto want = enumerate_solutions(inst.problem);
    const auto report = verify(inst.problem, got, want);
    if (report.pass) continue;
    ++mismatches;
    std::cerr << "mismatch on case " << i << ": " << report.missing.size()
              << " missing, " << report.extra.size() << " extra, "
              << report.path_errors.size() << " bad paths\n";
  }
  std::cout << "verified " << a.cases << " random instances, " << mismatches
            << " mismatches\n";
  return mismatches ? 1 : 0;
}

void add_graph_flags(CLI::App* cmd, BenchConfig& cfg) {
  cmd->add_option("--gr", cfg.gr_paths,
                  "attribute file, repeatable; the k-th file is cost dimension k")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--extend-to", cfg.extend_to,
                  "derive synthetic dimensions from a 2-attribute map (3 or 4)")
      ->check(CLI::IsMember({0, 3, 4}));
  cmd->add_option("--map", cfg.map_name,
                  "map name in records (default: derived from the first file)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact point-to-point resource constrained shortest paths with signed "
      "edge costs"};
  app.set_version_flag("--version", "rcsp 0.1.0");
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand(
      "solve", "solve one instance and print its run record");
  add_graph_flags(solve_cmd, solve_args.cfg);
  solve_cmd->add_option("--start", solve_args.start, "start state, 1-based")
      ->required();
  solve_cmd->add_option("--goal", solve_args.goal, "goal state, 1-based")
      ->required();
  auto* limits_opt =
      solve_cmd
          ->add_option("--limits", solve_args.limits,
                       "resource limits, comma separated (e.g. 3,3)")
          ->delimiter(',');
  solve_cmd
      ->add_option("--delta", solve_args.delta_text,
                   "limit tightness in (0,1]; interpolates limits instead of "
                   "--limits")
      ->excludes(limits_opt);
  solve_cmd->add_option("--timeout", solve_args.cfg.timeout_seconds,
                        "wall-clock budget in seconds");
  solve_cmd->add_option("--out", solve_args.out_path,
                        "record output path (default: stdout)");
  solve_cmd->add_option("--format", solve_args.format, "record format")
      ->check(CLI::IsMember({"csv", "json"}));
  solve_cmd->add_flag("--show-paths", solve_args.show_paths,
                      "print witness paths to stderr");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand(
      "bench", "run a batch of queries over a grid of limit tightnesses");
  add_graph_flags(bench_cmd, bench_args.cfg);
  auto* queries_opt =
      bench_cmd
          ->add_option("--queries", bench_args.cfg.query_path,
                       "query file, one 1-based 'start goal' pair per line")
          ->check(CLI::ExistingFile);
  bench_cmd
      ->add_option("--count", bench_args.cfg.query_count,
                   "number of random queries instead of --queries")
      ->excludes(queries_opt);
  bench_cmd->add_option("--seed", bench_args.cfg.seed,
                        "seed for random queries");
  bench_cmd
      ->add_option("--delta", bench_args.delta_texts,
                   "limit tightness list, comma separated (e.g. 0.1,0.5,0.9)")
      ->required()
      ->delimiter(',');
  bench_cmd->add_option("--timeout", bench_args.cfg.timeout_seconds,
                        "per-instance budget in seconds");
  bench_cmd->add_option("--jobs", bench_args.cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", bench_args.out_path,
                        "record output path (default: stdout)");
  bench_cmd->add_option("--format", bench_args.format, "record format")
      ->check(CLI::IsMember({"csv", "json"}));
  bench_cmd->add_option("--summary", bench_args.summary_path,
                        "also write per-group summary CSV here");
  bench_cmd->add_option("--cactus", bench_args.cactus_path,
                        "also write sorted solved runtimes CSV here");

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand(
      "gen", "draw random queries from the largest strongly connected "
             "component and write a query file");
  add_graph_flags(gen_cmd, gen_args.cfg);
  gen_cmd->add_option("--seed", gen_args.cfg.seed, "query seed");
  gen_cmd->add_option("--count", gen_args.cfg.query_count, "number of queries")
      ->required();
  gen_cmd->add_option("--out", gen_args.out_path,
                      "query file path (default: stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand(
      "verify", "cross-check the solver against the exhaustive oracle on "
                "random small instances");
  verify_cmd->add_option("--cases", verify_args.cases, "number of instances");
  verify_cmd->add_option("--seed", verify_args.seed, "instance seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help/version is a success, anything else 1
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (bench_cmd->parsed()) return run_bench(std::move(bench_args));
    if (gen_cmd->parsed()) return run_gen(gen_args);
    return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
