#include "rcsp/bench.hpp"

#include "rcsp/heuristic.hpp"
#include "rcsp/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "json.hpp"

namespace rcsp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_seconds(Clock::time_point t0, Clock::time_point t1) {
  auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count();
  return std::round(static_cast<double>(ns) / 1e3) / 1e6;  // keep microseconds
}

std::string format_seconds(double s) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", s);
  return buf;
}

std::string format_solutions(std::span<const CostVector> sols) {
  std::string out;
  for (std::size_t i = 0; i < sols.size(); ++i) {
    if (i) out += '|';
    out += '(';
    for (int k = 0; k < sols[i].arity(); ++k) {
      if (k) out += ';';
      out += std::to_string(sols[i][k]);
    }
    out += ')';
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    auto next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      parts.push_back(s.substr(pos));
      return parts;
    }
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

template <typename T>
T parse_number(std::string_view tok, std::size_t line_no) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    try {
      std::size_t used = 0;
      value = std::stod(std::string(tok), &used);
      if (used != tok.size()) throw std::invalid_argument("trailing junk");
    } catch (const std::exception&) {
      throw ParseError("bad number '" + std::string(tok) + "'", line_no);
    }
  } else {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError("bad number '" + std::string(tok) + "'", line_no);
  }
  return value;
}

std::vector<CostVector> parse_solutions(std::string_view field, std::size_t line_no) {
  std::vector<CostVector> out;
  if (field.empty()) return out;
  for (auto part : split(field, '|')) {
    if (part.size() < 2 || part.front() != '(' || part.back() != ')')
      throw ParseError("bad solution vector '" + std::string(part) + "'", line_no);
    detail::CostBuf values;
    for (auto tok : split(part.substr(1, part.size() - 2), ';'))
      values.push_back(parse_number<Cost>(tok, line_no));
    out.push_back(CostVector::from({values.data(), values.size()}));
  }
  return out;
}

constexpr std::string_view kRecordHeader =
    "map,instance,start,goal,delta,d,outcome,seconds,num_solutions,solutions";

RunRecord base_record(const std::string& map, std::uint32_t index,
                      const InstanceSpec& inst) {
  RunRecord rec;
  rec.map = map;
  rec.instance = index;
  rec.start = static_cast<std::uint64_t>(inst.start) + 1;
  rec.goal = static_cast<std::uint64_t>(inst.goal) + 1;
  rec.delta = inst.delta;
  rec.resource_count = inst.resource_count;
  return rec;
}

// Core pipeline on an already-loaded graph. When `limits` is engaged the
// delta interpolation step is skipped.
RunRecord run_pipeline(std::shared_ptr<const Graph> g, RunRecord rec,
                       std::optional<std::vector<Cost>> limits,
                       double timeout_seconds) {
  auto t0 = Clock::now();
  SolveOptions opt;
  opt.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                          std::chrono::duration<double>(timeout_seconds));
  try {
    if (rec.resource_count != g->resource_count())
      throw std::invalid_argument("resource count does not match the graph");
    auto start = static_cast<StateId>(rec.start - 1);
    auto goal = static_cast<StateId>(rec.goal - 1);

    Problem probe(g, start, goal,
                  limits ? *limits : std::vector<Cost>(g->resource_count(), 0));
    auto prep = build_heuristics(probe);
    if (prep.status == PrepareStatus::negative_cycle) {
      rec.outcome = Outcome::negative_cycle;
    } else if (prep.instance->goal == kNoState) {
      rec.outcome = Outcome::infeasible;
    } else {
      auto inst = std::move(*prep.instance);
      if (!limits) {
        inst.limits = generate_limits(*g, start, goal, *rec.delta);
        inst.bounds = init_upper_bounds(Problem(g, start, goal, inst.limits));
      }
      auto res = solve(inst, opt);
      rec.num_solutions = res.solutions.size();
      rec.solutions.reserve(res.solutions.size());
      for (auto& s : res.solutions) rec.solutions.push_back(s.cost);
      if (res.status == SolveStatus::timeout)
        rec.outcome = Outcome::timeout;
      else
        rec.outcome = res.solutions.empty() ? Outcome::infeasible : Outcome::solved;
    }
  } catch (const std::exception&) {
    rec.outcome = Outcome::error;
  }
  rec.seconds = elapsed_seconds(t0, Clock::now());
  return rec;
}

std::string group_delta_key(const std::optional<Delta>& d) {
  return d ? d->to_string() : std::string();
}

}  // namespace

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::solved: return "solved";
    case Outcome::timeout: return "timeout";
    case Outcome::infeasible: return "infeasible";
    case Outcome::negative_cycle: return "negative_cycle";
    case Outcome::error: return "error";
  }
  return "error";
}

std::optional<Outcome> outcome_from_string(std::string_view s) {
  for (auto o : {Outcome::solved, Outcome::timeout, Outcome::infeasible,
                 Outcome::negative_cycle, Outcome::error})
    if (s == to_string(o)) return o;
  return std::nullopt;
}

std::string derive_map_name(const std::vector<std::string>& gr_paths) {
  if (gr_paths.empty()) return "unnamed";
  std::string_view p = gr_paths.front();
  if (auto slash = p.find_last_of("/\\"); slash != std::string_view::npos)
    p.remove_prefix(slash + 1);
  if (p.size() > 3 && p.ends_with(".gr")) p.remove_suffix(3);
  return std::string(p.empty() ? "unnamed" : p);
}

Graph load_graph(const BenchConfig& cfg) {
  if (cfg.gr_paths.empty())
    throw std::invalid_argument("no attribute files given");
  std::vector<RawAttributeGraph> attrs;
  attrs.reserve(cfg.gr_paths.size());
  for (const auto& path : cfg.gr_paths) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    attrs.push_back(parse_gr(in, path));
  }
  Graph g = merge_attributes(attrs);
  if (cfg.extend_to > 0 && cfg.extend_to != g.arity())
    g = extend_costs(g, cfg.extend_to);
  return g;
}

std::vector<QueryPair> random_queries(const Graph& g, std::uint64_t seed,
                                      std::size_t count) {
  if (g.state_count() == 0) throw std::invalid_argument("empty graph");
  auto comp = strongly_connected_components(g);
  std::uint32_t comp_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<std::uint32_t> size(comp_count, 0);
  for (auto c : comp) ++size[c];
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < comp_count; ++c)
    if (size[c] > size[best]) best = c;

  std::vector<StateId> members;
  members.reserve(size[best]);
  for (StateId v = 0; v < g.state_count(); ++v)
    if (comp[v] == best) members.push_back(v);

  std::mt19937_64 rng(seed);
  std::vector<QueryPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    StateId s = members[rand_below(rng, members.size())];
    StateId t = members[rand_below(rng, members.size())];
    for (int tries = 0; s == t && members.size() > 1 && tries < 64; ++tries)
      t = members[rand_below(rng, members.size())];
    out.push_back({s, t});
  }
  return out;
}

RunRecord run_on_graph(std::shared_ptr<const Graph> g, const std::string& map_name,
                       std::uint32_t index, const InstanceSpec& inst,
                       double timeout_seconds) {
  auto rec = base_record(map_name, index, inst);
  if (inst.start >= g->state_count() || inst.goal >= g->state_count()) {
    rec.outcome = Outcome::error;
    return rec;
  }
  return run_pipeline(std::move(g), std::move(rec), std::nullopt, timeout_seconds);
}

RunRecord run_with_limits(std::shared_ptr<const Graph> g, const std::string& map_name,
                          std::uint32_t index, StateId start, StateId goal,
                          std::vector<Cost> limits, double timeout_seconds) {
  RunRecord rec;
  rec.map = map_name;
  rec.instance = index;
  rec.start = static_cast<std::uint64_t>(start) + 1;
  rec.goal = static_cast<std::uint64_t>(goal) + 1;
  rec.resource_count = static_cast<int>(limits.size());
  if (start >= g->state_count() || goal >= g->state_count()) {
    rec.outcome = Outcome::error;
    return rec;
  }
  return run_pipeline(std::move(g), std::move(rec), std::move(limits), timeout_seconds);
}

RunRecord run_instance(const BenchConfig& cfg, const InstanceSpec& inst) {
  std::shared_ptr<const Graph> g;
  try {
    g = std::make_shared<const Graph>(load_graph(cfg));
  } catch (const std::exception&) {
    auto rec = base_record(cfg.map_name.empty() ? derive_map_name(cfg.gr_paths)
                                                : cfg.map_name,
                           0, inst);
    rec.outcome = Outcome::error;
    return rec;
  }
  auto map = cfg.map_name.empty() ? derive_map_name(cfg.gr_paths) : cfg.map_name;
  return run_on_graph(std::move(g), map, 0, inst, cfg.timeout_seconds);
}

std::vector<RunRecord> run_batch(const BenchConfig& cfg) {
  if (cfg.deltas.empty()) throw std::invalid_argument("no deltas given");
  auto g = std::make_shared<const Graph>(load_graph(cfg));
  auto map = cfg.map_name.empty() ? derive_map_name(cfg.gr_paths) : cfg.map_name;

  std::vector<QueryPair> queries;
  if (!cfg.query_path.empty()) {
    std::ifstream in(cfg.query_path);
    if (!in) throw std::runtime_error("cannot open '" + cfg.query_path + "'");
    queries = load_queries(in, g->state_count());
  } else {
    queries = random_queries(*g, cfg.seed, cfg.query_count);
  }
  if (queries.empty()) throw std::invalid_argument("no queries to run");

  const std::size_t total = queries.size() * cfg.deltas.size();
  std::vector<RunRecord> records(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= total) return;
      const auto& q = queries[i / cfg.deltas.size()];
      InstanceSpec inst{q.start, q.goal, cfg.deltas[i % cfg.deltas.size()],
                        g->resource_count()};
      records[i] = run_on_graph(g, map, static_cast<std::uint32_t>(i), inst,
                                cfg.timeout_seconds);
    }
  };

  std::size_t jobs = std::clamp<std::size_t>(cfg.jobs < 1 ? 1 : cfg.jobs, 1, total);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return records;
}

void write_records_csv(std::span<const RunRecord> records, std::ostream& out) {
  out << kRecordHeader << '\n';
  for (const auto& r : records) {
    out << r.map << ',' << r.instance << ',' << r.start << ',' << r.goal << ','
        << (r.delta ? r.delta->to_string() : "") << ',' << r.resource_count << ','
        << to_string(r.outcome) << ',' << format_seconds(r.seconds) << ','
        << r.num_solutions << ',' << format_solutions(r.solutions) << '\n';
  }
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line != kRecordHeader)
    throw ParseError("missing or unexpected header", 1);

  std::vector<RunRecord> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = split(line, ',');
    if (fields.size() != 10)
      throw ParseError("expected 10 fields, found " + std::to_string(fields.size()),
                       line_no);
    RunRecord r;
    r.map = std::string(fields[0]);
    r.instance = parse_number<std::uint32_t>(fields[1], line_no);
    r.start = parse_number<std::uint64_t>(fields[2], line_no);
    r.goal = parse_number<std::uint64_t>(fields[3], line_no);
    if (!fields[4].empty()) {
      try {
        r.delta = Delta::parse(fields[4]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    r.resource_count = parse_number<int>(fields[5], line_no);
    auto outcome = outcome_from_string(fields[6]);
    if (!outcome)
      throw ParseError("unknown outcome '" + std::string(fields[6]) + "'", line_no);
    r.outcome = *outcome;
    r.seconds = parse_number<double>(fields[7], line_no);
    r.num_solutions = parse_number<std::size_t>(fields[8], line_no);
    r.solutions = parse_solutions(fields[9], line_no);
    if (r.solutions.size() != r.num_solutions)
      throw ParseError("num_solutions disagrees with the solutions field", line_no);
    out.push_back(std::move(r));
  }
  return out;
}

void write_records_json(std::span<const RunRecord> records, std::ostream& out) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json sols = nlohmann::json::array();
    for (const auto& v : r.solutions) {
      nlohmann::json vec = nlohmann::json::array();
      for (int k = 0; k < v.arity(); ++k) vec.push_back(v[k]);
      sols.push_back(std::move(vec));
    }
    arr.push_back({{"map", r.map},
                   {"instance", r.instance},
                   {"start", r.start},
                   {"goal", r.goal},
                   {"delta", r.delta ? nlohmann::json(r.delta->to_string())
                                     : nlohmann::json(nullptr)},
                   {"d", r.resource_count},
                   {"outcome", to_string(r.outcome)},
                   {"seconds", r.seconds},
                   {"num_solutions", r.num_solutions},
                   {"solutions", std::move(sols)}});
  }
  out << arr.dump(2) << '\n';
}

std::vector<GroupSummary> summarize(std::span<const RunRecord> records) {
  std::vector<GroupSummary> groups;
  std::map<std::tuple<std::string, int, std::string>, std::size_t> index;
  for (const auto& r : records) {
    auto key = std::make_tuple(r.map, r.resource_count, group_delta_key(r.delta));
    auto [it, fresh] = index.emplace(key, groups.size());
    if (fresh) {
      GroupSummary g;
      g.map = r.map;
      g.resource_count = r.resource_count;
      g.delta = r.delta;
      groups.push_back(std::move(g));
    }
    auto& g = groups[it->second];
    ++g.total;
    switch (r.outcome) {
      case Outcome::solved: {
        ++g.solved;
        if (g.solved == 1) {
          g.min_seconds = g.max_seconds = r.seconds;
          g.mean_seconds = r.seconds;
        } else {
          g.min_seconds = std::min(g.min_seconds, r.seconds);
          g.max_seconds = std::max(g.max_seconds, r.seconds);
          g.mean_seconds += (r.seconds - g.mean_seconds) / static_cast<double>(g.solved);
        }
        break;
      }
      case Outcome::timeout: ++g.timeouts; break;
      case Outcome::infeasible: ++g.infeasible; break;
      case Outcome::negative_cycle: ++g.negative_cycle; break;
      case Outcome::error: ++g.errors; break;
    }
  }
  return groups;
}

void write_summary_csv(std::span<const GroupSummary> groups, std::ostream& out) {
  out << "map,d,delta,total,solved,timeouts,infeasible,negative_cycle,errors,"
         "min_seconds,mean_seconds,max_seconds\n";
  for (const auto& g : groups) {
    out << g.map << ',' << g.resource_count << ',' << group_delta_key(g.delta) << ','
        << g.total << ',' << g.solved << ',' << g.timeouts << ',' << g.infeasible
        << ',' << g.negative_cycle << ',' << g.errors << ',';
    if (g.solved > 0) {
      out << format_seconds(g.min_seconds) << ',' << format_seconds(g.mean_seconds)
          << ',' << format_seconds(g.max_seconds);
    } else {
      out << ",,";
    }
    out << '\n';
  }
}

void write_cactus_csv(std::span<const RunRecord> records, std::ostream& out) {
  std::map<std::tuple<std::string, int, std::string>, std::vector<double>> groups;
  for (const auto& r : records)
    if (r.outcome == Outcome::solved)
      groups[{r.map, r.resource_count, group_delta_key(r.delta)}].push_back(r.seconds);

  out << "map,d,delta,rank,seconds\n";
  for (auto& [key, times] : groups) {
    std::sort(times.begin(), times.end());
    for (std::size_t i = 0; i < times.size(); ++i)
      out << std::get<0>(key) << ',' << std::get<1>(key) << ',' << std::get<2>(key)
          << ',' << i + 1 << ',' << format_seconds(times[i]) << '\n';
  }
}

}  // namespace rcsp
