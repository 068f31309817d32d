#include "rcsp/dimacs.hpp"

#include "rcsp/heuristic.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace rcsp {

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

RawAttributeGraph parse_gr(std::istream& in, std::string name) {
  RawAttributeGraph g;
  g.name = std::move(name);
  bool have_problem = false;
  std::size_t declared_arcs = 0;
  std::size_t line_no = 0;
  std::string line;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_problem) throw ParseError("duplicate problem line", line_no);
      std::int64_t n = 0, m = 0;
      if (tok.size() != 4 || tok[1] != "sp" || !parse_int(tok[2], n) ||
          !parse_int(tok[3], m) || n < 0 || m < 0)
        throw ParseError("malformed problem line, expected 'p sp <states> <arcs>'",
                         line_no);
      g.state_count = static_cast<std::uint32_t>(n);
      declared_arcs = static_cast<std::size_t>(m);
      g.arcs.reserve(declared_arcs);
      have_problem = true;
      continue;
    }
    if (tok[0] == "a") {
      if (!have_problem) throw ParseError("arc before problem line", line_no);
      std::int64_t u = 0, v = 0, w = 0;
      if (tok.size() != 4 || !parse_int(tok[1], u) || !parse_int(tok[2], v) ||
          !parse_int(tok[3], w))
        throw ParseError("malformed arc line, expected 'a <from> <to> <weight>'",
                         line_no);
      if (u < 1 || u > g.state_count || v < 1 || v > g.state_count)
        throw ParseError("arc endpoint out of range", line_no);
      g.arcs.push_back({static_cast<StateId>(u - 1), static_cast<StateId>(v - 1),
                        static_cast<Cost>(w)});
      continue;
    }
    throw ParseError("unknown line type '" + std::string(tok[0]) + "'", line_no);
  }

  if (!have_problem) throw ParseError("missing problem line", line_no);
  if (g.arcs.size() != declared_arcs)
    throw ParseError("declared " + std::to_string(declared_arcs) + " arcs but found " +
                         std::to_string(g.arcs.size()),
                     line_no);
  return g;
}

void write_gr(const RawAttributeGraph& g, std::ostream& out) {
  out << "p sp " << g.state_count << ' ' << g.arcs.size() << '\n';
  for (const RawArc& a : g.arcs)
    out << "a " << a.source + 1 << ' ' << a.target + 1 << ' ' << a.weight << '\n';
}

Graph merge_attributes(std::span<const RawAttributeGraph> attrs) {
  if (attrs.empty()) throw std::invalid_argument("merge_attributes: no attribute files");
  const RawAttributeGraph& first = attrs.front();
  for (const RawAttributeGraph& a : attrs) {
    if (a.state_count != first.state_count)
      throw MergeError("state counts differ (" + a.name + ")", 0);
    if (a.arcs.size() != first.arcs.size())
      throw MergeError("arc counts differ (" + a.name + ")",
                       std::min(a.arcs.size(), first.arcs.size()));
  }
  const int arity = static_cast<int>(attrs.size());
  std::vector<Edge> edges;
  edges.reserve(first.arcs.size());
  for (std::size_t i = 0; i < first.arcs.size(); ++i) {
    CostVector c = CostVector::zeros(arity);
    for (int k = 0; k < arity; ++k) {
      const RawArc& a = attrs[k].arcs[i];
      if (a.source != first.arcs[i].source || a.target != first.arcs[i].target)
        throw MergeError("arc endpoints diverge between attribute files (" +
                             attrs[k].name + ")",
                         i);
      c[k] = a.weight;
    }
    edges.push_back({first.arcs[i].source, first.arcs[i].target, std::move(c)});
  }
  return Graph(first.state_count, std::move(edges), arity);
}

Graph extend_costs(const Graph& g, int target_arity) {
  if (target_arity == g.arity()) return g;
  if (g.arity() != 2 || (target_arity != 3 && target_arity != 4))
    throw std::invalid_argument(
        "extend_costs: only 2-attribute graphs extend to arity 3 or 4");

  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const StateId u = g.source(e), v = g.target(e);
    CostVector c = CostVector::zeros(target_arity);
    c[0] = g.cost(e, 0);
    c[1] = g.cost(e, 1);
    const Cost du = static_cast<Cost>(g.out_edges(u).size());
    const Cost dv = static_cast<Cost>(g.out_edges(v).size());
    c[2] = (du + dv + 1) / 2;  // round half up
    if (target_arity == 4) c[3] = 1;
    edges.push_back({u, v, std::move(c)});
  }
  return Graph(g.state_count(), std::move(edges), target_arity);
}

Delta Delta::parse(std::string_view text) {
  std::size_t dot = text.find('.');
  std::string_view int_part = dot == std::string_view::npos ? text : text.substr(0, dot);
  std::string_view frac_part =
      dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("delta: empty value");
  if (frac_part.size() > 9) throw std::invalid_argument("delta: too many digits");
  if (!text.empty() && (text.front() == '-' || text.front() == '+'))
    throw std::invalid_argument("delta: must be an unsigned decimal");

  std::int64_t ip = 0;
  if (!int_part.empty() && !parse_int(int_part, ip))
    throw std::invalid_argument("delta: not a decimal number: " + std::string(text));
  if (ip < 0) throw std::invalid_argument("delta: must be non-negative");

  std::int64_t den = 1, fp = 0;
  for (char ch : frac_part) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("delta: not a decimal number: " + std::string(text));
    fp = fp * 10 + (ch - '0');
    den *= 10;
  }
  return {ip * den + fp, den};
}

std::string Delta::to_string() const {
  std::string out = std::to_string(num / den);
  std::int64_t rem = num % den;
  std::string digits;
  for (int i = 0; i < 18 && rem != 0; ++i) {  // exact for terminating fractions
    rem *= 10;
    digits += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  while (!digits.empty() && digits.back() == '0') digits.pop_back();
  if (!digits.empty()) out += '.' + digits;
  return out;
}

UnconstrainedOptimum unconstrained_optimum(const Graph& g, StateId start, StateId goal) {
  if (start >= g.state_count() || goal >= g.state_count())
    throw std::invalid_argument("unconstrained_optimum: state out of range");
  OneToAllResult fwd = one_to_all_optimal(g, start, 0, SearchDirection::forward);
  if (fwd.dist[goal] >= kInfCost)
    throw GenerationError("goal unreachable from start");
  if (fwd.dist[goal] <= kNegInfCost)
    throw GenerationError("primary cost unbounded (negative cycle)");

  UnconstrainedOptimum out;
  out.path = extract_forward_path(g, fwd, start, goal);
  std::vector<Cost> acc(static_cast<std::size_t>(g.arity()), 0);
  for (std::size_t i = 0; i + 1 < out.path.size(); ++i) {
    EdgeId e = fwd.parent_edge[out.path[i + 1]];
    for (int k = 0; k < g.arity(); ++k) acc[k] += g.cost(e, k);
  }
  out.cost = CostVector::from(acc);
  return out;
}

std::vector<Cost> generate_limits(const Graph& g, StateId start, StateId goal,
                                  Delta delta) {
  if (delta.num <= 0 || delta.num > delta.den)
    throw std::invalid_argument("generate_limits: delta must lie in (0, 1]");
  UnconstrainedOptimum opt = unconstrained_optimum(g, start, goal);

  std::vector<Cost> limits(static_cast<std::size_t>(g.arity() - 1));
  for (int k = 1; k < g.arity(); ++k) {
    OneToAllResult bwd = backward_optimal_costs(g, goal, k);
    const Cost lo = bwd.dist[start];
    if (lo <= kNegInfCost)
      throw GenerationError("resource lower bound unbounded (negative cycle)");
    if (lo >= kInfCost)
      throw GenerationError("goal unreachable from start");
    const Cost span = opt.cost[k] - lo;
    if (span < 0)
      throw std::logic_error("generate_limits: consumption below lower bound");
    const __int128 scaled = static_cast<__int128>(delta.num) * span;
    limits[k - 1] = lo + static_cast<Cost>(scaled / delta.den);
  }
  return limits;
}

std::vector<QueryPair> load_queries(std::istream& in, std::uint32_t state_count) {
  std::vector<QueryPair> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::vector<std::string_view> tok = split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    std::int64_t s = 0, t = 0;
    if (tok.size() != 2 || !parse_int(tok[0], s) || !parse_int(tok[1], t))
      throw ParseError("malformed query line, expected '<start> <goal>'", line_no);
    if (s < 1 || s > state_count || t < 1 || t > state_count)
      throw ParseError("query state out of range", line_no);
    out.push_back({static_cast<StateId>(s - 1), static_cast<StateId>(t - 1)});
  }
  return out;
}

void write_queries(std::span<const QueryPair> queries, std::ostream& out) {
  for (const QueryPair& q : queries)
    out << q.start + 1 << ' ' << q.goal + 1 << '\n';
}

}  // namespace rcsp
