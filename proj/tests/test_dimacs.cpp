#include "rcsp/dimacs.hpp"

#include "doctest.h"
#include "support.hpp"

#include <sstream>

using namespace rcsp;
using rcsp::testing::GoldenMap;

namespace {
RawAttributeGraph parsed(const std::string& text) {
  std::istringstream in(text);
  return parse_gr(in, "test");
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    parse_gr(in, "test");
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}
}  // namespace

TEST_CASE("parse_gr reads the arc list format") {
  auto g = parsed(
      "c tiny example\n"
      "\n"
      "p sp 3 2\n"
      "a 1 2 5\n"
      "c interleaved comment\n"
      "a 2 3 -4\n");
  CHECK(g.state_count == 3);
  REQUIRE(g.arcs.size() == 2);
  CHECK(g.arcs[0].source == 0);
  CHECK(g.arcs[0].target == 1);
  CHECK(g.arcs[0].weight == 5);
  CHECK(g.arcs[1].source == 1);
  CHECK(g.arcs[1].target == 2);
  CHECK(g.arcs[1].weight == -4);
  CHECK(g.name == "test");
}

TEST_CASE("parse_gr rejects malformed input with the offending line") {
  CHECK(parse_error_line("p sp 2\n") == 1);
  CHECK(parse_error_line("p sp 2 1\np sp 2 1\n") == 2);
  CHECK(parse_error_line("a 1 2 3\n") == 1);
  CHECK(parse_error_line("c ok\nx 1 2\n") == 2);
  CHECK(parse_error_line("p sp 2 1\na 1 3 5\n") == 2);
  CHECK(parse_error_line("p sp 2 1\na 0 1 5\n") == 2);
  CHECK(parse_error_line("p sp 2 1\na 1 2\n") == 2);
  CHECK(parse_error_line("p sp 2 1\na 1 2 x\n") == 2);
  CHECK(parse_error_line("p sp 2 2\na 1 2 5\n") == 2);  // declared 2, found 1
  CHECK(parse_error_line("c only comments\n") == 1);
}

TEST_CASE("write_gr round-trips through parse_gr") {
  RawAttributeGraph g;
  g.state_count = 4;
  g.arcs = {{0, 1, 7}, {1, 2, -3}, {3, 0, 0}};
  std::ostringstream out;
  write_gr(g, out);
  auto back = parsed(out.str());
  CHECK(back.state_count == g.state_count);
  REQUIRE(back.arcs.size() == g.arcs.size());
  for (std::size_t i = 0; i < g.arcs.size(); ++i) {
    CHECK(back.arcs[i].source == g.arcs[i].source);
    CHECK(back.arcs[i].target == g.arcs[i].target);
    CHECK(back.arcs[i].weight == g.arcs[i].weight);
  }
}

TEST_CASE("merge_attributes zips parallel arc lists") {
  RawAttributeGraph dist;
  dist.state_count = 3;
  dist.arcs = {{0, 1, 5}, {1, 2, -4}};
  RawAttributeGraph time = dist;
  time.arcs[0].weight = 2;
  time.arcs[1].weight = 9;

  std::vector<RawAttributeGraph> attrs{dist, time};
  Graph g = merge_attributes(attrs);
  CHECK(g.state_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.arity() == 2);
  CHECK(g.cost_vector(0) == CostVector{5, 2});
  CHECK(g.cost_vector(1) == CostVector{-4, 9});
}

TEST_CASE("merge_attributes reports the first diverging arc") {
  RawAttributeGraph a;
  a.state_count = 3;
  a.arcs = {{0, 1, 5}, {1, 2, 1}};
  RawAttributeGraph b = a;
  b.arcs[1].target = 0;

  std::vector<RawAttributeGraph> attrs{a, b};
  bool caught = false;
  try {
    merge_attributes(attrs);
  } catch (const MergeError& e) {
    caught = true;
    CHECK(e.arc_index() == 1);
  }
  CHECK(caught);

  b = a;
  b.state_count = 4;
  std::vector<RawAttributeGraph> attrs2{a, b};
  CHECK_THROWS_AS(merge_attributes(attrs2), MergeError);

  b = a;
  b.arcs.pop_back();
  std::vector<RawAttributeGraph> attrs3{a, b};
  CHECK_THROWS_AS(merge_attributes(attrs3), MergeError);
}

TEST_CASE("extend_costs derives degree and hop attributes") {
  // u has out-degree 4, v out-degree 2: the derived third weight is 3.
  std::vector<Edge> edges;
  StateId u = 0, v = 1;
  edges.push_back({u, v, CostVector{10, 1}});
  edges.push_back({u, 2, CostVector{1, 1}});
  edges.push_back({u, 3, CostVector{1, 1}});
  edges.push_back({u, 4, CostVector{1, 1}});
  edges.push_back({v, 3, CostVector{1, 1}});
  edges.push_back({v, 4, CostVector{1, 1}});
  edges.push_back({3, 4, CostVector{1, 1}});
  Graph g(5, std::move(edges));

  Graph g3 = extend_costs(g, 3);
  CHECK(g3.arity() == 3);
  CHECK(g3.edge_count() == g.edge_count());
  EdgeId uv = g3.out_edges(u)[0];
  CHECK(g3.cost_vector(uv) == CostVector{10, 1, 3});
  EdgeId v3 = g3.out_edges(v)[0];
  CHECK(g3.cost_vector(v3) == CostVector{1, 1, 2});  // (2+1+1)/2 rounds up

  Graph g4 = extend_costs(g, 4);
  CHECK(g4.arity() == 4);
  CHECK(g4.cost_vector(g4.out_edges(u)[0]) == CostVector{10, 1, 3, 1});
  for (EdgeId e = 0; e < g4.edge_count(); ++e) CHECK(g4.cost(e, 3) == 1);

  Graph same = extend_costs(g, 2);
  CHECK(same.arity() == 2);
  CHECK(same.cost_vector(0) == g.cost_vector(0));

  CHECK_THROWS_AS(extend_costs(g3, 4), std::invalid_argument);
  CHECK_THROWS_AS(extend_costs(g, 5), std::invalid_argument);
}

TEST_CASE("delta parses exact decimal fractions") {
  auto half = Delta::parse("0.5");
  CHECK(half.num == 5);
  CHECK(half.den == 10);
  CHECK(half.value() == doctest::Approx(0.5));
  CHECK(half == Delta{1, 2});
  CHECK(half.to_string() == "0.5");

  CHECK(Delta::parse("1") == Delta{1, 1});
  CHECK(Delta::parse("1.0") == Delta{1, 1});
  CHECK(Delta::parse("1.0").to_string() == "1");
  CHECK(Delta::parse("0.3") == Delta{3, 10});
  CHECK(Delta::parse("0.30").to_string() == "0.3");
  CHECK(Delta::parse(".25") == Delta{1, 4});
  CHECK(Delta::parse("0.123456789") == Delta{123456789, 1000000000});

  CHECK_THROWS_AS(Delta::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Delta::parse("."), std::invalid_argument);
  CHECK_THROWS_AS(Delta::parse("-0.1"), std::invalid_argument);
  CHECK_THROWS_AS(Delta::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Delta::parse("0.x"), std::invalid_argument);
  CHECK_THROWS_AS(Delta::parse("0.1234567890"), std::invalid_argument);
}

TEST_CASE("unconstrained optimum tracks the cheapest primary path") {
  Graph g = GoldenMap::graph();
  auto opt = unconstrained_optimum(g, GoldenMap::us, GoldenMap::ug);
  CHECK(opt.cost == CostVector{-1, 1, 4});
  CHECK(opt.path == std::vector<StateId>{GoldenMap::us, GoldenMap::u1, GoldenMap::ug});

  CHECK_THROWS_AS(unconstrained_optimum(g, GoldenMap::ug, GoldenMap::us),
                  GenerationError);
  Graph bridged = GoldenMap::with_cycle_bridge();
  CHECK_THROWS_AS(unconstrained_optimum(bridged, GoldenMap::us, GoldenMap::ug),
                  GenerationError);
}

TEST_CASE("generate_limits interpolates between bound and consumption") {
  Graph g = GoldenMap::graph();
  // Resource 1: lower bound 1, optimum consumes 1, so every delta gives 1.
  // Resource 2: lower bound 0, optimum consumes 4.
  CHECK(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta{1, 2}) ==
        std::vector<Cost>{1, 2});
  CHECK(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta{1, 1}) ==
        std::vector<Cost>{1, 4});
  CHECK(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta{1, 10}) ==
        std::vector<Cost>{1, 0});
  CHECK(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta::parse("0.9")) ==
        std::vector<Cost>{1, 3});

  CHECK_THROWS_AS(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta{0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_limits(g, GoldenMap::us, GoldenMap::ug, Delta{3, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(generate_limits(g, GoldenMap::ug, GoldenMap::us, Delta{1, 2}),
                  GenerationError);
}

TEST_CASE("generate_limits splits the bound-to-consumption interval") {
  // Lower bound 10, primary-optimal consumption 20, delta 0.5 -> limit 15.
  Graph g(2, {{0, 1, CostVector{1, 20}}, {0, 1, CostVector{5, 10}}});
  CHECK(generate_limits(g, 0, 1, Delta{1, 2}) == std::vector<Cost>{15});
  CHECK(generate_limits(g, 0, 1, Delta{1, 1}) == std::vector<Cost>{20});
  CHECK(generate_limits(g, 0, 1, Delta{1, 10}) == std::vector<Cost>{11});
}

TEST_CASE("query files are 1-based") {
  std::istringstream in("1 8\nc note\n3 4\n");
  auto q = load_queries(in, 8);
  REQUIRE(q.size() == 2);
  CHECK(q[0].start == 0);
  CHECK(q[0].goal == 7);
  CHECK(q[1].start == 2);
  CHECK(q[1].goal == 3);

  std::ostringstream out;
  write_queries(q, out);
  std::istringstream back(out.str());
  auto q2 = load_queries(back, 8);
  REQUIRE(q2.size() == 2);
  CHECK(q2[1].goal == q[1].goal);

  std::istringstream bad("1 9\n");
  CHECK_THROWS_AS(load_queries(bad, 8), ParseError);
  std::istringstream bad2("1\n");
  CHECK_THROWS_AS(load_queries(bad2, 8), ParseError);
}
