#include <doctest.h>

#include "gonflow/flow.hpp"
#include "gonflow/graph.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;

TEST_CASE("weighted to multigraph expands weights into parallel edges") {
  WeightedGraph tri = make_graph(3, {{1, 2, 1}, {2, 3, 2}, {1, 3, 3}});
  MultiOfWeighted m = weighted_to_multigraph(tri);
  CHECK(m.graph.edges.size() == 6);
  int from_edge3 = 0;
  for (const auto& e : m.graph.edges)
    if (m.origin_edge.at(e.id) == 3) ++from_edge3;
  CHECK(from_edge3 == 3);

  WeightedGraph unit = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  CHECK(weighted_to_multigraph(unit).graph.edges.size() == 2);
}

TEST_CASE("multigraph to weighted collapses multiplicities and round-trips") {
  WeightedGraph g = make_graph(2, {{1, 2, 5}});
  Multigraph m = weighted_to_multigraph(g).graph;
  CHECK(m.edges.size() == 5);
  WeightedGraph back = multigraph_to_weighted(m);
  REQUIRE(back.edges.size() == 1);
  CHECK(back.edges[0].w == 5);

  Multigraph loop;
  loop.vertices = {1};
  loop.edges = {{1, 1, 1}};
  CHECK_THROWS_AS(multigraph_to_weighted(loop), input_error);
}

TEST_CASE("weighted outdegrees") {
  SUBCASE("cyclic triangle gives every vertex outdegree 1") {
    WeightedGraph tri = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}});
    Orientation o;
    for (const auto& e : tri.edges) o.set(e, e.u, e.v);
    auto out = weighted_outdegrees(tri, o);
    for (int v : tri.vertices) CHECK(out.at(v) == 1);
  }
  SUBCASE("star oriented out of the center") {
    WeightedGraph star = make_graph(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
    Orientation o;
    for (const auto& e : star.edges) o.set(e, 1, e.other(1));
    auto out = weighted_outdegrees(star, o);
    CHECK(out.at(1) == 3);
    CHECK(out.at(2) == 0);
  }
  SUBCASE("edge weight counts fully toward the tail") {
    WeightedGraph path = make_graph(2, {{1, 2, 4}});
    Orientation o;
    o.set(path.edges[0], 1, 2);
    auto out = weighted_outdegrees(path, o);
    CHECK(out.at(1) == 4);
    CHECK(out.at(2) == 0);
  }
  SUBCASE("partial orientation is rejected") {
    WeightedGraph path = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
    Orientation o;
    o.set(path.edges[0], 1, 2);
    CHECK_THROWS_AS(weighted_outdegrees(path, o), input_error);
  }
}

TEST_CASE("flow validity checks") {
  FlowNetwork n;
  n.nodes = {1, 2, 3};
  n.arcs = {{1, 1, 2, 2}, {2, 2, 3, 3}};
  n.source = 1;
  n.sink = 3;

  SUBCASE("zero flow is a valid flow of value 0") {
    FlowReport r = check_flow(n, Flow{{1, 0}, {2, 0}});
    CHECK(r.valid);
    CHECK(r.value == 0);
  }
  SUBCASE("saturating a single path") {
    FlowReport r = check_flow(n, Flow{{1, 2}, {2, 2}});
    CHECK(r.valid);
    CHECK(r.value == 2);
  }
  SUBCASE("conservation violation at the midpoint") {
    FlowReport r = check_flow(n, Flow{{1, 2}, {2, 1}});
    CHECK(!r.valid);
    CHECK(!r.violations.empty());
  }
  SUBCASE("lower bound violation") {
    n.arcs[0].lower = 1;
    FlowReport r = check_flow(n, Flow{{1, 0}, {2, 0}});
    CHECK(!r.valid);
  }
}

TEST_CASE("maximum flow values") {
  SUBCASE("single arc") {
    FlowNetwork n;
    n.nodes = {1, 2};
    n.arcs = {{1, 1, 2, 3}};
    n.source = 1;
    n.sink = 2;
    CHECK(max_flow(n).value == 3);
  }
  SUBCASE("two disjoint paths add up") {
    FlowNetwork n;
    n.nodes = {1, 2, 3, 4};
    n.arcs = {{1, 1, 2, 2}, {2, 2, 4, 2}, {3, 1, 3, 5}, {4, 3, 4, 5}};
    n.source = 1;
    n.sink = 4;
    CHECK(max_flow(n).value == 7);
  }
  SUBCASE("diamond with unit bottlenecks in the middle") {
    FlowNetwork n;
    n.nodes = {1, 2, 3, 4};
    n.arcs = {{1, 1, 2, 5}, {2, 1, 3, 5}, {3, 2, 4, 1}, {4, 3, 4, 1}};
    n.source = 1;
    n.sink = 4;
    MaxFlowResult r = max_flow(n);
    CHECK(r.value == 2);
    CHECK(check_flow(n, r.flow).valid);
  }
}

TEST_CASE("exact flow with lower bounds") {
  FlowNetwork n;
  n.nodes = {1, 2};
  n.arcs = {{1, 1, 2, 2, 1}};
  n.source = 1;
  n.sink = 2;
  auto f = exact_flow_with_lower_bounds(n, 1);
  REQUIRE(f.has_value());
  CHECK(check_flow(n, *f).valid);
  CHECK(!exact_flow_with_lower_bounds(n, 3).has_value());
  CHECK(!exact_flow_with_lower_bounds(n, 0).has_value());  // lower bound forces >= 1
}
