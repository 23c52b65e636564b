#include <doctest.h>

#include "gonflow/oracles.hpp"
#include "gonflow/oro_dp.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;
using gonflow::testing::path_bags;
using gonflow::testing::single_bag;

namespace {

OroInstance triangle_oro(long long lo, long long hi) {
  OroInstance in;
  in.g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  for (int v : in.g.vertices) in.interval[v] = {lo, hi};
  return in;
}

}  // namespace

TEST_CASE("interval-orientation DP on small fixed instances") {
  SUBCASE("triangle with [1,1] everywhere orients cyclically") {
    OroInstance in = triangle_oro(1, 1);
    OroResult r = solve_oro(in, path_bags({{1}, {2, 3}}));
    REQUIRE(r.yes);
    auto out = weighted_outdegrees(in.g, r.orientation);
    for (int v : in.g.vertices) CHECK(out.at(v) == 1);
  }
  SUBCASE("triangle with [0,0] everywhere is infeasible") {
    CHECK(!solve_oro(triangle_oro(0, 0), path_bags({{1}, {2, 3}})).yes);
  }
  SUBCASE("star: center [2,2], leaves [0,1]") {
    OroInstance in;
    in.g = make_graph(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}});
    in.interval[1] = {2, 2};
    for (int v : {2, 3, 4}) in.interval[v] = {0, 1};
    OroResult r = solve_oro(in, path_bags({{1, 2}, {3, 4}}));
    REQUIRE(r.yes);
    auto out = weighted_outdegrees(in.g, r.orientation);
    CHECK(out.at(1) == 2);
    CHECK(out.at(2) + out.at(3) + out.at(4) == 1);
  }
  SUBCASE("single-bag partitions run the leaf routine directly") {
    OroInstance in = triangle_oro(1, 1);
    CHECK(solve_oro(in, single_bag(in.g)).yes);
  }
}

TEST_CASE("subdivision vertices get forced pass-through intervals") {
  // weight-3 edge subdivided once: answers agree with the original graph
  OroInstance base;
  base.g = make_graph(2, {{1, 2, 3}});
  base.interval[1] = {3, 3};
  base.interval[2] = {0, 0};

  OroInstance sub;
  sub.g = make_graph(3, {{1, 3, 3}, {3, 2, 3}});
  sub.interval[1] = {3, 3};
  sub.interval[2] = {0, 0};
  sub.subdiv_origin[3] = 1;
  sub.interval[3] = {3, 3};  // pass-through: one half in, one half out

  OroResult rb = solve_oro(base, path_bags({{1}, {2}}));
  OroResult rs = solve_oro(sub, path_bags({{1}, {3}, {2}}));
  CHECK(rb.yes == rs.yes);
  CHECK(rb.yes);
  REQUIRE(rs.yes);
  // one incident half-edge in, one out at the subdivision vertex
  auto out = weighted_outdegrees(sub.g, rs.orientation);
  CHECK(out.at(3) == 3);
}

TEST_CASE("breadth guard reports resource exhaustion, not a wrong answer") {
  OroInstance in = triangle_oro(1, 1);
  OroDpOptions opts;
  opts.max_breadth = 1;
  CHECK_THROWS_AS(solve_oro(in, single_bag(in.g), opts), resource_error);
}

TEST_CASE("family front-end routes through the reductions") {
  SUBCASE("circulation on an even cycle of unit weights") {
    CoInstance in{make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}})};
    FamilyResult r = solve_family(AnyInstance{in}, path_bags({{1}, {2, 4}, {3}}));
    REQUIRE(r.yes);
    auto out = weighted_outdegrees(in.g, std::get<Orientation>(r.witness));
    for (int v : in.g.vertices) CHECK(out.at(v) == 1);
  }
  SUBCASE("all-or-nothing flow: single arc, full value") {
    AonfInstance in;
    in.net.nodes = {1, 2};
    in.net.arcs = {{1, 1, 2, 2}};
    in.net.source = 1;
    in.net.sink = 2;
    in.value = 2;
    FamilyResult r = solve_family(AnyInstance{in}, path_bags({{1}, {2}}));
    REQUIRE(r.yes);
    const Flow& f = std::get<Flow>(r.witness);
    CHECK(f.at(1) == 2);
  }
  SUBCASE("tight lower bounds at value 0 match the circulation answer") {
    WeightedGraph g = make_graph(4, {{1, 2, 2}, {2, 3, 2}, {3, 4, 2}, {4, 1, 2}});
    UflbInstance u{g, {{1, 2}, {2, 2}, {3, 2}, {4, 2}}, 1, 3, 0};
    CoInstance c{g};
    TreePartition tp = path_bags({{1}, {2, 4}, {3}});
    OroDpOptions opts;
    opts.max_breadth = 20;  // the lower-bound construction inflates breadth
    CHECK(solve_family(AnyInstance{u}, tp, opts).yes ==
          solve_family(AnyInstance{c}, tp, opts).yes);
  }
  SUBCASE("answers match the oracles on the fixed corpus above") {
    TooInstance t{make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}}),
                  {{1, 1}, {2, 1}, {3, 1}}};
    CHECK(solve_family(AnyInstance{t}, single_bag(t.g)).yes ==
          oracle_too(t).has_value());
    MmoInstance m{make_graph(3, {{1, 2, 2}, {2, 3, 2}}), 1};
    CHECK(solve_family(AnyInstance{m}, path_bags({{1}, {2}, {3}})).yes ==
          oracle_mmo(m).has_value());
  }
}
