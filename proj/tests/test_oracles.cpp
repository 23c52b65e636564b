#include <doctest.h>

#include "gonflow/hardness.hpp"
#include "gonflow/oracles.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;

TEST_CASE("orientation oracle") {
  SUBCASE("triangle with [1,1] everywhere") {
    OroInstance in;
    in.g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
    for (int v : in.g.vertices) in.interval[v] = {1, 1};
    auto o = oracle_oro(in);
    REQUIRE(o.has_value());
    auto out = weighted_outdegrees(in.g, *o);
    for (int v : in.g.vertices) CHECK(out.at(v) == 1);
  }
  SUBCASE("a unit edge must leave someone") {
    OroInstance in;
    in.g = make_graph(2, {{1, 2, 1}});
    in.interval[1] = {0, 0};
    in.interval[2] = {0, 0};
    CHECK(!oracle_oro(in).has_value());
  }
  SUBCASE("an empty interval is unsatisfiable, even on an isolated vertex") {
    OroInstance in;
    in.g = make_graph(1, {});
    in.interval[1] = {2, 1};
    CHECK(!oracle_oro(in).has_value());
  }
  SUBCASE("edge cap yields a resource error, not an answer") {
    OroInstance in;
    std::vector<std::tuple<int, int, long long>> edges;
    for (int v = 2; v <= 30; ++v) edges.push_back({1, v, 1});
    in.g = make_graph(30, edges);
    for (int v : in.g.vertices) in.interval[v] = {0, 30};
    OracleCaps caps;
    caps.edges = 4;
    CHECK_THROWS_AS(oracle_oro(in, caps), resource_error);
  }
}

TEST_CASE("all-or-nothing flow oracle") {
  AonfInstance in;
  in.net.nodes = {1, 2, 3};
  in.net.source = 1;
  in.net.sink = 3;

  SUBCASE("a single saturated arc") {
    in.net.nodes = {1, 3};
    in.net.arcs = {{1, 1, 3, 2}};
    in.value = 2;
    auto f = oracle_aonf(in);
    REQUIRE(f.has_value());
    CHECK(f->at(1) == 2);
  }
  SUBCASE("serial arcs with mismatched capacities cannot conserve flow") {
    in.net.arcs = {{1, 1, 2, 2}, {2, 2, 3, 3}};
    in.value = 2;
    CHECK(!oracle_aonf(in).has_value());
  }
  SUBCASE("enumeration and integer-program routes agree on a diamond") {
    in.net.nodes = {1, 2, 4, 3};
    in.net.arcs = {{1, 1, 2, 2}, {2, 2, 3, 2}, {3, 1, 4, 3}, {4, 4, 3, 3}};
    for (long long r : {0, 2, 3, 5, 4}) {
      in.value = r;
      CHECK(oracle_aonf_enum(in).has_value() == oracle_aonf_ilp(in).has_value());
    }
  }
}

TEST_CASE("flow-with-lower-bounds oracle") {
  SUBCASE("single edge, bound 1, capacity 2, value 1") {
    UflbInstance in{make_graph(2, {{1, 2, 2}}), {{1, 1}}, 1, 2, 1};
    CHECK(oracle_uflb(in).has_value());
  }
  SUBCASE("value above every cut") {
    UflbInstance in{make_graph(2, {{1, 2, 2}}), {{1, 0}}, 1, 2, 5};
    CHECK(!oracle_uflb(in).has_value());
  }
}

TEST_CASE("bin packing oracle") {
  SUBCASE("{1,2,3} into two bins of size 3") {
    auto a = oracle_binpacking({{1, 2, 3}, 3, 2});
    REQUIRE(a.has_value());
    std::vector<long long> load(2, 0);
    for (size_t i = 0; i < a->size(); ++i) load[(*a)[i]] += std::vector<long long>{1, 2, 3}[i];
    CHECK(load[0] == 3);
    CHECK(load[1] == 3);
  }
  SUBCASE("{2,2,2} cannot make two bins of size 3") {
    CHECK(!oracle_binpacking({{2, 2, 2}, 3, 2}).has_value());
  }
  SUBCASE("one bin holding the full sum") {
    CHECK(oracle_binpacking({{5}, 5, 1}).has_value());
  }
  SUBCASE("sum mismatch is an input error") {
    CHECK_THROWS_AS(oracle_binpacking({{1, 2}, 3, 2}), input_error);
  }
}

TEST_CASE("counter machine oracle") {
  SUBCASE("no tests: the all-zero run accepts") {
    NnccmMachine m;
    m.counters = 1;
    m.bound = 1;
    CHECK(oracle_nnccm(m).has_value());
  }
  SUBCASE("bound 0 with a self-test on the stuck counter") {
    NnccmMachine m;
    m.counters = 1;
    m.bound = 0;
    m.tests = {{1, 0, 1, 0}};
    CHECK(!oracle_nnccm(m).has_value());
  }
  SUBCASE("raising counter 1 first dodges the test") {
    NnccmMachine m;
    m.counters = 2;
    m.bound = 1;
    m.tests = {{1, 0, 2, 0}};
    auto run = oracle_nnccm(m);
    REQUIRE(run.has_value());
    CHECK(simulate_nnccm(m, *run).accept);
  }
}

TEST_CASE("domination oracles") {
  SUBCASE("single red-blue edge") {
    CrbdsInstance in;
    in.g = make_graph(2, {{1, 2, 1}});
    in.red = {1};
    in.blue = {2};
    in.cap = {{1, 1}};
    in.budget = 1;
    DominationResult r = oracle_crbds(in);
    REQUIRE(r.feasible);
    CHECK(r.size == 1);
  }
  SUBCASE("capacity-deficient instance is infeasible") {
    CrbdsInstance in;
    in.g = make_graph(3, {{1, 2, 1}, {1, 3, 1}});
    in.red = {1};
    in.blue = {2, 3};
    in.cap = {{1, 1}};
    in.budget = 3;
    CHECK(!oracle_crbds(in).feasible);
  }
  SUBCASE("path of five, unit capacities") {
    CdsInstance in{make_graph(5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}}),
                   {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 5};
    DominationResult r = oracle_cds(in);
    REQUIRE(r.feasible);
    CHECK(r.size == 3);  // 5 vertices, each dominator covers itself plus one
  }
}
