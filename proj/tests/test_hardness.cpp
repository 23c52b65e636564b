#include <doctest.h>

#include "gonflow/hardness.hpp"
#include "gonflow/oracles.hpp"
#include "gonflow/tree_partition.hpp"

using namespace gonflow;

TEST_CASE("counter machine simulation") {
  NnccmMachine m;
  m.counters = 2;
  m.bound = 1;
  m.tests = {{1, 0, 2, 0}};

  SUBCASE("a run that never moves rejects at the test") {
    NnccmRun stuck{{{0, 0}}};
    NnccmOutcome out = simulate_nnccm(m, stuck);
    CHECK(!out.accept);
    CHECK(out.reject_at == 1);
  }
  SUBCASE("raising a counter before the test accepts") {
    NnccmRun moved{{{1, 0}}};
    CHECK(simulate_nnccm(m, moved).accept);
  }
  SUBCASE("a decreasing run is malformed") {
    m.tests.push_back({1, 1, 2, 1});
    NnccmRun bad{{{1, 0}, {0, 0}}};
    CHECK_THROWS_AS(simulate_nnccm(m, bad), input_error);
  }
}

TEST_CASE("counter machine to flow network") {
  SUBCASE("size parameters for k=1, B=1, n=1") {
    NnccmMachine m;
    m.counters = 1;
    m.bound = 1;
    m.tests = {{1, 0, 1, 1}};
    NnccmAonf net = nnccm_to_aonf(m);
    CHECK(net.L == 4);  // 4 k n B
    CHECK(net.R == 6);  // k (L + 2B)
    CHECK(net.instance.value == net.R);
  }
  SUBCASE("raw arc census before subdivision") {
    NnccmMachine m;
    m.counters = 2;
    m.bound = 2;
    m.tests = {{1, 0, 2, 1}, {2, 2, 2, 0}};
    int k = m.counters, n = static_cast<int>(m.tests.size());
    long long B = m.bound;
    NnccmAonf net = nnccm_to_aonf(m);
    long long expected = k + k + k * B * (n + 1) + k * (n + 1) * (B + 1) +
                         k * n * (B + 1) + 5 * n;
    CHECK(static_cast<long long>(net.raw_arcs.size()) == expected);
  }
  SUBCASE("the emitted path decomposition is valid") {
    NnccmMachine m;
    m.counters = 2;
    m.bound = 1;
    m.tests = {{1, 0, 2, 0}, {2, 1, 1, 0}};
    NnccmAonf net = nnccm_to_aonf(m);
    std::vector<std::pair<int, int>> edges;
    for (const auto& a : net.instance.net.arcs) edges.push_back({a.tail, a.head});
    CHECK(validate_path_decomposition(net.instance.net.nodes, edges, net.pathdecomp) >= 1);
  }
  SUBCASE("a rejecting machine yields an infeasible network") {
    NnccmMachine m;
    m.counters = 1;
    m.bound = 0;
    m.tests = {{1, 0, 1, 0}};  // unavoidable double fire
    CHECK(!oracle_nnccm(m).has_value());
    CHECK(!oracle_aonf_ilp(nnccm_to_aonf(m).instance).has_value());
  }
  SUBCASE("a degenerate same-counter-same-value test still matches the machine") {
    // both halves of (1,0,1,0) fire on one counter; the network must not
    // admit a flow the machine rejects
    NnccmMachine m;
    m.counters = 2;
    m.bound = 1;
    m.tests = {{1, 0, 1, 0}, {1, 1, 1, 1}};
    CHECK(!oracle_nnccm(m).has_value());
    CHECK(!oracle_aonf_ilp(nnccm_to_aonf(m).instance).has_value());
  }
}

TEST_CASE("accepting runs translate into full-value flows") {
  SUBCASE("machine with no tests") {
    NnccmMachine m;
    m.counters = 2;
    m.bound = 1;
    NnccmAonf net = nnccm_to_aonf(m);
    NnccmRun run{{}};
    run.values.clear();
    Flow f = witness_flow_from_run(m, run, net);
    FlowReport rep = check_flow(net.instance.net, f);
    CHECK(rep.valid);
    CHECK(rep.value == net.R);
  }
  SUBCASE("a single firing half routes one unit through the checkpoint") {
    NnccmMachine m;
    m.counters = 2;
    m.bound = 1;
    m.tests = {{1, 0, 2, 0}};
    auto run = oracle_nnccm(m);
    REQUIRE(run.has_value());
    NnccmAonf net = nnccm_to_aonf(m);
    Flow f = witness_flow_from_run(m, *run, net);
    FlowReport rep = check_flow(net.instance.net, f);
    CHECK(rep.valid);
    CHECK(rep.value == net.R);
  }
  SUBCASE("rejecting runs are refused") {
    NnccmMachine m;
    m.counters = 1;
    m.bound = 1;
    m.tests = {{1, 0, 1, 0}};
    NnccmAonf net = nnccm_to_aonf(m);
    NnccmRun stuck{{{0}}};
    CHECK_THROWS_AS(witness_flow_from_run(m, stuck, net), input_error);
  }
}

TEST_CASE("bin packing to target outdegrees") {
  SUBCASE("{1,2,3}, B=3, k=2 builds K_{2,3} with the stated targets") {
    TooInstance out = binpacking_to_too({{1, 2, 3}, 3, 2});
    CHECK(out.g.vertices.size() == 5);
    CHECK(out.g.edges.size() == 6);
    std::multiset<long long> targets;
    for (const auto& [v, d] : out.target) targets.insert(d);
    CHECK(targets == std::multiset<long long>{1, 2, 3, 3, 3});  // a_i and Bk-B twice
    CHECK(oracle_too(out).has_value());
  }
  SUBCASE("k=1 forces every edge into the single bin vertex") {
    TooInstance out = binpacking_to_too({{2, 3}, 5, 1});
    CHECK(oracle_too(out).has_value());
  }
  SUBCASE("an unpackable multiset gives a no-instance") {
    CHECK(!oracle_too(binpacking_to_too({{2, 2, 2}, 3, 2})).has_value());
  }
  SUBCASE("sum mismatch is rejected") {
    CHECK_THROWS_AS(binpacking_to_too({{1, 1}, 3, 2}), input_error);
  }
}

TEST_CASE("bin packing to all-or-nothing flow") {
  SUBCASE("{1,2,3}, B=3, k=2: 7 nodes, 11 arcs, value 6") {
    AonfInstance out = binpacking_to_aonf({{1, 2, 3}, 3, 2});
    CHECK(out.net.nodes.size() == 7);
    CHECK(out.net.arcs.size() == 3 + 6 + 2);
    CHECK(out.value == 6);
    CHECK(oracle_aonf(out).has_value());
  }
  SUBCASE("agreement with the packing oracle on a no-instance") {
    BinPacking bp{{2, 2, 2}, 3, 2};
    CHECK(!oracle_binpacking(bp).has_value());
    CHECK(!oracle_aonf(binpacking_to_aonf(bp)).has_value());
  }
}
