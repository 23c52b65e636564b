#include <doctest.h>

#include "gonflow/cds_dp.hpp"
#include "gonflow/oracles.hpp"
#include "gonflow/reductions.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;
using gonflow::testing::path_bags;
using gonflow::testing::single_bag;

namespace {

CrbdsInstance red_blue(WeightedGraph g, std::set<int> red, std::set<int> blue,
                       std::map<int, long long> cap, long long budget) {
  CrbdsInstance in;
  in.g = std::move(g);
  in.red = std::move(red);
  in.blue = std::move(blue);
  in.cap = std::move(cap);
  in.budget = budget;
  return in;
}

}  // namespace

TEST_CASE("red-blue domination DP on fixed instances") {
  SUBCASE("one red, one blue") {
    CrbdsInstance in =
        red_blue(make_graph(2, {{1, 2, 1}}), {1}, {2}, {{1, 1}}, 1);
    CdsDpResult r = solve_crbds(in, single_bag(in.g));
    REQUIRE(r.status == DominationStatus::Yes);
    CHECK(r.min_size == 1);
    CHECK(r.witness.dominators == std::set<int>{1});
  }
  SUBCASE("a capacity-2 red beats two capacity-1 reds") {
    // r1 (cap 2) adj b1,b2; r2 (cap 1) adj b2
    CrbdsInstance in = red_blue(make_graph(4, {{1, 3, 1}, {1, 4, 1}, {2, 4, 1}}),
                                {1, 2}, {3, 4}, {{1, 2}, {2, 1}}, 1);
    CdsDpResult r = solve_crbds(in, single_bag(in.g));
    REQUIRE(r.status == DominationStatus::Yes);
    CHECK(r.min_size == 1);
    CHECK(r.witness.dominators == std::set<int>{1});
  }
  SUBCASE("capacity deficit fails the precheck without running the DP") {
    // one red of capacity 1 cannot serve two blues
    CrbdsInstance in = red_blue(make_graph(3, {{1, 2, 1}, {1, 3, 1}}), {1}, {2, 3},
                                {{1, 1}}, 3);
    CHECK(!crbds_assignment_feasible(in));
    CHECK(solve_crbds(in, single_bag(in.g)).status == DominationStatus::Infeasible);
  }
  SUBCASE("feasible but over the budget") {
    CrbdsInstance in = red_blue(make_graph(4, {{1, 3, 1}, {2, 4, 1}}), {1, 2}, {3, 4},
                                {{1, 1}, {2, 1}}, 1);
    CdsDpResult r = solve_crbds(in, path_bags({{1, 3}, {2, 4}}));
    CHECK(r.status == DominationStatus::OverBudget);
    CHECK(r.min_size == 2);
  }
  SUBCASE("multi-bag partitions agree with the oracle") {
    CrbdsInstance in = red_blue(make_graph(6, {{1, 4, 1}, {1, 5, 1}, {2, 5, 1},
                                               {3, 5, 1}, {3, 6, 1}}),
                                {1, 2, 3}, {4, 5, 6}, {{1, 1}, {2, 2}, {3, 2}}, 3);
    CdsDpResult r = solve_crbds(in, path_bags({{1, 4}, {2, 5}, {3, 6}}));
    DominationResult o = oracle_crbds(in);
    REQUIRE(r.status == DominationStatus::Yes);
    CHECK(r.min_size == o.size);
    CHECK(r.max_c_spread <= 2 * 2);  // table-spread bound at breadth 2
    CHECK(r.max_b_excess == 0);
  }
}

TEST_CASE("subdivision gadget replaces pass-through vertices") {
  // red 1 -- subdivision 3 -- blue 2
  CrbdsInstance in = red_blue(make_graph(3, {{1, 3, 1}, {3, 2, 1}}), {1, 3}, {2},
                              {{1, 1}, {3, 1}}, 1);
  in.subdiv_origin[3] = 1;
  TreePartition tp = path_bags({{1}, {3}, {2}});
  GadgetizedCrbds gad = gadgetize_subdivisions(in, tp);
  CHECK(gad.gadget_count == 1);
  CHECK(gad.out.subdiv_origin.empty());
  // the gadget red is forced (its private blue has no other neighbour),
  // so minimum sizes differ by exactly the gadget count
  DominationResult before = oracle_crbds(gad.original);
  DominationResult after = oracle_crbds(gad.out);
  REQUIRE(before.feasible);
  REQUIRE(after.feasible);
  CHECK(after.size == before.size + gad.gadget_count);
  // and the gadgetized partition stays valid
  validate_tree_partition(gad.out.g, gad.tree);

  // no subdivisions: identity
  CrbdsInstance plain = red_blue(make_graph(2, {{1, 2, 1}}), {1}, {2}, {{1, 1}}, 1);
  GadgetizedCrbds none = gadgetize_subdivisions(plain, single_bag(plain.g));
  CHECK(none.gadget_count == 0);
  CHECK(none.out.g.edges.size() == plain.g.edges.size());
}

TEST_CASE("capacitated domination front-end") {
  SUBCASE("an isolated vertex dominates itself") {
    CdsInstance in{make_graph(1, {}), {{1, 1}}, 1};
    CdsDpResult r = solve_cds(in, single_bag(in.g));
    REQUIRE(r.status == DominationStatus::Yes);
    CHECK(r.min_size == 1);
    CHECK(r.witness.dominators == std::set<int>{1});
  }
  SUBCASE("a capacity-3 star center covers its three leaves") {
    CdsInstance in{make_graph(4, {{1, 2, 1}, {1, 3, 1}, {1, 4, 1}}),
                   {{1, 3}, {2, 1}, {3, 1}, {4, 1}}, 1};
    CdsDpResult r = solve_cds(in, path_bags({{1, 2}, {3, 4}}));
    REQUIRE(r.status == DominationStatus::Yes);
    CHECK(r.min_size == 1);
  }
  SUBCASE("path of five with unit capacities, budget 2") {
    CdsInstance in{make_graph(5, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}}),
                   {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}, 2};
    CdsDpResult r = solve_cds(in, path_bags({{1, 2}, {3}, {4, 5}}));
    DominationResult o = oracle_cds(in);
    REQUIRE(o.feasible);
    CHECK(r.min_size == o.size);
    CHECK((r.status == DominationStatus::Yes) == (o.size <= in.budget));
  }
  SUBCASE("raising a capacity never raises the minimum") {
    CdsInstance in{make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}}),
                   {{1, 1}, {2, 1}, {3, 1}, {4, 1}}, 4};
    TreePartition tp = path_bags({{1, 2}, {3, 4}});
    long long base = solve_cds(in, tp).min_size;
    in.cap[2] = 3;
    CHECK(solve_cds(in, tp).min_size <= base);
  }
}
