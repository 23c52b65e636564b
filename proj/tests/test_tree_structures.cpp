#include <doctest.h>

#include <sstream>

#include "gonflow/io.hpp"
#include "gonflow/morphism.hpp"
#include "gonflow/tree_partition.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;
using gonflow::testing::path_bags;

TEST_CASE("tree partition breadth") {
  SUBCASE("singleton bags along a path have breadth 1") {
    WeightedGraph g = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
    PartitionCheck pc = validate_tree_partition(g, path_bags({{1}, {2}, {3}}));
    CHECK(pc.breadth == 1);
    CHECK(pc.max_bag == 1);
  }
  SUBCASE("4-cycle folded into three bags has breadth 2") {
    WeightedGraph c4 = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
    PartitionCheck pc = validate_tree_partition(c4, path_bags({{1}, {2, 4}, {3}}));
    CHECK(pc.breadth == 2);  // bag {2,4} and two unit edges across each tree arc
    CHECK(pc.max_bag == 2);
  }
  SUBCASE("crossing weight counts toward breadth") {
    WeightedGraph g = make_graph(2, {{1, 2, 5}});
    PartitionCheck pc = validate_tree_partition(g, path_bags({{1}, {2}}));
    CHECK(pc.breadth == 5);
  }
  SUBCASE("a vertex in two bags is rejected") {
    WeightedGraph g = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
    CHECK_THROWS_AS(validate_tree_partition(g, path_bags({{1, 2}, {2, 3}})), input_error);
  }
  SUBCASE("an edge between non-adjacent bags is rejected") {
    WeightedGraph g = make_graph(3, {{1, 3, 1}, {2, 3, 1}});
    CHECK_THROWS_AS(validate_tree_partition(g, path_bags({{1}, {2}, {3}})), input_error);
  }
}

TEST_CASE("path decomposition validation") {
  std::vector<int> vs = {1, 2, 3};
  std::vector<std::pair<int, int>> es = {{1, 2}, {2, 3}};
  SUBCASE("valid decomposition reports its width") {
    TreePartition tp = path_bags({{1, 2}, {2, 3}});
    tp.pathdecomp = true;
    CHECK(validate_path_decomposition(vs, es, tp) == 1);
  }
  SUBCASE("non-contiguous occurrence is rejected") {
    TreePartition tp = path_bags({{1, 2}, {2, 3}, {1, 3}});
    tp.pathdecomp = true;
    CHECK_THROWS_AS(validate_path_decomposition(vs, es, tp), input_error);
  }
  SUBCASE("an edge in no bag is rejected") {
    TreePartition tp = path_bags({{1}, {2}, {3}});
    tp.pathdecomp = true;
    CHECK_THROWS_AS(validate_path_decomposition(vs, es, tp), input_error);
  }
}

namespace {

MorphismFile morphism_from(const std::string& text) {
  std::istringstream in(text);
  return parse_morphism(in);
}

const char* kFoldedC4 = R"(
v 1
v 2
v 3
v 4
e 1 1 2 1
e 2 2 3 1
e 3 3 4 1
e 4 4 1 1
tnode 0
tnode 1
tnode 2
tarc 0 1
tarc 1 2
vmap 1 0
vmap 2 1
vmap 4 1
vmap 3 2
emap 1 1
emap 2 2
emap 3 2
emap 4 1
)";

}  // namespace

TEST_CASE("harmonic morphism validation") {
  SUBCASE("identity map of a tree has degree 1") {
    MorphismFile mf = morphism_from(R"(
v 1
v 2
v 3
e 1 1 2 1
e 2 2 3 1
tnode 0
tnode 1
tnode 2
tarc 0 1
tarc 1 2
vmap 1 0
vmap 2 1
vmap 3 2
emap 1 1
emap 2 2
)");
    CHECK(validate_harmonic_morphism(mf.m) == 1);
  }
  SUBCASE("4-cycle folded onto a 2-edge path has degree 2") {
    MorphismFile mf = morphism_from(kFoldedC4);
    CHECK(validate_harmonic_morphism(mf.m) == 2);
  }
  SUBCASE("mismatched indices at an interior vertex violate harmonicity") {
    MorphismFile mf = morphism_from(R"(
v 1
v 2
v 3
e 1 1 2 1
e 2 2 3 1
tnode 0
tnode 1
tnode 2
tarc 0 1
tarc 1 2
vmap 1 0
vmap 2 1
vmap 3 2
emap 1 1
emap 2 2
index 2 2
)");
    CHECK_THROWS_AS(validate_harmonic_morphism(mf.m), input_error);
  }
}

TEST_CASE("morphism to tree partition construction") {
  SUBCASE("tree identity gives singleton bags and breadth 1") {
    MorphismFile mf = morphism_from(R"(
v 1
v 2
e 1 1 2 1
tnode 0
tnode 1
tarc 0 1
vmap 1 0
vmap 2 1
emap 1 1
)");
    MorphismPartition mp = morphism_to_tree_partition(mf.g, mf.m);
    CHECK(mp.subdiv_origin.empty());
    PartitionCheck pc = validate_tree_partition(mp.graph, mp.partition);
    CHECK(pc.breadth == 1);
    CHECK(pc.max_bag == 1);
  }
  SUBCASE("4-cycle fold yields bags {1},{2,4},{3} with breadth 2") {
    MorphismFile mf = morphism_from(kFoldedC4);
    MorphismPartition mp = morphism_to_tree_partition(mf.g, mf.m);
    REQUIRE(mp.partition.nodes.size() == 3);
    PartitionCheck pc = validate_tree_partition(mp.graph, mp.partition);
    CHECK(pc.breadth == 2);
    bool has_middle = false;
    for (const auto& [node, bag] : mp.partition.bag)
      if (bag == std::set<int>{2, 4}) has_middle = true;
    CHECK(has_middle);
  }
}

TEST_CASE("refinement replay") {
  WeightedGraph g = make_graph(2, {{1, 2, 1}});
  Multigraph base = weighted_to_multigraph(g).graph;

  SUBCASE("empty trace is the identity") {
    Refinement r = replay_refinement(base, {});
    CHECK(r.graph.edges.size() == base.edges.size());
    CHECK(r.subdivision_of.empty());
  }
  SUBCASE("subdividing an edge inserts one degree-2 vertex") {
    RefinementTrace t;
    t.ops.push_back({RefinementOp::Subdivide, 1});
    Refinement r = replay_refinement(base, t);
    CHECK(r.graph.vertices.size() == 3);
    CHECK(r.graph.edges.size() == 2);
    REQUIRE(r.subdivision_of.size() == 1);
    int x = r.subdivision_of.begin()->first;
    CHECK(r.graph.degree(x) == 2);
    CHECK(r.subdivision_of.at(x) == 1);
  }
  SUBCASE("two leaves at the same vertex") {
    RefinementTrace t;
    t.ops.push_back({RefinementOp::AddLeaf, 1});
    t.ops.push_back({RefinementOp::AddLeaf, 1});
    Refinement r = replay_refinement(base, t);
    CHECK(r.graph.vertices.size() == 4);
    CHECK(r.leaf_vertices.size() == 2);
    for (int v : r.leaf_vertices) CHECK(r.graph.degree(v) == 1);
  }
}
