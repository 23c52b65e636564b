#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gonflow/graph.hpp"

namespace gonflow {

// A tree partition of a graph: the bags partition V(G) and every graph edge
// joins vertices in one bag or in two adjacent bags.

struct TreePartition {
  std::vector<int> nodes;                // tree node ids
  std::vector<std::pair<int, int>> arcs; // undirected tree edges
  std::map<int, std::set<int>> bag;      // tree node -> graph vertices
  int root = -1;                         // -1: unrooted
  bool pathdecomp = false;               // claimed to be a path decomposition

  bool has_node(int t) const { return bag.count(t) > 0; }
};

struct PartitionCheck {
  long long breadth = 0;  // max of bag sizes and per-tree-edge crossing weight
  int max_bag = 0;
};

// Throws input_error if tp is not a valid tree partition of g (or, when
// tp.pathdecomp is set, if the tree is not a path).
PartitionCheck validate_tree_partition(const WeightedGraph& g, const TreePartition& tp);

bool tree_is_path(const TreePartition& tp);

// Path decompositions reuse the same file format with the pathdecomp flag;
// unlike tree partitions the bags may overlap.  Checks: the tree is a path,
// every vertex occurs in a contiguous run of bags, every edge lies inside
// some bag.  Returns the width (max bag size minus one).
int validate_path_decomposition(const std::vector<int>& vertices,
                                const std::vector<std::pair<int, int>>& edges,
                                const TreePartition& tp);

struct RootedPartition {
  int root = -1;
  std::map<int, int> parent;                 // root maps to -1
  std::map<int, std::vector<int>> children;  // sorted ascending
  std::vector<int> postorder;
};

// Roots the tree at `root` (min node id when -1).
RootedPartition root_partition(const TreePartition& tp, int root = -1);

}  // namespace gonflow
