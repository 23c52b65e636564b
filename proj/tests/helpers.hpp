#pragma once

#include <tuple>
#include <vector>

#include "gonflow/graph.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow::testing {

// Vertices 1..n, edge ids 1..m in the order given.
inline WeightedGraph make_graph(int n,
                                const std::vector<std::tuple<int, int, long long>>& edges) {
  WeightedGraph g;
  for (int v = 1; v <= n; ++v) g.vertices.push_back(v);
  int id = 0;
  for (auto [u, v, w] : edges) g.edges.push_back({++id, u, v, w});
  g.validate();
  return g;
}

inline TreePartition single_bag(const WeightedGraph& g) {
  TreePartition tp;
  tp.nodes.push_back(0);
  for (int v : g.vertices) tp.bag[0].insert(v);
  tp.root = 0;
  return tp;
}

// One bag per listed vertex set, tree nodes 0..k-1 on a path rooted at 0.
inline TreePartition path_bags(const std::vector<std::vector<int>>& bags) {
  TreePartition tp;
  for (size_t i = 0; i < bags.size(); ++i) {
    tp.nodes.push_back(static_cast<int>(i));
    for (int v : bags[i]) tp.bag[static_cast<int>(i)].insert(v);
    if (i > 0) tp.arcs.push_back({static_cast<int>(i) - 1, static_cast<int>(i)});
  }
  tp.root = 0;
  return tp;
}

}  // namespace gonflow::testing
