#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gonflow/common.hpp"

namespace gonflow {

/// Simple undirected graph with positive integer edge weights.
struct WeightedEdge {
  int id;
  int u, v;
  long long w;
  int other(int x) const { return x == u ? v : u; }
};

struct WeightedGraph {
  std::vector<int> vertices;
  std::vector<WeightedEdge> edges;

  bool has_vertex(int v) const;
  const WeightedEdge* edge_by_id(int id) const;
  const WeightedEdge* edge_between(int u, int v) const;
  std::vector<const WeightedEdge*> incident_edges(int v) const;
  long long weighted_degree(int v) const;
  long long total_weight() const;
  int max_vertex_id() const;
  int max_edge_id() const;
  bool is_connected() const;

  // Throws input_error on duplicate ids, undeclared endpoints, loops,
  // parallel edges, or non-positive weights.
  void validate() const;
};

/// Multigraph with parallel edges; loops are representable but most
/// operations require looplessness.
struct MultiEdge {
  int id;
  int u, v;
  bool is_loop() const { return u == v; }
  int other(int x) const { return x == u ? v : u; }
};

struct Multigraph {
  std::vector<int> vertices;
  std::vector<MultiEdge> edges;

  bool has_vertex(int v) const;
  const MultiEdge* edge_by_id(int id) const;
  std::vector<const MultiEdge*> incident_edges(int v) const;
  int degree(int v) const;  // loops count twice
  int max_vertex_id() const;
  int max_edge_id() const;
  bool has_loop() const;
  bool is_connected() const;
  void validate() const;
};

/// Result of expanding a weighted graph: each weight-w edge becomes w
/// parallel edges. origin_edge maps each multi-edge back to the weighted
/// edge it came from.
struct MultiOfWeighted {
  Multigraph graph;
  std::unordered_map<int, int> origin_edge;
};

MultiOfWeighted weighted_to_multigraph(const WeightedGraph& g);

// Inverse direction: parallel multiplicities become weights. Throws
// input_error if a loop is present.
WeightedGraph multigraph_to_weighted(const Multigraph& m);

/// Total orientation of a weighted graph's edge set. For edge e with stored
/// endpoints (u,v), forward means u -> v.
struct Orientation {
  std::unordered_map<int, bool> forward;

  bool total_on(const WeightedGraph& g) const;
  int tail_of(const WeightedEdge& e) const { return forward.at(e.id) ? e.u : e.v; }
  int head_of(const WeightedEdge& e) const { return forward.at(e.id) ? e.v : e.u; }
  void set(const WeightedEdge& e, int tail, int head);
};

// Sum of w(e) over edges oriented out of each vertex. Throws input_error if
// the orientation is not total on E(g).
std::unordered_map<int, long long> weighted_outdegrees(const WeightedGraph& g,
                                                       const Orientation& o);

}  // namespace gonflow
