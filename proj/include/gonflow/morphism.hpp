#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gonflow/graph.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Finite harmonic morphisms from a refinement of a multigraph to a tree,
// and the construction turning one into a tree partition of a subdivision.

struct RefinementOp {
  enum Kind { Subdivide, AddLeaf } kind = Subdivide;
  int target = 0;  // edge id (Subdivide) or vertex id (AddLeaf)
};

struct RefinementTrace {
  std::vector<RefinementOp> ops;
};

struct Refinement {
  Multigraph graph;
  std::set<int> base_vertices;      // vertices present before refinement
  std::map<int, int> subdivision_of;  // new vertex -> base edge id (-1 if on a leaf edge)
  std::set<int> leaf_vertices;        // vertices added by AddLeaf
  std::map<int, int> edge_origin;     // edge -> base edge id (-1 for leaf edges)
};

// Replays ops on `base` with deterministic ids: a new vertex gets
// max-vertex-id + 1; subdividing edge e = (u, v) removes e and adds edges
// max-edge-id + 1 = (u, x) and max-edge-id + 2 = (x, v); a leaf edge gets
// max-edge-id + 1.  Throws input_error on a dangling reference.
Refinement replay_refinement(const Multigraph& base, const RefinementTrace& trace);

struct Tree {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arcs;  // arc id = 1-based position
};

struct HarmonicMorphism {
  Multigraph source;             // H, loopless
  Tree tree;                     // T
  std::map<int, int> vmap;       // V(H) -> tree node
  std::map<int, int> emap;       // E(H) -> tree arc (1-based)
  std::map<int, long long> index;  // r(e) >= 1
  RefinementTrace trace;         // how H arose from the base multigraph
  bool has_trace = false;
};

// Throws input_error describing every violated clause; returns deg(phi).
// A single-node tree forces an edgeless source and has degree |V(H)|.
long long validate_harmonic_morphism(const HarmonicMorphism& m);

struct MorphismPartition {
  WeightedGraph graph;            // subdivision G' of G
  std::map<int, int> subdiv_origin;  // subdivision vertex -> original edge id
  TreePartition partition;
};

// Construction: bags are vertex preimages, each graph edge is
// subdivided along the tree path between its endpoints' bags, empty bags
// are pruned and degree-2 bags without original vertices are contracted.
MorphismPartition morphism_to_tree_partition(const WeightedGraph& g,
                                             const HarmonicMorphism& m);

}  // namespace gonflow
