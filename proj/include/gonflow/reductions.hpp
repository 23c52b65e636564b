#pragma once

#include <array>
#include <map>
#include <vector>

#include "gonflow/instance.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Canonical always-no instances: a single vertex carrying an unsatisfiable
// constraint, with the trivial-no flag set so validators and solvers agree.
OroInstance trivial_no_oro();
TooInstance trivial_no_too();
CmoInstance trivial_no_cmo();
CoInstance trivial_no_co();

// Specialisations to interval-constrained orientation.  The graph and edge
// ids are preserved, so orientations are witnesses for both sides.
OroInstance lift_to_oro(const TooInstance& in);  // D_v = [d_v, d_v]
OroInstance lift_to_oro(const CmoInstance& in);  // D_v = [0, m_v]
OroInstance lift_to_oro(const MmoInstance& in);  // D_v = [0, r]
// Circulation: D_v = [deg_w(v)/2, deg_w(v)/2]; an odd weighted degree makes
// the instance an immediate no.
OroInstance lift_to_oro(const CoInstance& in);

/// All-or-nothing flow -> target outdegree orientation.
///
/// Every arc is split at a fresh midpoint and directions are dropped; edge
/// weights and outdegree targets are then doubled so that the half-capacity
/// intermediates stay integral.  An arc carries full flow exactly when both
/// its half edges are oriented along the original direction.
struct AonfToToo {
  TooInstance out;
  struct ArcImage {
    int mid;        // subdivision vertex
    int half_tail;  // edge id: original tail -- mid
    int half_head;  // edge id: mid -- original head
  };
  std::map<int, ArcImage> arc_image;  // input arc id -> image in out.g
};
AonfToToo aonf_to_too(const AonfInstance& in);

// Transports a tree partition of the network nodes to the subdivided graph:
// a midpoint joins the bag of its endpoints when they share one, otherwise a
// bag inserted on the tree arc between the endpoints' bags.
TreePartition transport_partition_aonf(const AonfToToo& red, const AonfInstance& in,
                                       const TreePartition& tp);

// Witness maps, both directions.
Flow aonf_flow_from_too(const AonfToToo& red, const AonfInstance& in, const Orientation& o);
Orientation too_orientation_from_aonf(const AonfToToo& red, const AonfInstance& in,
                                      const Flow& f);

/// Target outdegree orientation -> circulating orientation.  A supersource s
/// and supersink t absorb each vertex's demand deg_w(v) - 2 d_v; edge ids of
/// the input graph are preserved.
struct TooToCo {
  CoInstance out;
  int s = -1, t = -1;  // -1 when all demands are zero (s, t omitted)
  int ts_edge = -1;    // edge id of the t--s balancing edge
};
TooToCo too_to_co(const TooInstance& in);
Orientation too_orientation_from_co(const TooToCo& red, const TooInstance& in,
                                    const Orientation& o);

/// Target -> capped outdegree orientation.  Exact when the total edge weight
/// equals the sum of targets (a saturation argument forces equality); any
/// other instance is an immediate no.  Graph unchanged, witnesses carry over.
CmoInstance too_to_cmo(const TooInstance& in);

/// Undirected s-t flow with lower bounds -> circulating orientation, with the
/// tree partition transported alongside.
///
/// Steps: (1) an s--t return edge with lower bound = capacity = R turns the
/// flow into a circulation (skipped when R = 0; when s and t sit in different
/// bags, any R above the partition breadth is rejected outright because the
/// edges crossing the first tree arc towards t form an s-t cut); (2) each
/// edge becomes one heavy parallel edge of weight (c+l)/2 plus c-l light
/// edges of weight 1/2; (3) every edge is subdivided, restoring simplicity;
/// (4) all weights are doubled, restoring integrality.
struct UflbToCo {
  CoInstance out;
  TreePartition partition;
  bool early_no = false;       // R exceeds the s-t cut bound of the partition
  std::vector<int> cut_edges;  // input edge ids certifying the cut when early_no

  struct EdgeImage {
    std::vector<int> heavy;                   // chain of out edge ids, u to v
    std::vector<std::array<int, 2>> lights;   // per light: (u--mid, mid--v)
  };
  std::map<int, EdgeImage> edge_image;  // input edge id -> image
  bool has_st = false;
  EdgeImage st_image;  // chain of the return edge, s to t
};
UflbToCo uflb_to_co(const UflbInstance& in, const TreePartition& tp);
UflbWitness uflb_witness_from_co(const UflbToCo& red, const UflbInstance& in,
                                 const Orientation& o);

/// Capacitated domination -> red-blue capacitated domination.  Each vertex v
/// becomes a red copy of capacity c(v)+1 and a blue copy; the red copy is
/// adjacent to its own blue copy and to the blue copies of v's neighbours.
/// The red copy is mated to its blue copy: when chosen it must serve it.
/// (Without the mate constraint the instances are not equivalent: a chosen
/// red's blue copy could be served by an adjacent chosen red, freeing the +1
/// bonus capacity for a neighbour — a move with no counterpart in the plain
/// problem.)  Budget unchanged; bags of a transported partition double.
struct CdsToCrbds {
  CrbdsInstance out;
  std::map<int, int> red_of, blue_of;  // input vertex -> copies
};
CdsToCrbds cds_to_crbds(const CdsInstance& in);
TreePartition transport_partition_cds(const CdsToCrbds& red, const TreePartition& tp);
DominationWitness cds_witness_from_crbds(const CdsToCrbds& red, const CdsInstance& in,
                                         const DominationWitness& w);

}  // namespace gonflow
