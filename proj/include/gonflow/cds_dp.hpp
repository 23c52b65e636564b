#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "gonflow/instance.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Dynamic programming over a tree partition for Capacitated Red-Blue
// Dominating Set, and the Capacitated Dominating Set front-end.
//
// Three nested table families are kept per tree node i (parent j):
//   A_i(D, h): partial solutions.  Blues strictly below the bag are served;
//     D is the subset of bag blues already served; h gives, per bag red, the
//     remaining capacity clipped at k when chosen (0 when not chosen).
//     Values are the minimum number of chosen reds in the subtree.
//   B_i(D): like A, but D additionally records which parent-bag blues are
//     served from inside the subtree.  Values still count subtree reds.
//   C_i(D, g): all bag blues are settled, either inside the subtree or by
//     parent-bag reds; g counts, per parent red, how many bag blues it
//     serves; D is the set of parent blues served from the subtree.  Values
//     exclude parent-bag reds, so they can be summed over siblings.
//
// For a node with children the A-table is built by grouping children into
// classes with identical minimum-shifted C-tables and solving, per target
// characteristic, a small integer program that decides how many children of
// each class adopt each C-characteristic.  The spread of every finite
// B-table is bounded by the number of extra served blues and the spread of
// every finite C-table by 2k; both bounds are asserted whenever the instance
// has no forced-service pairs (mates), for which the exchange argument
// behind the bounds is proved.

struct CdsDpOptions {
  long long max_width = 12;       // partitions with larger bags are refused
  long long max_table = 1 << 20;  // per-node characteristic-count cap
  long long ilp_node_budget = -1; // -1: GONFLOW_NODE_BUDGET or default
};

enum class DominationStatus { Yes, OverBudget, Infeasible };

struct CdsDpResult {
  DominationStatus status = DominationStatus::Infeasible;
  long long min_size = -1;    // minimum dominating-set size unless Infeasible
  DominationWitness witness;  // minimum-size witness unless Infeasible
  // Diagnostics: largest observed table spreads (see module comment).
  long long max_b_excess = 0;  // max over B entries of value - B(empty) - |D|
  long long max_c_spread = 0;  // max over nodes of C-table max - min
};

// Can the set of all reds serve every blue within capacities (forced-service
// pairs honoured)?  A negative answer rules out every dominating set.
bool crbds_assignment_feasible(const CrbdsInstance& inst);

// Replaces each degree-2 subdivision vertex s on a red-blue edge v-w by a
// three-vertex gadget {x blue, y red cap 2, z blue} with edges v-x, x-y,
// y-z, y-w.  The gadget instance is subdivision-free and its minimum size
// exceeds the contracted instance's by exactly gadget_count (y is forced by
// its private neighbour z).  Bags triple at worst.
struct GadgetizedCrbds {
  CrbdsInstance out;       // gadget instance (budget raised by gadget_count)
  TreePartition tree;      // input partition with s replaced by {x, y, z}
  CrbdsInstance original;  // subdivisions contracted back to plain edges
  int gadget_count = 0;
  std::map<int, std::pair<int, int>> gadget_red;  // y -> (v, w)
  std::set<int> gadget_blue;                      // all x and z vertices
};
GadgetizedCrbds gadgetize_subdivisions(const CrbdsInstance& in, const TreePartition& tp);

// Minimum capacitated red-blue dominating set via the table DP.  Subdivided
// instances are gadgetized first and the witness is translated back to the
// contracted graph.  Forced-service pairs must share a bag.  Throws
// input_error on invalid input and resource_error on exceeded limits.
CdsDpResult solve_crbds(const CrbdsInstance& inst, const TreePartition& tp,
                        const CdsDpOptions& opts = {});

// Capacitated Dominating Set front-end: every vertex becomes a red copy
// (capacity + 1, forced to serve its own blue copy when chosen) plus a blue
// copy, the partition doubles in place, and the witness maps back.
CdsDpResult solve_cds(const CdsInstance& inst, const TreePartition& tp,
                      const CdsDpOptions& opts = {});

}  // namespace gonflow
