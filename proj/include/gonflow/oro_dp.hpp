#pragma once

#include <map>
#include <set>
#include <vector>

#include "gonflow/instance.hpp"
#include "gonflow/reductions.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Dynamic programming over a tree partition for interval-constrained
// orientation, and front-end solvers for the problems that reduce to it.
//
// For each tree arc a = (i, i') with i the parent, a partial solution orients
// every edge below the arc (edges inside the subtree of i' plus the edges
// crossing a) so that all vertices strictly below i satisfy their intervals.
// Its fingerprint records, per vertex of the parent bag X_i, the weight
// oriented out of it across a.  Two partial solutions with equal fingerprints
// are interchangeable, so per arc only the set of realizable fingerprints is
// kept.  Tables combine upwards: local orientations of the bag's edges are
// enumerated, children are grouped into classes by table equality, and an
// integer program counts how many children of each class adopt each
// fingerprint so that every bag vertex lands in its interval.

struct OroDpOptions {
  long long max_breadth = 6;                  // partitions above this are refused
  long long max_arc_orientations = 1 << 22;   // per-arc enumeration cap
  long long ilp_node_budget = -1;             // -1: GONFLOW_NODE_BUDGET or default
};

struct OroResult {
  bool yes = false;
  Orientation orientation;  // total on the (preprocessed) graph when yes
};

struct PreprocessedOro {
  OroInstance inst;    // subdivision vertices pinned to [w, w]
  TreePartition tree;  // input partition plus an empty root bag
  long long breadth = 0;
};

// Validates instance and partition, pins subdivision-vertex intervals, and
// appends the empty root bag.  Throws input_error on invalid input and
// resource_error when the breadth exceeds the configured limit.
PreprocessedOro preprocess_oro(const OroInstance& in, const TreePartition& tp,
                               const OroDpOptions& opts = {});

OroResult solve_oro(const OroInstance& in, const TreePartition& tp,
                    const OroDpOptions& opts = {});

struct FamilyResult {
  bool yes = false;
  AnyWitness witness;  // matches the native problem when yes
};

// Routes ORO/TOO/CMO/MMO/CO/UFLB/AONF through the reductions, solves the
// lifted instance on the (transported) partition, and maps the witness back.
// The partition must cover the input graph (network nodes for AONF).
FamilyResult solve_family(const AnyInstance& inst, const TreePartition& tp,
                          const OroDpOptions& opts = {});

}  // namespace gonflow
