#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gonflow/common.hpp"

namespace gonflow {

struct Arc {
  int id;
  int tail, head;
  long long cap;
  long long lower = 0;
};

struct FlowNetwork {
  std::vector<int> nodes;
  std::vector<Arc> arcs;
  int source = -1;
  int sink = -1;

  const Arc* arc_by_id(int id) const;
  int max_node_id() const;
  int max_arc_id() const;
  bool has_lower_bounds() const;
  void validate() const;
};

/// Flow values per arc id.
using Flow = std::unordered_map<int, long long>;

struct FlowReport {
  bool valid = false;
  long long value = 0;  // outflow(s) - inflow(s), meaningful even when invalid
  bool circulation = false;
  std::vector<std::string> violations;
};

// Validates capacities, lower bounds, and conservation at every node except
// source and sink. Never throws on a bad flow; returns the report.
FlowReport check_flow(const FlowNetwork& n, const Flow& f);

struct MaxFlowResult {
  Flow flow;
  long long value = 0;
};

// Integral maximum flow, shortest augmenting path. Requires no lower bounds.
MaxFlowResult max_flow(const FlowNetwork& n);

// Integral s-t flow of exact value r respecting lower bounds, if one exists.
// Standard circulation-feasibility transformation.
std::optional<Flow> exact_flow_with_lower_bounds(const FlowNetwork& n, long long r);

}  // namespace gonflow
