#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gonflow/flow.hpp"
#include "gonflow/graph.hpp"

namespace gonflow {

enum class Problem { ORO, TOO, CMO, MMO, CO, UFLB, AONF, CDS, CRBDS };

std::string problem_name(Problem p);
std::optional<Problem> problem_from_name(const std::string& s);

struct Interval {
  long long lo = 0;
  long long hi = -1;
  bool empty() const { return lo > hi; }
  bool contains(long long x) const { return lo <= x && x <= hi; }
};

struct OroInstance {
  WeightedGraph g;
  std::map<int, Interval> interval;  // per vertex
  // Subdivision provenance: vertex -> originating edge of the base graph.
  // Present when the instance is a subdivision emitted by convert/reduce.
  std::map<int, int> subdiv_origin;
  bool trivial_no = false;
  void validate() const;
};

struct TooInstance {
  WeightedGraph g;
  std::map<int, long long> target;
  std::map<int, int> subdiv_origin;
  bool trivial_no = false;
  void validate() const;
};

struct CmoInstance {
  WeightedGraph g;
  std::map<int, long long> bound;
  std::map<int, int> subdiv_origin;
  bool trivial_no = false;
  void validate() const;
};

struct MmoInstance {
  WeightedGraph g;
  long long max_out = 0;
  std::map<int, int> subdiv_origin;
  bool trivial_no = false;
  void validate() const;
};

struct CoInstance {
  WeightedGraph g;
  std::map<int, int> subdiv_origin;
  bool trivial_no = false;
  void validate() const;
};

struct UflbInstance {
  WeightedGraph g;  // w = capacity c(e)
  std::map<int, long long> lower;
  int s = -1, t = -1;
  long long value = 0;
  void validate() const;
};

struct AonfInstance {
  FlowNetwork net;
  long long value = 0;
  void validate() const;
};

struct CdsInstance {
  WeightedGraph g;  // weights 1, ignored
  std::map<int, long long> cap;
  long long budget = 0;
  void validate() const;
};

struct CrbdsInstance {
  WeightedGraph g;
  std::set<int> red, blue;
  std::map<int, long long> cap;  // red vertices only
  // Forced service: when the key (red) vertex is chosen as a dominator, it
  // must dominate its mate (blue) vertex.  Used by instances produced from
  // plain capacitated domination, where a chosen vertex covers itself.
  std::map<int, int> mate;
  long long budget = 0;
  std::map<int, int> subdiv_origin;  // as in OroInstance
  bool trivial_no = false;
  void validate() const;
  bool is_red(int v) const { return red.count(v) > 0; }
};

using AnyInstance = std::variant<OroInstance, TooInstance, CmoInstance, MmoInstance, CoInstance,
                                 UflbInstance, AonfInstance, CdsInstance, CrbdsInstance>;

Problem problem_of(const AnyInstance& inst);
const WeightedGraph* graph_of(const AnyInstance& inst);  // null for AONF
void validate_instance(const AnyInstance& inst);

/// Witnesses.
struct DominationWitness {
  std::set<int> dominators;
  std::map<int, int> assign;  // dominated vertex -> dominator
};

struct UflbWitness {
  Orientation orientation;
  std::unordered_map<int, long long> flow;  // per edge id, along the orientation
};

using AnyWitness = std::variant<Orientation, Flow, DominationWitness, UflbWitness>;

struct WitnessReport {
  bool ok = false;
  std::vector<std::string> violations;
};

WitnessReport validate_witness(const AnyInstance& inst, const AnyWitness& w);

// Per-problem checks used by both the solvers and validate_witness.
bool orientation_satisfies_oro(const OroInstance& inst, const Orientation& o);
bool orientation_satisfies_too(const TooInstance& inst, const Orientation& o);
bool orientation_satisfies_cmo(const CmoInstance& inst, const Orientation& o);
bool orientation_satisfies_mmo(const MmoInstance& inst, const Orientation& o);
bool orientation_satisfies_co(const CoInstance& inst, const Orientation& o);

}  // namespace gonflow
