#include "gonflow/instance.hpp"

#include <algorithm>

namespace gonflow {

std::string problem_name(Problem p) {
  switch (p) {
    case Problem::ORO: return "ORO";
    case Problem::TOO: return "TOO";
    case Problem::CMO: return "CMO";
    case Problem::MMO: return "MMO";
    case Problem::CO: return "CO";
    case Problem::UFLB: return "UFLB";
    case Problem::AONF: return "AONF";
    case Problem::CDS: return "CDS";
    case Problem::CRBDS: return "CRBDS";
  }
  return "?";
}

std::optional<Problem> problem_from_name(const std::string& s) {
  static const std::map<std::string, Problem> m = {
      {"ORO", Problem::ORO},   {"TOO", Problem::TOO},     {"CMO", Problem::CMO},
      {"MMO", Problem::MMO},   {"CO", Problem::CO},       {"UFLB", Problem::UFLB},
      {"AONF", Problem::AONF}, {"CDS", Problem::CDS},     {"CRBDS", Problem::CRBDS}};
  auto it = m.find(s);
  if (it == m.end()) return std::nullopt;
  return it->second;
}

namespace {
void require_connected(const WeightedGraph& g) {
  g.validate();
  if (!g.is_connected()) throw input_error("graph must be connected");
}
}  // namespace

void OroInstance::validate() const {
  require_connected(g);
  for (int v : g.vertices)
    if (!interval.count(v)) throw input_error("missing interval for vertex " + std::to_string(v));
}

void TooInstance::validate() const {
  require_connected(g);
  for (int v : g.vertices)
    if (!target.count(v)) throw input_error("missing target for vertex " + std::to_string(v));
}

void CmoInstance::validate() const {
  require_connected(g);
  for (int v : g.vertices)
    if (!bound.count(v)) throw input_error("missing bound for vertex " + std::to_string(v));
}

void MmoInstance::validate() const { require_connected(g); }

void CoInstance::validate() const { require_connected(g); }

void UflbInstance::validate() const {
  require_connected(g);
  if (!g.has_vertex(s) || !g.has_vertex(t)) throw input_error("UFLB source/sink not in graph");
  if (value < 0) throw input_error("UFLB value must be non-negative");
  for (const auto& e : g.edges) {
    long long l = lower.count(e.id) ? lower.at(e.id) : 0;
    if (l < 0 || l > e.w) throw input_error("UFLB lower bound outside [0,c]");
  }
}

void AonfInstance::validate() const {
  net.validate();
  if (net.source == -1 || net.sink == -1) throw input_error("AONF needs source and sink");
  if (net.has_lower_bounds()) throw input_error("AONF arcs carry no lower bounds");
  if (value < 0) throw input_error("AONF value must be non-negative");
}

void CdsInstance::validate() const {
  require_connected(g);
  for (int v : g.vertices) {
    if (!cap.count(v)) throw input_error("missing capacity for vertex " + std::to_string(v));
    if (cap.at(v) < 1) throw input_error("CDS capacities must be positive");
  }
}

void CrbdsInstance::validate() const {
  g.validate();
  for (int v : g.vertices)
    if (red.count(v) == blue.count(v))
      throw input_error("vertex " + std::to_string(v) + " must be exactly one of red/blue");
  for (const auto& e : g.edges) {
    // Edges at subdivision vertices carry refinement structure, not service.
    if (subdiv_origin.count(e.u) || subdiv_origin.count(e.v)) continue;
    if (red.count(e.u) == red.count(e.v))
      throw input_error("CRBDS edge must join a red and a blue vertex");
  }
  for (int v : red) {
    if (!cap.count(v)) throw input_error("missing capacity for red vertex " + std::to_string(v));
    if (cap.at(v) < 1) throw input_error("CRBDS capacities must be positive");
  }
  std::set<int> mated;
  for (const auto& [r, b] : mate) {
    if (!red.count(r) || !blue.count(b)) throw input_error("mate must pair a red with a blue");
    if (!g.edge_between(r, b)) throw input_error("mate pair must be adjacent");
    if (!mated.insert(b).second)
      throw input_error("two reds share the mate " + std::to_string(b));
  }
}

Problem problem_of(const AnyInstance& inst) {
  return std::visit(
      [](const auto& x) -> Problem {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OroInstance>) return Problem::ORO;
        else if constexpr (std::is_same_v<T, TooInstance>) return Problem::TOO;
        else if constexpr (std::is_same_v<T, CmoInstance>) return Problem::CMO;
        else if constexpr (std::is_same_v<T, MmoInstance>) return Problem::MMO;
        else if constexpr (std::is_same_v<T, CoInstance>) return Problem::CO;
        else if constexpr (std::is_same_v<T, UflbInstance>) return Problem::UFLB;
        else if constexpr (std::is_same_v<T, AonfInstance>) return Problem::AONF;
        else if constexpr (std::is_same_v<T, CdsInstance>) return Problem::CDS;
        else return Problem::CRBDS;
      },
      inst);
}

const WeightedGraph* graph_of(const AnyInstance& inst) {
  return std::visit(
      [](const auto& x) -> const WeightedGraph* {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, AonfInstance>) return nullptr;
        else return &x.g;
      },
      inst);
}

void validate_instance(const AnyInstance& inst) {
  std::visit([](const auto& x) { x.validate(); }, inst);
}

bool orientation_satisfies_oro(const OroInstance& inst, const Orientation& o) {
  auto out = weighted_outdegrees(inst.g, o);
  for (int v : inst.g.vertices)
    if (!inst.interval.at(v).contains(out[v])) return false;
  return true;
}

bool orientation_satisfies_too(const TooInstance& inst, const Orientation& o) {
  auto out = weighted_outdegrees(inst.g, o);
  for (int v : inst.g.vertices)
    if (out[v] != inst.target.at(v)) return false;
  return true;
}

bool orientation_satisfies_cmo(const CmoInstance& inst, const Orientation& o) {
  auto out = weighted_outdegrees(inst.g, o);
  for (int v : inst.g.vertices)
    if (out[v] > inst.bound.at(v)) return false;
  return true;
}

bool orientation_satisfies_mmo(const MmoInstance& inst, const Orientation& o) {
  auto out = weighted_outdegrees(inst.g, o);
  for (int v : inst.g.vertices)
    if (out[v] > inst.max_out) return false;
  return true;
}

bool orientation_satisfies_co(const CoInstance& inst, const Orientation& o) {
  auto out = weighted_outdegrees(inst.g, o);
  for (int v : inst.g.vertices)
    if (2 * out[v] != inst.g.weighted_degree(v)) return false;
  return true;
}

namespace {

WitnessReport report_bool(bool ok, const std::string& msg) {
  WitnessReport r;
  r.ok = ok;
  if (!ok) r.violations.push_back(msg);
  return r;
}

WitnessReport check_domination(const WeightedGraph& g, const std::set<int>& dominators,
                               const std::map<int, int>& assign,
                               const std::map<int, long long>& cap, long long budget,
                               const std::set<int>& must_dominate, bool dominator_cap_plus_self) {
  WitnessReport r;
  if ((long long)dominators.size() > budget)
    r.violations.push_back("dominating set exceeds budget");
  std::map<int, long long> used;
  for (int v : must_dominate) {
    auto it = assign.find(v);
    if (it == assign.end()) {
      r.violations.push_back("vertex " + std::to_string(v) + " not assigned");
      continue;
    }
    int d = it->second;
    if (!dominators.count(d)) {
      r.violations.push_back("vertex " + std::to_string(v) + " assigned to non-dominator");
      continue;
    }
    if (!g.edge_between(v, d)) {
      r.violations.push_back("vertex " + std::to_string(v) + " assigned to non-neighbour " +
                             std::to_string(d));
      continue;
    }
    used[d]++;
  }
  (void)dominator_cap_plus_self;
  for (int d : dominators) {
    if (!cap.count(d)) {
      r.violations.push_back("dominator " + std::to_string(d) + " has no capacity");
      continue;
    }
    if (used[d] > cap.at(d))
      r.violations.push_back("dominator " + std::to_string(d) + " over capacity");
  }
  r.ok = r.violations.empty();
  return r;
}

}  // namespace

WitnessReport validate_witness(const AnyInstance& inst, const AnyWitness& w) {
  if (std::holds_alternative<Orientation>(w)) {
    const auto& o = std::get<Orientation>(w);
    switch (problem_of(inst)) {
      case Problem::ORO:
        return report_bool(orientation_satisfies_oro(std::get<OroInstance>(inst), o),
                           "orientation violates an interval");
      case Problem::TOO:
        return report_bool(orientation_satisfies_too(std::get<TooInstance>(inst), o),
                           "orientation misses a target outdegree");
      case Problem::CMO:
        return report_bool(orientation_satisfies_cmo(std::get<CmoInstance>(inst), o),
                           "orientation exceeds a bound");
      case Problem::MMO:
        return report_bool(orientation_satisfies_mmo(std::get<MmoInstance>(inst), o),
                           "orientation exceeds max outdegree");
      case Problem::CO:
        return report_bool(orientation_satisfies_co(std::get<CoInstance>(inst), o),
                           "orientation is not circulating");
      default:
        return report_bool(false, "orientation witness for a non-orientation problem");
    }
  }
  if (std::holds_alternative<Flow>(w)) {
    if (problem_of(inst) != Problem::AONF)
      return report_bool(false, "flow witness for a non-flow problem");
    const auto& a = std::get<AonfInstance>(inst);
    const auto& f = std::get<Flow>(w);
    auto rep = check_flow(a.net, f);
    WitnessReport r;
    r.violations = rep.violations;
    for (const auto& arc : a.net.arcs) {
      auto it = f.find(arc.id);
      if (it != f.end() && it->second != 0 && it->second != arc.cap)
        r.violations.push_back("arc " + std::to_string(arc.id) + ": flow neither 0 nor capacity");
    }
    if (rep.value != a.value)
      r.violations.push_back("flow value " + std::to_string(rep.value) + " != " +
                             std::to_string(a.value));
    r.ok = r.violations.empty();
    return r;
  }
  if (std::holds_alternative<DominationWitness>(w)) {
    const auto& dw = std::get<DominationWitness>(w);
    if (problem_of(inst) == Problem::CRBDS) {
      const auto& c = std::get<CrbdsInstance>(inst);
      for (int d : dw.dominators)
        if (!c.is_red(d)) return report_bool(false, "dominator is not red");
      auto rep = check_domination(c.g, dw.dominators, dw.assign, c.cap, c.budget, c.blue, false);
      for (const auto& [r, b] : c.mate) {
        if (!dw.dominators.count(r)) continue;
        auto it = dw.assign.find(b);
        if (it == dw.assign.end() || it->second != r)
          rep.violations.push_back("chosen dominator " + std::to_string(r) +
                                   " does not serve its mate " + std::to_string(b));
      }
      rep.ok = rep.violations.empty();
      return rep;
    }
    if (problem_of(inst) == Problem::CDS) {
      const auto& c = std::get<CdsInstance>(inst);
      std::set<int> must;
      for (int v : c.g.vertices)
        if (!dw.dominators.count(v)) must.insert(v);
      return check_domination(c.g, dw.dominators, dw.assign, c.cap, c.budget, must, false);
    }
    return report_bool(false, "domination witness for a non-domination problem");
  }
  // UflbWitness
  if (problem_of(inst) != Problem::UFLB)
    return report_bool(false, "UFLB witness for a different problem");
  const auto& u = std::get<UflbInstance>(inst);
  const auto& uw = std::get<UflbWitness>(w);
  WitnessReport r;
  if (!uw.orientation.total_on(u.g)) {
    return report_bool(false, "orientation not total");
  }
  std::map<int, long long> net;
  for (int v : u.g.vertices) net[v] = 0;
  for (const auto& e : u.g.edges) {
    auto it = uw.flow.find(e.id);
    long long x = it == uw.flow.end() ? -1 : it->second;
    long long l = u.lower.count(e.id) ? u.lower.at(e.id) : 0;
    if (x < l || x > e.w)
      r.violations.push_back("edge " + std::to_string(e.id) + ": flow outside [l,c]");
    int tail = uw.orientation.tail_of(e);
    int head = uw.orientation.head_of(e);
    if (x >= 0) {
      net[tail] = checked_add(net[tail], x);
      net[head] = checked_add(net[head], -x);
    }
  }
  for (int v : u.g.vertices) {
    if (v == u.s || v == u.t) continue;
    if (net[v] != 0)
      r.violations.push_back("node " + std::to_string(v) + ": conservation violated");
  }
  if (net[u.s] != u.value)
    r.violations.push_back("flow value " + std::to_string(net[u.s]) + " != " +
                           std::to_string(u.value));
  if (net[u.t] != -u.value)
    r.violations.push_back("sink imbalance mismatch");
  r.ok = r.violations.empty();
  return r;
}

}  // namespace gonflow
