#include "gonflow/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>

namespace gonflow {

const Arc* FlowNetwork::arc_by_id(int id) const {
  for (const auto& a : arcs)
    if (a.id == id) return &a;
  return nullptr;
}

int FlowNetwork::max_node_id() const {
  int m = 0;
  for (int v : nodes) m = std::max(m, v);
  return m;
}

int FlowNetwork::max_arc_id() const {
  int m = 0;
  for (const auto& a : arcs) m = std::max(m, a.id);
  return m;
}

bool FlowNetwork::has_lower_bounds() const {
  for (const auto& a : arcs)
    if (a.lower > 0) return true;
  return false;
}

void FlowNetwork::validate() const {
  std::set<int> vs(nodes.begin(), nodes.end());
  if (vs.size() != nodes.size()) throw input_error("duplicate node id");
  std::set<int> ids;
  for (const auto& a : arcs) {
    if (!ids.insert(a.id).second) throw input_error("duplicate arc id");
    if (!vs.count(a.tail) || !vs.count(a.head)) throw input_error("arc endpoint not declared");
    if (a.cap < 1) throw input_error("arc capacity must be positive");
    if (a.lower < 0 || a.lower > a.cap) throw input_error("arc lower bound out of range");
  }
  if (source != -1 && !vs.count(source)) throw input_error("source not a declared node");
  if (sink != -1 && !vs.count(sink)) throw input_error("sink not a declared node");
}

FlowReport check_flow(const FlowNetwork& n, const Flow& f) {
  FlowReport rep;
  std::unordered_map<int, long long> net;  // outflow - inflow per node
  for (int v : n.nodes) net[v] = 0;
  for (const auto& a : n.arcs) {
    auto it = f.find(a.id);
    if (it == f.end()) {
      rep.violations.push_back("arc " + std::to_string(a.id) + ": no flow value");
      continue;
    }
    long long x = it->second;
    if (x < 0 || x > a.cap)
      rep.violations.push_back("arc " + std::to_string(a.id) + ": flow " + std::to_string(x) +
                               " outside [0," + std::to_string(a.cap) + "]");
    if (x < a.lower)
      rep.violations.push_back("arc " + std::to_string(a.id) + ": flow " + std::to_string(x) +
                               " below lower bound " + std::to_string(a.lower));
    net[a.tail] = checked_add(net[a.tail], x);
    net[a.head] = checked_add(net[a.head], -x);
  }
  for (int v : n.nodes) {
    if (v == n.source || v == n.sink) continue;
    if (net[v] != 0)
      rep.violations.push_back("node " + std::to_string(v) + ": conservation violated (net " +
                               std::to_string(net[v]) + ")");
  }
  rep.value = n.source != -1 ? net[n.source] : 0;
  rep.circulation = rep.value == 0;
  rep.valid = rep.violations.empty();
  return rep;
}

namespace {

// Residual-graph BFS augmentation over an arbitrary network. Arcs are stored
// as paired forward/backward entries.
struct Residual {
  struct REdge {
    int to;
    long long cap;
    int rev;       // index of reverse edge in adj[to]
    int arc_id;    // original arc id for forward edges, -1 otherwise
  };
  std::unordered_map<int, std::vector<REdge>> adj;

  void add(int u, int v, long long cap, int arc_id) {
    adj[u].push_back({v, cap, (int)adj[v].size() + (u == v ? 1 : 0), arc_id});
    adj[v].push_back({u, 0, (int)adj[u].size() - 1, -1});
  }

  long long run(int s, int t) {
    long long total = 0;
    while (true) {
      std::unordered_map<int, std::pair<int, int>> pred;  // node -> (prev node, edge idx)
      std::queue<int> q;
      q.push(s);
      pred[s] = {s, -1};
      while (!q.empty() && !pred.count(t)) {
        int x = q.front();
        q.pop();
        auto& es = adj[x];
        for (int i = 0; i < (int)es.size(); i++) {
          if (es[i].cap > 0 && !pred.count(es[i].to)) {
            pred[es[i].to] = {x, i};
            q.push(es[i].to);
          }
        }
      }
      if (!pred.count(t)) break;
      long long aug = std::numeric_limits<long long>::max();
      for (int v = t; v != s;) {
        auto [u, i] = pred[v];
        aug = std::min(aug, adj[u][i].cap);
        v = u;
      }
      for (int v = t; v != s;) {
        auto [u, i] = pred[v];
        adj[u][i].cap -= aug;
        adj[adj[u][i].to][adj[u][i].rev].cap += aug;
        v = u;
      }
      total = checked_add(total, aug);
    }
    return total;
  }
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& n) {
  if (n.has_lower_bounds()) throw input_error("max_flow does not accept lower bounds");
  n.validate();
  Residual r;
  // Remember where each arc's forward residual edge lives.
  std::unordered_map<int, std::pair<int, int>> where;  // arc id -> (tail, index)
  for (const auto& a : n.arcs) {
    where[a.id] = {a.tail, (int)r.adj[a.tail].size()};
    r.add(a.tail, a.head, a.cap, a.id);
  }
  MaxFlowResult res;
  res.value = r.run(n.source, n.sink);
  for (const auto& a : n.arcs) {
    auto [u, i] = where[a.id];
    res.flow[a.id] = a.cap - r.adj[u][i].cap;
  }
  return res;
}

std::optional<Flow> exact_flow_with_lower_bounds(const FlowNetwork& n, long long r) {
  n.validate();
  if (r < 0) return std::nullopt;
  // Close the flow into a circulation with a t->s arc of lower = cap = r,
  // then reduce lower bounds away with a super source/sink.
  Residual res;
  std::unordered_map<int, long long> excess;  // inflow-from-lower minus outflow
  for (int v : n.nodes) excess[v] = 0;
  std::unordered_map<int, std::pair<int, int>> where;
  for (const auto& a : n.arcs) {
    where[a.id] = {a.tail, (int)res.adj[a.tail].size()};
    res.add(a.tail, a.head, a.cap - a.lower, a.id);
    excess[a.head] = checked_add(excess[a.head], a.lower);
    excess[a.tail] = checked_add(excess[a.tail], -a.lower);
  }
  // t -> s closing arc, lower = cap = r: contributes only to excess.
  excess[n.source] = checked_add(excess[n.source], r);
  excess[n.sink] = checked_add(excess[n.sink], -r);
  int super_s = n.max_node_id() + 1;
  int super_t = super_s + 1;
  long long need = 0;
  for (int v : n.nodes) {
    if (excess[v] > 0) {
      res.add(super_s, v, excess[v], -1);
      need = checked_add(need, excess[v]);
    } else if (excess[v] < 0) {
      res.add(v, super_t, -excess[v], -1);
    }
  }
  if (res.run(super_s, super_t) != need) return std::nullopt;
  Flow f;
  for (const auto& a : n.arcs) {
    auto [u, i] = where[a.id];
    f[a.id] = a.lower + (a.cap - a.lower - res.adj[u][i].cap);
  }
  return f;
}

}  // namespace gonflow
