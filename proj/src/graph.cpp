#include "gonflow/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace gonflow {

namespace {

template <typename Edge>
bool connected_impl(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  if (vertices.empty()) return true;
  std::unordered_map<int, std::vector<int>> adj;
  for (const auto& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<int> seen{vertices.front()};
  std::queue<int> q;
  q.push(vertices.front());
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    for (int y : adj[x])
      if (seen.insert(y).second) q.push(y);
  }
  return seen.size() == vertices.size();
}

}  // namespace

bool WeightedGraph::has_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const WeightedEdge* WeightedGraph::edge_by_id(int id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

const WeightedEdge* WeightedGraph::edge_between(int u, int v) const {
  for (const auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return &e;
  return nullptr;
}

std::vector<const WeightedEdge*> WeightedGraph::incident_edges(int v) const {
  std::vector<const WeightedEdge*> out;
  for (const auto& e : edges)
    if (e.u == v || e.v == v) out.push_back(&e);
  return out;
}

long long WeightedGraph::weighted_degree(int v) const {
  long long d = 0;
  for (const auto& e : edges)
    if (e.u == v || e.v == v) d = checked_add(d, e.w);
  return d;
}

long long WeightedGraph::total_weight() const {
  long long t = 0;
  for (const auto& e : edges) t = checked_add(t, e.w);
  return t;
}

int WeightedGraph::max_vertex_id() const {
  int m = 0;
  for (int v : vertices) m = std::max(m, v);
  return m;
}

int WeightedGraph::max_edge_id() const {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, e.id);
  return m;
}

bool WeightedGraph::is_connected() const { return connected_impl(vertices, edges); }

void WeightedGraph::validate() const {
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw input_error("duplicate vertex id");
  std::set<int> eids;
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : edges) {
    if (!eids.insert(e.id).second) throw input_error("duplicate edge id");
    if (!vs.count(e.u) || !vs.count(e.v)) throw input_error("edge endpoint not a declared vertex");
    if (e.u == e.v) throw input_error("loop in weighted simple graph");
    auto p = std::minmax(e.u, e.v);
    if (!pairs.insert({p.first, p.second}).second)
      throw input_error("parallel edge in weighted simple graph");
    if (e.w < 1) throw input_error("edge weight must be positive");
  }
}

bool Multigraph::has_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

const MultiEdge* Multigraph::edge_by_id(int id) const {
  for (const auto& e : edges)
    if (e.id == id) return &e;
  return nullptr;
}

std::vector<const MultiEdge*> Multigraph::incident_edges(int v) const {
  std::vector<const MultiEdge*> out;
  for (const auto& e : edges)
    if (e.u == v || e.v == v) out.push_back(&e);
  return out;
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges) {
    if (e.u == v) d++;
    if (e.v == v) d++;
  }
  return d;
}

int Multigraph::max_vertex_id() const {
  int m = 0;
  for (int v : vertices) m = std::max(m, v);
  return m;
}

int Multigraph::max_edge_id() const {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, e.id);
  return m;
}

bool Multigraph::has_loop() const {
  for (const auto& e : edges)
    if (e.is_loop()) return true;
  return false;
}

bool Multigraph::is_connected() const { return connected_impl(vertices, edges); }

void Multigraph::validate() const {
  std::set<int> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size()) throw input_error("duplicate vertex id");
  std::set<int> eids;
  for (const auto& e : edges) {
    if (!eids.insert(e.id).second) throw input_error("duplicate edge id");
    if (!vs.count(e.u) || !vs.count(e.v)) throw input_error("edge endpoint not a declared vertex");
  }
}

MultiOfWeighted weighted_to_multigraph(const WeightedGraph& g) {
  MultiOfWeighted out;
  out.graph.vertices = g.vertices;
  int next = 1;
  for (const auto& e : g.edges) {
    for (long long i = 0; i < e.w; i++) {
      out.graph.edges.push_back({next, e.u, e.v});
      out.origin_edge[next] = e.id;
      next++;
    }
  }
  return out;
}

WeightedGraph multigraph_to_weighted(const Multigraph& m) {
  if (m.has_loop()) throw input_error("loop has no weighted simple counterpart");
  WeightedGraph out;
  out.vertices = m.vertices;
  std::map<std::pair<int, int>, long long> mult;
  for (const auto& e : m.edges) {
    auto p = std::minmax(e.u, e.v);
    mult[{p.first, p.second}]++;
  }
  int next = 1;
  for (const auto& [p, w] : mult) out.edges.push_back({next++, p.first, p.second, w});
  return out;
}

bool Orientation::total_on(const WeightedGraph& g) const {
  for (const auto& e : g.edges)
    if (!forward.count(e.id)) return false;
  return true;
}

void Orientation::set(const WeightedEdge& e, int tail, int head) {
  if (tail == e.u && head == e.v)
    forward[e.id] = true;
  else if (tail == e.v && head == e.u)
    forward[e.id] = false;
  else
    throw input_error("orientation endpoints do not match edge");
}

std::unordered_map<int, long long> weighted_outdegrees(const WeightedGraph& g,
                                                       const Orientation& o) {
  if (!o.total_on(g)) throw input_error("orientation is not total on the edge set");
  std::unordered_map<int, long long> out;
  for (int v : g.vertices) out[v] = 0;
  for (const auto& e : g.edges) {
    int tail = o.tail_of(e);
    out[tail] = checked_add(out[tail], e.w);
  }
  return out;
}

}  // namespace gonflow
