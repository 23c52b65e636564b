#include "gonflow/morphism.hpp"

#include <algorithm>
#include <queue>

#include "gonflow/common.hpp"

namespace gonflow {

Refinement replay_refinement(const Multigraph& base, const RefinementTrace& trace) {
  Refinement r;
  r.graph = base;
  r.base_vertices.insert(base.vertices.begin(), base.vertices.end());
  for (const auto& e : base.edges) r.edge_origin[e.id] = e.id;

  for (const auto& op : trace.ops) {
    if (op.kind == RefinementOp::Subdivide) {
      auto it = std::find_if(r.graph.edges.begin(), r.graph.edges.end(),
                             [&](const MultiEdge& e) { return e.id == op.target; });
      if (it == r.graph.edges.end())
        throw input_error("refinement subdivides unknown edge " + std::to_string(op.target));
      MultiEdge old = *it;
      int x = r.graph.max_vertex_id() + 1;
      int e1 = r.graph.max_edge_id() + 1;
      int e2 = e1 + 1;
      r.graph.edges.erase(it);
      r.graph.vertices.push_back(x);
      r.graph.edges.push_back({e1, old.u, x});
      r.graph.edges.push_back({e2, x, old.v});
      int origin = r.edge_origin.at(old.id);
      r.edge_origin.erase(old.id);
      r.edge_origin[e1] = origin;
      r.edge_origin[e2] = origin;
      r.subdivision_of[x] = origin;
    } else {
      if (!r.graph.has_vertex(op.target))
        throw input_error("refinement adds leaf at unknown vertex " + std::to_string(op.target));
      int x = r.graph.max_vertex_id() + 1;
      int e = r.graph.max_edge_id() + 1;
      r.graph.vertices.push_back(x);
      r.graph.edges.push_back({e, op.target, x});
      r.edge_origin[e] = -1;
      r.leaf_vertices.insert(x);
    }
  }
  return r;
}

namespace {

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += "; ";
    s += v[i];
  }
  return s;
}

std::map<int, std::vector<std::pair<int, int>>> tree_adjacency(const Tree& t) {
  std::map<int, std::vector<std::pair<int, int>>> adj;  // node -> (neighbour, arc id)
  for (int n : t.nodes) adj[n];
  for (size_t i = 0; i < t.arcs.size(); ++i) {
    auto [a, b] = t.arcs[i];
    adj[a].push_back({b, static_cast<int>(i) + 1});
    adj[b].push_back({a, static_cast<int>(i) + 1});
  }
  return adj;
}

void check_tree(const Tree& t, std::vector<std::string>& bad) {
  if (t.nodes.empty()) {
    bad.push_back("target tree is empty");
    return;
  }
  std::set<int> nodeset(t.nodes.begin(), t.nodes.end());
  if (nodeset.size() != t.nodes.size()) bad.push_back("duplicate tree node");
  for (auto [a, b] : t.arcs) {
    if (!nodeset.count(a) || !nodeset.count(b)) bad.push_back("tree arc uses unknown node");
    if (a == b) bad.push_back("tree arc is a loop");
  }
  if (t.arcs.size() + 1 != t.nodes.size()) {
    bad.push_back("target is not a tree (wrong arc count)");
    return;
  }
  auto adj = tree_adjacency(t);
  std::set<int> seen{t.nodes.front()};
  std::queue<int> q;
  q.push(t.nodes.front());
  while (!q.empty()) {
    int n = q.front();
    q.pop();
    for (auto [u, a] : adj[n])
      if (seen.insert(u).second) q.push(u);
  }
  if (seen.size() != t.nodes.size()) bad.push_back("target tree is disconnected");
}

// Unique path between two nodes of a tree (node sequence, inclusive).
std::vector<int> tree_path(const Tree& t, int from, int to) {
  auto adj = tree_adjacency(t);
  std::map<int, int> prev;
  prev[from] = from;
  std::queue<int> q;
  q.push(from);
  while (!q.empty()) {
    int n = q.front();
    q.pop();
    if (n == to) break;
    for (auto [u, a] : adj[n])
      if (!prev.count(u)) {
        prev[u] = n;
        q.push(u);
      }
  }
  if (!prev.count(to)) throw input_error("tree path endpoints disconnected");
  std::vector<int> path;
  for (int n = to; n != from; n = prev[n]) path.push_back(n);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

long long validate_harmonic_morphism(const HarmonicMorphism& m) {
  std::vector<std::string> bad;
  m.source.validate();
  if (m.source.has_loop()) bad.push_back("source has a loop");
  check_tree(m.tree, bad);
  if (!bad.empty()) throw input_error(join(bad));

  std::set<int> nodeset(m.tree.nodes.begin(), m.tree.nodes.end());
  for (int v : m.source.vertices) {
    auto it = m.vmap.find(v);
    if (it == m.vmap.end())
      bad.push_back("vertex " + std::to_string(v) + " unmapped");
    else if (!nodeset.count(it->second))
      bad.push_back("vertex " + std::to_string(v) + " maps to unknown node");
  }
  for (const auto& e : m.source.edges) {
    auto it = m.emap.find(e.id);
    if (it == m.emap.end()) {
      bad.push_back("edge " + std::to_string(e.id) + " unmapped");
      continue;
    }
    if (it->second < 1 || it->second > static_cast<int>(m.tree.arcs.size())) {
      bad.push_back("edge " + std::to_string(e.id) + " maps to unknown arc");
      continue;
    }
    auto ri = m.index.find(e.id);
    if (ri == m.index.end() || ri->second < 1)
      bad.push_back("edge " + std::to_string(e.id) + " lacks a positive index");
  }
  if (!bad.empty()) throw input_error(join(bad));

  // homomorphism
  for (const auto& e : m.source.edges) {
    auto [a, b] = m.tree.arcs[m.emap.at(e.id) - 1];
    int pu = m.vmap.at(e.u), pv = m.vmap.at(e.v);
    if (!((pu == a && pv == b) || (pu == b && pv == a)))
      bad.push_back("edge " + std::to_string(e.id) +
                    " does not map onto the arc of its endpoints' images");
  }
  if (!bad.empty()) throw input_error(join(bad));

  // single-node tree: edgeless source, every vertex counts once
  if (m.tree.arcs.empty()) return static_cast<long long>(m.source.vertices.size());

  auto adj = tree_adjacency(m.tree);
  // m(v): directional index sums must agree over all arcs at phi(v)
  std::map<int, long long> mv;
  for (int v : m.source.vertices) {
    std::map<int, long long> toward;  // arc id -> sum of r over edges at v on that arc
    for (auto [nb, arc] : adj[m.vmap.at(v)]) toward[arc] = 0;
    for (const auto* e : m.source.incident_edges(v))
      toward[m.emap.at(e->id)] += m.index.at(e->id);
    long long common = toward.begin()->second;
    for (const auto& [arc, s] : toward)
      if (s != common) {
        bad.push_back("harmonicity fails at vertex " + std::to_string(v));
        break;
      }
    mv[v] = common;
  }
  if (!bad.empty()) throw input_error(join(bad));

  // degree over arcs
  std::map<int, long long> arc_sum;
  for (size_t i = 0; i < m.tree.arcs.size(); ++i) arc_sum[static_cast<int>(i) + 1] = 0;
  for (const auto& e : m.source.edges) arc_sum[m.emap.at(e.id)] += m.index.at(e.id);
  long long deg = arc_sum.begin()->second;
  for (const auto& [arc, s] : arc_sum)
    if (s != deg) bad.push_back("degree differs between tree arcs");
  // degree over nodes
  std::map<int, long long> node_sum;
  for (int n : m.tree.nodes) node_sum[n] = 0;
  for (int v : m.source.vertices) node_sum[m.vmap.at(v)] += mv[v];
  for (const auto& [n, s] : node_sum)
    if (s != deg)
      bad.push_back("vertex-index sum over node " + std::to_string(n) +
                    " differs from the degree");
  if (!bad.empty()) throw input_error(join(bad));
  if (deg < 1) throw input_error("degree is not positive");
  return deg;
}

MorphismPartition morphism_to_tree_partition(const WeightedGraph& g,
                                             const HarmonicMorphism& m) {
  g.validate();
  validate_harmonic_morphism(m);
  if (!m.has_trace) throw input_error("morphism lacks a refinement trace");
  auto base = weighted_to_multigraph(g);
  Refinement ref = replay_refinement(base.graph, m.trace);
  {
    // the declared source must be exactly the replayed refinement
    auto same = [](const Multigraph& a, const Multigraph& b) {
      if (a.vertices.size() != b.vertices.size() || a.edges.size() != b.edges.size())
        return false;
      std::set<int> av(a.vertices.begin(), a.vertices.end());
      std::set<int> bv(b.vertices.begin(), b.vertices.end());
      if (av != bv) return false;
      std::set<std::tuple<int, int, int>> ae, be;
      for (const auto& e : a.edges) ae.insert({e.id, std::min(e.u, e.v), std::max(e.u, e.v)});
      for (const auto& e : b.edges) be.insert({e.id, std::min(e.u, e.v), std::max(e.u, e.v)});
      return ae == be;
    };
    if (!same(ref.graph, m.source))
      throw input_error("refinement trace does not reproduce the morphism source");
  }

  MorphismPartition out;
  out.graph.vertices = g.vertices;
  TreePartition& tp = out.partition;
  tp.nodes = m.tree.nodes;
  tp.arcs = m.tree.arcs;
  for (int n : m.tree.nodes) tp.bag[n];
  for (int v : g.vertices) tp.bag[m.vmap.at(v)].insert(v);

  std::set<int> original(g.vertices.begin(), g.vertices.end());
  int next_v = g.max_vertex_id();
  int next_e = 0;
  for (const auto& e : g.edges) next_e = std::max(next_e, e.id);

  for (const auto& e : g.edges) {
    auto path = tree_path(m.tree, m.vmap.at(e.u), m.vmap.at(e.v));
    if (path.size() <= 2) {
      out.graph.edges.push_back(e);
      continue;
    }
    int prev = e.u;
    for (size_t r = 1; r + 1 < path.size(); ++r) {
      int s = ++next_v;
      out.graph.vertices.push_back(s);
      out.subdiv_origin[s] = e.id;
      tp.bag[path[r]].insert(s);
      out.graph.edges.push_back({++next_e, prev, s, e.w});
      prev = s;
    }
    out.graph.edges.push_back({++next_e, prev, e.v, e.w});
  }

  // prune empty leaf bags until none remain
  auto degree_of = [&](int t) {
    int d = 0;
    for (auto [a, b] : tp.arcs)
      if (a == t || b == t) ++d;
    return d;
  };
  auto remove_node = [&](int t) {
    tp.nodes.erase(std::find(tp.nodes.begin(), tp.nodes.end(), t));
    tp.bag.erase(t);
  };
  bool pruned = true;
  while (pruned && tp.nodes.size() > 1) {
    pruned = false;
    for (int t : tp.nodes) {
      if (!tp.bag[t].empty() || degree_of(t) > 1) continue;
      tp.arcs.erase(std::remove_if(tp.arcs.begin(), tp.arcs.end(),
                                   [&](auto& a) { return a.first == t || a.second == t; }),
                    tp.arcs.end());
      remove_node(t);
      pruned = true;
      break;
    }
  }
  if (tp.nodes.size() > 1)
    for (int t : tp.nodes)
      if (tp.bag[t].empty()) throw input_error("internal empty bag survived pruning");

  // contract degree-2 bags that hold no original vertex into the parent side
  auto has_original = [&](int t) {
    for (int v : tp.bag[t])
      if (original.count(v)) return true;
    return false;
  };
  for (;;) {
    RootedPartition rp = root_partition(tp);
    int pick = -1;
    for (int t : tp.nodes) {
      if (degree_of(t) != 2 || has_original(t)) continue;
      if (pick == -1 || t < pick) pick = t;
    }
    if (pick == -1) break;
    int into = rp.parent.at(pick) != -1 ? rp.parent.at(pick) : rp.children.at(pick).front();
    int other = -1;
    for (auto [a, b] : tp.arcs) {
      if (a == pick && b != into) other = b;
      if (b == pick && a != into) other = a;
    }
    // splice each subdivision vertex in the bag out of its chain
    for (int s : std::set<int>(tp.bag[pick].begin(), tp.bag[pick].end())) {
      std::vector<WeightedEdge> inc;
      for (const auto& e : out.graph.edges)
        if (e.u == s || e.v == s) inc.push_back(e);
      if (inc.size() != 2) throw input_error("subdivision vertex without a chain");
      int a = inc[0].other(s), b = inc[1].other(s);
      out.graph.edges.erase(std::remove_if(out.graph.edges.begin(), out.graph.edges.end(),
                                           [&](auto& e) { return e.u == s || e.v == s; }),
                            out.graph.edges.end());
      out.graph.edges.push_back({++next_e, a, b, inc[0].w});
      out.graph.vertices.erase(
          std::find(out.graph.vertices.begin(), out.graph.vertices.end(), s));
      out.subdiv_origin.erase(s);
    }
    tp.arcs.erase(std::remove_if(tp.arcs.begin(), tp.arcs.end(),
                                 [&](auto& a) { return a.first == pick || a.second == pick; }),
                  tp.arcs.end());
    remove_node(pick);
    tp.arcs.push_back({std::min(into, other), std::max(into, other)});
  }

  tp.root = *std::min_element(tp.nodes.begin(), tp.nodes.end());
  return out;
}

}  // namespace gonflow
