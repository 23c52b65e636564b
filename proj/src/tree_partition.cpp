#include "gonflow/tree_partition.hpp"

#include <algorithm>
#include <queue>

#include "gonflow/common.hpp"

namespace gonflow {

namespace {

std::map<int, std::vector<int>> adjacency(const TreePartition& tp) {
  std::map<int, std::vector<int>> adj;
  for (int t : tp.nodes) adj[t];  // ensure isolated nodes appear
  for (auto [a, b] : tp.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& [t, ns] : adj) std::sort(ns.begin(), ns.end());
  return adj;
}

}  // namespace

PartitionCheck validate_tree_partition(const WeightedGraph& g, const TreePartition& tp) {
  if (tp.nodes.empty()) throw input_error("tree partition has no nodes");
  std::set<int> nodeset(tp.nodes.begin(), tp.nodes.end());
  if (nodeset.size() != tp.nodes.size())
    throw input_error("duplicate tree node id");
  for (int t : tp.nodes)
    if (!tp.bag.count(t)) throw input_error("tree node " + std::to_string(t) + " has no bag");
  if (tp.bag.size() != tp.nodes.size()) throw input_error("bag for undeclared tree node");
  for (auto [a, b] : tp.arcs) {
    if (!nodeset.count(a) || !nodeset.count(b))
      throw input_error("tree arc uses undeclared node");
    if (a == b) throw input_error("tree arc is a loop");
  }
  if (tp.arcs.size() + 1 != tp.nodes.size())
    throw input_error("tree has wrong edge count for a tree");
  // connectivity (with the edge count above, implies acyclic)
  auto adj = adjacency(tp);
  std::set<int> seen{tp.nodes.front()};
  std::queue<int> q;
  q.push(tp.nodes.front());
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    for (int u : adj[t])
      if (seen.insert(u).second) q.push(u);
  }
  if (seen.size() != tp.nodes.size()) throw input_error("tree is disconnected");
  if (tp.root != -1 && !nodeset.count(tp.root)) throw input_error("root is not a tree node");
  if (tp.pathdecomp && !tree_is_path(tp))
    throw input_error("declared path decomposition is not a path");

  // bags partition V(G)
  std::map<int, int> home;  // graph vertex -> tree node
  for (const auto& [t, b] : tp.bag)
    for (int v : b) {
      if (!g.has_vertex(v))
        throw input_error("bag contains unknown vertex " + std::to_string(v));
      if (!home.emplace(v, t).second)
        throw input_error("vertex " + std::to_string(v) + " appears in two bags");
    }
  for (int v : g.vertices)
    if (!home.count(v)) throw input_error("vertex " + std::to_string(v) + " is in no bag");

  // locality + crossing weights
  std::set<std::pair<int, int>> arcset;
  for (auto [a, b] : tp.arcs) {
    arcset.insert({a, b});
    arcset.insert({b, a});
  }
  std::map<std::pair<int, int>, long long> cross;
  for (const auto& e : g.edges) {
    int a = home[e.u], b = home[e.v];
    if (a == b) continue;
    if (!arcset.count({a, b}))
      throw input_error("edge " + std::to_string(e.id) + " spans non-adjacent bags");
    auto key = std::minmax(a, b);
    cross[{key.first, key.second}] += e.w;
  }

  PartitionCheck pc;
  for (const auto& [t, b] : tp.bag) {
    pc.max_bag = std::max(pc.max_bag, static_cast<int>(b.size()));
    pc.breadth = std::max(pc.breadth, static_cast<long long>(b.size()));
  }
  for (const auto& [arc, w] : cross) pc.breadth = std::max(pc.breadth, w);
  return pc;
}

bool tree_is_path(const TreePartition& tp) {
  auto adj = adjacency(tp);
  for (const auto& [t, ns] : adj)
    if (ns.size() > 2) return false;
  return true;
}

int validate_path_decomposition(const std::vector<int>& vertices,
                                const std::vector<std::pair<int, int>>& edges,
                                const TreePartition& tp) {
  if (tp.nodes.empty()) throw input_error("path decomposition has no bags");
  if (tp.arcs.size() + 1 != tp.nodes.size())
    throw input_error("wrong arc count for a path");
  if (!tree_is_path(tp)) throw input_error("decomposition tree is not a path");
  auto adj = adjacency(tp);
  // order the bags along the path, starting from the lower-id endpoint
  int start = -1;
  for (int t : tp.nodes)
    if (adj[t].size() <= 1 && (start == -1 || t < start)) start = t;
  std::vector<int> order{start};
  std::set<int> used{start};
  while (order.size() < tp.nodes.size()) {
    bool advanced = false;
    for (int u : adj[order.back()])
      if (used.insert(u).second) {
        order.push_back(u);
        advanced = true;
        break;
      }
    if (!advanced) throw input_error("path decomposition is disconnected");
  }
  std::map<int, std::pair<int, int>> span;  // vertex -> [first,last] bag position
  for (size_t i = 0; i < order.size(); ++i) {
    auto it = tp.bag.find(order[i]);
    if (it == tp.bag.end()) throw input_error("bag missing for a path node");
    for (int v : it->second) {
      auto s = span.find(v);
      if (s == span.end())
        span[v] = {static_cast<int>(i), static_cast<int>(i)};
      else
        s->second.second = static_cast<int>(i);
    }
  }
  for (int v : vertices)
    if (!span.count(v)) throw input_error("vertex " + std::to_string(v) + " is in no bag");
  for (const auto& [v, s] : span)
    for (int i = s.first; i <= s.second; ++i)
      if (!tp.bag.at(order[i]).count(v))
        throw input_error("bags of vertex " + std::to_string(v) + " are not contiguous");
  for (auto [u, v] : edges) {
    bool covered = false;
    for (const auto& [t, b] : tp.bag)
      if (b.count(u) && b.count(v)) {
        covered = true;
        break;
      }
    if (!covered) throw input_error("some edge lies in no bag");
  }
  int maxbag = 0;
  for (const auto& [t, b] : tp.bag) maxbag = std::max(maxbag, static_cast<int>(b.size()));
  return maxbag - 1;
}

RootedPartition root_partition(const TreePartition& tp, int root) {
  RootedPartition rp;
  rp.root = root != -1 ? root : (tp.root != -1 ? tp.root
                                               : *std::min_element(tp.nodes.begin(), tp.nodes.end()));
  auto adj = adjacency(tp);
  rp.parent[rp.root] = -1;
  std::vector<int> stack{rp.root};
  std::vector<int> order;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    order.push_back(t);
    rp.children[t];
    for (int u : adj[t]) {
      if (rp.parent.count(u)) continue;
      rp.parent[u] = t;
      rp.children[t].push_back(u);
      stack.push_back(u);
    }
  }
  for (auto& [t, cs] : rp.children) std::sort(cs.begin(), cs.end());
  rp.postorder.assign(order.rbegin(), order.rend());
  return rp;
}

}  // namespace gonflow
