#include "gonflow/reductions.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gonflow {

OroInstance trivial_no_oro() {
  OroInstance x;
  x.g.vertices = {1};
  x.interval[1] = {1, 1};  // a lone vertex has outdegree 0
  x.trivial_no = true;
  return x;
}

TooInstance trivial_no_too() {
  TooInstance x;
  x.g.vertices = {1};
  x.target[1] = 1;
  x.trivial_no = true;
  return x;
}

CmoInstance trivial_no_cmo() {
  CmoInstance x;
  x.g.vertices = {1};
  x.bound[1] = -1;  // outdegree 0 > -1
  x.trivial_no = true;
  return x;
}

CoInstance trivial_no_co() {
  CoInstance x;
  x.g.vertices = {1};
  x.trivial_no = true;
  return x;
}

OroInstance lift_to_oro(const TooInstance& in) {
  OroInstance out;
  out.g = in.g;
  for (const auto& [v, d] : in.target) out.interval[v] = {d, d};
  out.subdiv_origin = in.subdiv_origin;
  out.trivial_no = in.trivial_no;
  return out;
}

OroInstance lift_to_oro(const CmoInstance& in) {
  OroInstance out;
  out.g = in.g;
  for (const auto& [v, m] : in.bound) out.interval[v] = {0, m};
  out.subdiv_origin = in.subdiv_origin;
  out.trivial_no = in.trivial_no;
  return out;
}

OroInstance lift_to_oro(const MmoInstance& in) {
  OroInstance out;
  out.g = in.g;
  for (int v : in.g.vertices) out.interval[v] = {0, in.max_out};
  out.subdiv_origin = in.subdiv_origin;
  out.trivial_no = in.trivial_no;
  return out;
}

OroInstance lift_to_oro(const CoInstance& in) {
  if (in.trivial_no) return trivial_no_oro();
  for (int v : in.g.vertices)
    if (in.g.weighted_degree(v) % 2 != 0) return trivial_no_oro();
  OroInstance out;
  out.g = in.g;
  for (int v : in.g.vertices) {
    long long h = in.g.weighted_degree(v) / 2;
    out.interval[v] = {h, h};
  }
  out.subdiv_origin = in.subdiv_origin;
  return out;
}

AonfToToo aonf_to_too(const AonfInstance& in) {
  AonfToToo r;
  const FlowNetwork& net = in.net;
  for (const auto& a : net.arcs)
    if (a.tail == a.head) throw input_error("loop arcs are not supported");

  // beta_v: total capacity of arcs into v
  std::map<int, long long> beta;
  for (int v : net.nodes) beta[v] = 0;
  for (const auto& a : net.arcs) beta[a.head] += a.cap;

  WeightedGraph& g = r.out.g;
  g.vertices = net.nodes;
  int next_v = net.max_node_id() + 1;
  int next_e = 1;
  std::vector<Arc> arcs = net.arcs;
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) { return x.id < y.id; });
  for (const auto& a : arcs) {
    int mid = next_v++;
    g.vertices.push_back(mid);
    int e1 = next_e++, e2 = next_e++;
    g.edges.push_back({e1, a.tail, mid, a.cap});
    g.edges.push_back({e2, mid, a.head, a.cap});
    r.out.target[mid] = a.cap;  // doubled beta_mid / 2 = cap/2 * 2
    r.out.subdiv_origin[mid] = a.id;
    r.arc_image[a.id] = {mid, e1, e2};
  }
  for (int v : net.nodes) {
    long long d = beta[v];  // doubled beta_v / 2
    if (v == net.source) d += in.value;
    if (v == net.sink) d -= in.value;
    r.out.target[v] = d;
  }
  return r;
}

TreePartition transport_partition_aonf(const AonfToToo& red, const AonfInstance& in,
                                       const TreePartition& tp) {
  std::map<int, int> bag_of;
  for (const auto& [t, b] : tp.bag)
    for (int v : b) bag_of[v] = t;

  TreePartition out = tp;
  out.pathdecomp = false;
  int next_node = 0;
  for (int t : tp.nodes) next_node = std::max(next_node, t + 1);
  std::map<std::pair<int, int>, int> arc_mid;  // normalized tree arc -> inserted node

  for (const auto& a : in.net.arcs) {
    auto bu = bag_of.find(a.tail);
    auto bv = bag_of.find(a.head);
    if (bu == bag_of.end() || bv == bag_of.end())
      throw input_error("partition does not cover the network nodes");
    int mid = red.arc_image.at(a.id).mid;
    if (bu->second == bv->second) {
      out.bag[bu->second].insert(mid);
      continue;
    }
    auto key = std::minmax(bu->second, bv->second);
    auto it = arc_mid.find(key);
    if (it == arc_mid.end()) {
      auto pos = std::find_if(out.arcs.begin(), out.arcs.end(), [&](auto& e) {
        return std::minmax(e.first, e.second) == key;
      });
      if (pos == out.arcs.end())
        throw input_error("arc endpoints lie in non-adjacent bags");
      int n = next_node++;
      *pos = {key.first, n};
      out.arcs.emplace_back(n, key.second);
      out.nodes.push_back(n);
      out.bag[n] = {};
      it = arc_mid.emplace(key, n).first;
    }
    out.bag[it->second].insert(mid);
  }
  return out;
}

Flow aonf_flow_from_too(const AonfToToo& red, const AonfInstance& in, const Orientation& o) {
  Flow f;
  for (const auto& a : in.net.arcs) {
    const auto& img = red.arc_image.at(a.id);
    const WeightedEdge* e1 = red.out.g.edge_by_id(img.half_tail);
    f[a.id] = o.tail_of(*e1) == a.tail ? a.cap : 0;
  }
  return f;
}

Orientation too_orientation_from_aonf(const AonfToToo& red, const AonfInstance& in,
                                      const Flow& f) {
  Orientation o;
  for (const auto& a : in.net.arcs) {
    auto it = f.find(a.id);
    long long x = it == f.end() ? 0 : it->second;
    if (x != 0 && x != a.cap) throw input_error("flow is not all-or-nothing");
    const auto& img = red.arc_image.at(a.id);
    const WeightedEdge* e1 = red.out.g.edge_by_id(img.half_tail);
    const WeightedEdge* e2 = red.out.g.edge_by_id(img.half_head);
    if (x == a.cap) {
      o.set(*e1, a.tail, img.mid);
      o.set(*e2, img.mid, a.head);
    } else {
      o.set(*e1, img.mid, a.tail);
      o.set(*e2, a.head, img.mid);
    }
  }
  return o;
}

TooToCo too_to_co(const TooInstance& in) {
  TooToCo r;
  if (in.trivial_no) {
    r.out = trivial_no_co();
    return r;
  }
  std::map<int, long long> demand;
  long long alpha2 = 0;  // sum of |demands|
  for (int v : in.g.vertices) {
    long long d = in.g.weighted_degree(v) - 2 * in.target.at(v);
    demand[v] = d;
    alpha2 += d < 0 ? -d : d;
  }
  r.out.g = in.g;
  r.out.subdiv_origin = in.subdiv_origin;
  if (alpha2 == 0) return r;  // already balanced; s, t omitted

  long long alpha = alpha2 / 2;
  r.s = in.g.max_vertex_id() + 1;
  r.t = r.s + 1;
  r.out.g.vertices.push_back(r.s);
  r.out.g.vertices.push_back(r.t);
  int next_e = in.g.max_edge_id() + 1;
  r.ts_edge = next_e;
  r.out.g.edges.push_back({next_e++, r.t, r.s, alpha});
  for (int v : in.g.vertices) {
    long long d = demand[v];
    if (d < 0)
      r.out.g.edges.push_back({next_e++, r.s, v, -d});
    else if (d > 0)
      r.out.g.edges.push_back({next_e++, v, r.t, d});
  }
  return r;
}

Orientation too_orientation_from_co(const TooToCo& red, const TooInstance& in,
                                    const Orientation& o) {
  bool flip = false;
  if (red.ts_edge != -1) {
    const WeightedEdge* ts = red.out.g.edge_by_id(red.ts_edge);
    flip = o.tail_of(*ts) == red.s;  // reversed circulations are symmetric
  }
  Orientation r;
  for (const auto& e : in.g.edges) {
    int tail = o.tail_of(*red.out.g.edge_by_id(e.id));
    int head = e.other(tail);
    if (flip) std::swap(tail, head);
    r.set(e, tail, head);
  }
  return r;
}

CmoInstance too_to_cmo(const TooInstance& in) {
  if (in.trivial_no) return trivial_no_cmo();
  long long sw = in.g.total_weight(), sd = 0;
  for (int v : in.g.vertices) sd += in.target.at(v);
  if (sw != sd) return trivial_no_cmo();
  CmoInstance out;
  out.g = in.g;
  for (const auto& [v, d] : in.target) out.bound[v] = d;
  out.subdiv_origin = in.subdiv_origin;
  return out;
}

UflbToCo uflb_to_co(const UflbInstance& in, const TreePartition& tp) {
  UflbToCo r;
  auto chk = validate_tree_partition(in.g, tp);
  long long k = chk.breadth;

  std::map<int, int> bag_of;
  for (const auto& [t, b] : tp.bag)
    for (int v : b) bag_of[v] = t;
  int bs = bag_of.at(in.s), bt = bag_of.at(in.t);

  // Adjacency of the input tree, for routing and the cut certificate.
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : tp.arcs) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto tree_path = [&](int from, int to) {
    std::map<int, int> prev;
    std::deque<int> q{from};
    prev[from] = from;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      if (x == to) break;
      for (int y : adj[x])
        if (!prev.count(y)) {
          prev[y] = x;
          q.push_back(y);
        }
    }
    std::vector<int> path{to};
    while (path.back() != from) path.push_back(prev.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
  };

  if (in.value > 0 && bs != bt && in.value > k) {
    // All s-t paths cross the first tree arc towards t; the edges crossing it
    // have total capacity at most the breadth, so no flow of value R exists.
    r.early_no = true;
    auto path = tree_path(bs, bt);
    int nb = path[1];
    for (const auto& e : in.g.edges) {
      int a = bag_of.at(e.u), b = bag_of.at(e.v);
      if (std::minmax(a, b) == std::minmax(bs, nb)) r.cut_edges.push_back(e.id);
    }
    r.out = trivial_no_co();
    r.partition = tp;
    return r;
  }

  // Final tree skeleton: subdivide every tree arc once up front, so crossing
  // subdivision vertices and the s-t chain have bags to live in.
  TreePartition P;
  P.nodes = tp.nodes;
  P.bag = tp.bag;
  P.root = tp.root;
  int next_node = 0;
  for (int t : tp.nodes) next_node = std::max(next_node, t + 1);
  std::map<std::pair<int, int>, int> arc_mid;
  std::map<int, std::vector<int>> padj;  // adjacency of the subdivided tree
  for (auto [a, b] : tp.arcs) {
    int n = next_node++;
    P.nodes.push_back(n);
    P.bag[n] = {};
    P.arcs.emplace_back(a, n);
    P.arcs.emplace_back(n, b);
    arc_mid[std::minmax(a, b)] = n;
    padj[a].push_back(n);
    padj[n].push_back(a);
    padj[n].push_back(b);
    padj[b].push_back(n);
  }

  WeightedGraph& g = r.out.g;
  g.vertices = in.g.vertices;
  int next_v = in.g.max_vertex_id() + 1;
  int next_e = 1;
  auto add_edge = [&](int u, int v, long long w) {
    g.edges.push_back({next_e, u, v, w});
    return next_e++;
  };

  for (const auto& e : in.g.edges) {
    long long c = e.w;
    long long l = in.lower.count(e.id) ? in.lower.at(e.id) : 0;
    int bu = bag_of.at(e.u), bv = bag_of.at(e.v);
    UflbToCo::EdgeImage img;

    // heavy parallel edge, weight (c+l)/2, carried doubled as c+l
    int hm = next_v++;
    g.vertices.push_back(hm);
    r.out.subdiv_origin[hm] = e.id;
    img.heavy = {add_edge(e.u, hm, c + l), add_edge(hm, e.v, c + l)};
    if (bu == bv)
      P.bag[bu].insert(hm);
    else
      P.bag[arc_mid.at(std::minmax(bu, bv))].insert(hm);

    // c-l light edges of weight 1/2, carried doubled as 1
    for (long long q = 0; q < c - l; ++q) {
      int lm = next_v++;
      g.vertices.push_back(lm);
      r.out.subdiv_origin[lm] = e.id;
      img.lights.push_back({add_edge(e.u, lm, 1), add_edge(lm, e.v, 1)});
      if (bu == bv) {
        int leaf = next_node++;
        P.nodes.push_back(leaf);
        P.bag[leaf] = {lm};
        P.arcs.emplace_back(bu, leaf);
      } else {
        P.bag[arc_mid.at(std::minmax(bu, bv))].insert(lm);
      }
    }
    r.edge_image[e.id] = std::move(img);
  }

  if (in.value > 0) {
    // Return edge with lower bound = capacity = R: heavy weight R (doubled
    // 2R), no lights.  Its chain is routed along the tree path from s to t,
    // one subdivision vertex per intermediate node.
    r.has_st = true;
    int st_origin = in.g.max_edge_id() + 1;  // pseudo edge id for provenance
    if (bs == bt) {
      int m = next_v++;
      g.vertices.push_back(m);
      r.out.subdiv_origin[m] = st_origin;
      P.bag[bs].insert(m);
      r.st_image.heavy = {add_edge(in.s, m, 2 * in.value), add_edge(m, in.t, 2 * in.value)};
    } else {
      // path in the subdivided tree
      std::map<int, int> prev;
      std::deque<int> q{bs};
      prev[bs] = bs;
      while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        if (x == bt) break;
        for (int y : padj[x])
          if (!prev.count(y)) {
            prev[y] = x;
            q.push_back(y);
          }
      }
      std::vector<int> path{bt};
      while (path.back() != bs) path.push_back(prev.at(path.back()));
      std::reverse(path.begin(), path.end());
      int last = in.s;
      for (size_t i = 1; i + 1 < path.size(); ++i) {
        int m = next_v++;
        g.vertices.push_back(m);
        r.out.subdiv_origin[m] = st_origin;
        P.bag[path[i]].insert(m);
        r.st_image.heavy.push_back(add_edge(last, m, 2 * in.value));
        last = m;
      }
      r.st_image.heavy.push_back(add_edge(last, in.t, 2 * in.value));
    }
  }

  r.partition = std::move(P);
  return r;
}

UflbWitness uflb_witness_from_co(const UflbToCo& red, const UflbInstance& in,
                                 const Orientation& o) {
  if (red.early_no) throw input_error("no witness exists for a rejected instance");
  bool flip = false;
  if (red.has_st) {
    const WeightedEdge* first = red.out.g.edge_by_id(red.st_image.heavy.front());
    // The chain runs s -> t exactly when its first edge leaves s; reversing a
    // circulation is harmless, so normalise to the return edge pointing t->s.
    flip = o.tail_of(*first) == in.s;
  }
  UflbWitness w;
  for (const auto& e : in.g.edges) {
    const auto& img = red.edge_image.at(e.id);
    const WeightedEdge* h1 = red.out.g.edge_by_id(img.heavy.front());
    bool heavy_uv = o.tail_of(*h1) == e.u;
    long long l = in.lower.count(e.id) ? in.lower.at(e.id) : 0;
    long long gamma = 0;
    for (const auto& pair : img.lights) {
      const WeightedEdge* l1 = red.out.g.edge_by_id(pair[0]);
      bool light_uv = o.tail_of(*l1) == e.u;
      if (light_uv == heavy_uv) ++gamma;
    }
    bool dir_uv = heavy_uv != flip;
    w.orientation.set(e, dir_uv ? e.u : e.v, dir_uv ? e.v : e.u);
    w.flow[e.id] = l + gamma;
  }
  return w;
}

CdsToCrbds cds_to_crbds(const CdsInstance& in) {
  CdsToCrbds r;
  int off = in.g.max_vertex_id() + 1;
  std::vector<int> vs = in.g.vertices;
  std::sort(vs.begin(), vs.end());
  int next_e = 1;
  for (int v : vs) {
    int rv = v, bv = v + off;
    r.red_of[v] = rv;
    r.blue_of[v] = bv;
    r.out.g.vertices.push_back(rv);
    r.out.g.vertices.push_back(bv);
    r.out.red.insert(rv);
    r.out.blue.insert(bv);
    r.out.cap[rv] = in.cap.at(v) + 1;
    r.out.mate[rv] = bv;
    r.out.g.edges.push_back({next_e++, rv, bv, 1});
  }
  for (const auto& e : in.g.edges) {
    r.out.g.edges.push_back({next_e++, r.red_of.at(e.u), r.blue_of.at(e.v), 1});
    r.out.g.edges.push_back({next_e++, r.red_of.at(e.v), r.blue_of.at(e.u), 1});
  }
  r.out.budget = in.budget;
  return r;
}

TreePartition transport_partition_cds(const CdsToCrbds& red, const TreePartition& tp) {
  TreePartition out = tp;
  out.pathdecomp = false;
  for (auto& [t, b] : out.bag) {
    std::set<int> nb;
    for (int v : b) {
      nb.insert(red.red_of.at(v));
      nb.insert(red.blue_of.at(v));
    }
    b = std::move(nb);
  }
  return out;
}

DominationWitness cds_witness_from_crbds(const CdsToCrbds& red, const CdsInstance& in,
                                         const DominationWitness& w) {
  std::map<int, int> vertex_of_red, vertex_of_blue;
  for (const auto& [v, rv] : red.red_of) vertex_of_red[rv] = v;
  for (const auto& [v, bv] : red.blue_of) vertex_of_blue[bv] = v;
  DominationWitness r;
  for (int d : w.dominators) r.dominators.insert(vertex_of_red.at(d));
  for (const auto& [b, d] : w.assign) {
    int v = vertex_of_blue.at(b);
    if (r.dominators.count(v)) continue;  // chosen vertices cover themselves
    r.assign[v] = vertex_of_red.at(d);
  }
  return r;
}

}  // namespace gonflow
