#include "gonflow/oro_dp.hpp"

#include <algorithm>
#include <stdexcept>

#include "gonflow/ilp.hpp"

namespace gonflow {

namespace {

using Fp = std::vector<long long>;  // fingerprint values over a sorted bag
using Table = std::set<Fp>;

struct ChildClass {
  std::vector<int> members;  // child node ids, ascending
  std::vector<Fp> fps;       // the shared table, in canonical order
};

struct Dp {
  const OroInstance& inst;
  const OroDpOptions& opts;
  TreePartition tree;
  RootedPartition rooted;
  long long k = 0;

  std::map<int, std::vector<int>> bagv;  // node -> sorted bag vertices
  // Arcs are keyed by their lower endpoint (every non-root node has exactly
  // one parent arc).
  std::map<int, std::vector<const WeightedEdge*>> local;  // L_a, ascending ids
  std::map<int, std::vector<ChildClass>> classes;
  std::map<int, Table> table;

  explicit Dp(const OroInstance& i, TreePartition t, const OroDpOptions& o, long long breadth)
      : inst(i), opts(o), tree(std::move(t)), k(breadth) {
    rooted = root_partition(tree, tree.root);
    for (const auto& [n, b] : tree.bag) bagv[n] = std::vector<int>(b.begin(), b.end());
    std::map<int, int> bag_of;
    for (const auto& [n, b] : tree.bag)
      for (int v : b) bag_of[v] = n;
    for (const auto& e : inst.g.edges) {
      int a = bag_of.at(e.u), b = bag_of.at(e.v);
      if (a == b) {
        local[a].push_back(&e);  // inside bag a: local to a's parent arc
      } else {
        // crossing edge: local to the arc between the two bags
        int lower = rooted.parent.at(a) == b ? a : b;
        local[lower].push_back(&e);
      }
    }
    for (auto& [n, es] : local)
      std::sort(es.begin(), es.end(),
                [](const WeightedEdge* x, const WeightedEdge* y) { return x->id < y->id; });
  }

  const Interval& interval(int v) const { return inst.interval.at(v); }

  // Orientation of the arc-local edges: bit j set = edge j reversed (v->u).
  void apply(int node, unsigned long long mask, std::map<int, long long>& outw) const {
    auto it = local.find(node);
    if (it == local.end()) return;
    const auto& es = it->second;
    for (size_t j = 0; j < es.size(); ++j) {
      int tail = (mask >> j & 1) ? es[j]->v : es[j]->u;
      outw[tail] += es[j]->w;
    }
  }

  Fp fingerprint(int node, const std::map<int, long long>& outw) const {
    const auto& pb = bagv.at(rooted.parent.at(node));
    Fp f;
    f.reserve(pb.size());
    for (int v : pb) {
      auto it = outw.find(v);
      long long x = it == outw.end() ? 0 : it->second;
      if (x < 0 || x > k)
        throw std::logic_error("fingerprint value outside [0,k]");  // contract check
      f.push_back(x);
    }
    return f;
  }

  // Feasibility of extending the local orientation with per-class child
  // fingerprint counts; fills `counts` (indexed like classes/fps) on success.
  bool extendable(int node, const std::map<int, long long>& outw,
                  std::vector<std::vector<long long>>* counts) const {
    const auto& bag = bagv.at(node);
    const auto& cls = classes.count(node) ? classes.at(node) : std::vector<ChildClass>{};
    if (cls.empty()) {
      for (int v : bag) {
        auto it = outw.find(v);
        if (!interval(v).contains(it == outw.end() ? 0 : it->second)) return false;
      }
      if (counts) counts->clear();
      return true;
    }
    IlpModel m;
    std::vector<std::vector<int>> var;  // [class][fp] -> variable index
    for (const auto& c : cls) {
      var.emplace_back();
      for (size_t fi = 0; fi < c.fps.size(); ++fi)
        var.back().push_back(
            m.add_var("g", 0, static_cast<long long>(c.members.size())));
    }
    for (size_t ci = 0; ci < cls.size(); ++ci) {
      std::vector<IlpTerm> terms;
      for (int vi : var[ci]) terms.push_back({1, vi});
      m.add_con(terms, IlpRel::EQ, static_cast<long long>(cls[ci].members.size()));
    }
    for (size_t p = 0; p < bag.size(); ++p) {
      int v = bag[p];
      auto it = outw.find(v);
      long long alpha = it == outw.end() ? 0 : it->second;
      std::vector<IlpTerm> terms;
      for (size_t ci = 0; ci < cls.size(); ++ci)
        for (size_t fi = 0; fi < cls[ci].fps.size(); ++fi)
          if (cls[ci].fps[fi][p] != 0) terms.push_back({cls[ci].fps[fi][p], var[ci][fi]});
      const Interval& d = interval(v);
      m.add_con(terms, IlpRel::GE, d.lo - alpha);
      m.add_con(terms, IlpRel::LE, d.hi - alpha);
    }
    auto res = solve_ilp(m, opts.ilp_node_budget);
    if (res.status == IlpStatus::ResourceExceeded)
      throw resource_error("ILP node budget exceeded in the orientation solver");
    if (res.status != IlpStatus::Optimal) return false;
    if (counts) {
      counts->clear();
      for (size_t ci = 0; ci < cls.size(); ++ci) {
        counts->emplace_back();
        for (int vi : var[ci]) counts->back().push_back(res.values[vi]);
      }
    }
    return true;
  }

  unsigned long long mask_count(int node) const {
    auto it = local.find(node);
    size_t m = it == local.end() ? 0 : it->second.size();
    if (m >= 63 || (1LL << m) > opts.max_arc_orientations)
      throw resource_error("per-arc orientation enumeration cap exceeded");
    return 1ULL << m;
  }

  void compute_arc(int node) {
    // Group children by table equality.
    std::map<Table, std::vector<int>> groups;
    bool dead = false;
    for (int c : rooted.children.at(node)) {
      const Table& t = table.at(c);
      if (t.empty()) dead = true;
      groups[t].push_back(c);
    }
    std::vector<ChildClass> cls;
    for (const auto& [t, members] : groups)
      cls.push_back({members, std::vector<Fp>(t.begin(), t.end())});
    classes[node] = std::move(cls);

    Table& out = table[node];
    if (dead) return;  // a child with no partial solutions kills the arc
    unsigned long long total = mask_count(node);
    for (unsigned long long mask = 0; mask < total; ++mask) {
      std::map<int, long long> outw;
      apply(node, mask, outw);
      Fp f = fingerprint(node, outw);
      if (out.count(f)) continue;  // fingerprint already realized
      if (extendable(node, outw, nullptr)) out.insert(f);
    }
  }

  // Top-down witness replay: find the lexicographically first local
  // orientation matching the required fingerprint, then hand each child the
  // fingerprint its class was allotted.
  void emit(int node, const Fp& need, Orientation& o) const {
    unsigned long long total = mask_count(node);
    for (unsigned long long mask = 0; mask < total; ++mask) {
      std::map<int, long long> outw;
      apply(node, mask, outw);
      if (fingerprint(node, outw) != need) continue;
      std::vector<std::vector<long long>> counts;
      if (!extendable(node, outw, &counts)) continue;
      auto it = local.find(node);
      if (it != local.end()) {
        const auto& es = it->second;
        for (size_t j = 0; j < es.size(); ++j) {
          int tail = (mask >> j & 1) ? es[j]->v : es[j]->u;
          o.set(*es[j], tail, es[j]->other(tail));
        }
      }
      const auto& cls = classes.count(node) ? classes.at(node) : std::vector<ChildClass>{};
      for (size_t ci = 0; ci < cls.size(); ++ci) {
        size_t next = 0;
        for (size_t fi = 0; fi < cls[ci].fps.size(); ++fi)
          for (long long n = 0; n < counts[ci][fi]; ++n)
            emit(cls[ci].members[next++], cls[ci].fps[fi], o);
        if (next != cls[ci].members.size())
          throw std::logic_error("blueprint counts do not cover the class");
      }
      return;
    }
    throw std::logic_error("witness replay found no matching orientation");
  }
};

}  // namespace

PreprocessedOro preprocess_oro(const OroInstance& in, const TreePartition& tp,
                               const OroDpOptions& opts) {
  in.validate();
  auto chk = validate_tree_partition(in.g, tp);
  if (chk.breadth > opts.max_breadth)
    throw resource_error("partition breadth " + std::to_string(chk.breadth) +
                         " exceeds the configured limit " + std::to_string(opts.max_breadth));
  PreprocessedOro p;
  p.inst = in;
  p.breadth = chk.breadth;
  for (const auto& [v, e] : in.subdiv_origin) {
    auto inc = in.g.incident_edges(v);
    if (inc.size() != 2 || inc[0]->w != inc[1]->w)
      throw input_error("subdivision vertex " + std::to_string(v) +
                        " must have two incident edges of equal weight");
    p.inst.interval[v] = {inc[0]->w, inc[0]->w};
  }
  p.tree = tp;
  int old_root = tp.root != -1 ? tp.root : *std::min_element(tp.nodes.begin(), tp.nodes.end());
  if (!p.tree.has_node(old_root)) throw input_error("root is not a tree node");
  int new_root = 0;
  for (int n : tp.nodes) new_root = std::max(new_root, n + 1);
  p.tree.nodes.push_back(new_root);
  p.tree.arcs.emplace_back(new_root, old_root);
  p.tree.bag[new_root] = {};
  p.tree.root = new_root;
  return p;
}

OroResult solve_oro(const OroInstance& in, const TreePartition& tp, const OroDpOptions& opts) {
  if (in.trivial_no) return {};
  auto pre = preprocess_oro(in, tp, opts);
  Dp dp(pre.inst, pre.tree, opts, pre.breadth);
  for (int node : dp.rooted.postorder)
    if (node != dp.rooted.root) dp.compute_arc(node);
  int top = dp.rooted.children.at(dp.rooted.root).front();
  if (dp.table.at(top).empty()) return {};
  OroResult r;
  r.yes = true;
  dp.emit(top, Fp{}, r.orientation);
  // Defensive final check: the replayed orientation must be good.
  auto outs = weighted_outdegrees(pre.inst.g, r.orientation);
  for (int v : pre.inst.g.vertices)
    if (!pre.inst.interval.at(v).contains(outs.at(v)))
      throw std::logic_error("replayed witness violates an interval");
  return r;
}

FamilyResult solve_family(const AnyInstance& inst, const TreePartition& tp,
                          const OroDpOptions& opts) {
  FamilyResult out;
  auto via_oro = [&](const OroInstance& lifted, const TreePartition& t) {
    if (lifted.trivial_no) return OroResult{};
    return solve_oro(lifted, t, opts);
  };
  switch (problem_of(inst)) {
    case Problem::ORO: {
      auto r = solve_oro(std::get<OroInstance>(inst), tp, opts);
      out.yes = r.yes;
      if (r.yes) out.witness = std::move(r.orientation);
      return out;
    }
    case Problem::TOO:
    case Problem::CMO:
    case Problem::MMO:
    case Problem::CO: {
      OroInstance lifted = std::visit(
          [](const auto& x) -> OroInstance {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, TooInstance> || std::is_same_v<T, CmoInstance> ||
                          std::is_same_v<T, MmoInstance> || std::is_same_v<T, CoInstance>)
              return lift_to_oro(x);
            else
              throw input_error("unreachable");
          },
          inst);
      auto r = via_oro(lifted, tp);
      out.yes = r.yes;
      if (r.yes) out.witness = std::move(r.orientation);  // same graph, same edge ids
      return out;
    }
    case Problem::UFLB: {
      const auto& u = std::get<UflbInstance>(inst);
      auto red = uflb_to_co(u, tp);
      if (red.early_no) return out;
      auto r = via_oro(lift_to_oro(red.out), red.partition);
      out.yes = r.yes;
      if (r.yes) out.witness = uflb_witness_from_co(red, u, r.orientation);
      return out;
    }
    case Problem::AONF: {
      const auto& a = std::get<AonfInstance>(inst);
      auto red = aonf_to_too(a);
      auto t = transport_partition_aonf(red, a, tp);
      auto r = via_oro(lift_to_oro(red.out), t);
      out.yes = r.yes;
      if (r.yes) out.witness = aonf_flow_from_too(red, a, r.orientation);
      return out;
    }
    default:
      throw input_error("domination problems are handled by the domination solver");
  }
}

}  // namespace gonflow
