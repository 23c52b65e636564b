#include "gonflow/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "gonflow/common.hpp"
#include "gonflow/flow.hpp"
#include "gonflow/ilp.hpp"

namespace gonflow {

namespace {

// Enumerates orientations in lexicographic order (edges ascending by id,
// forward as stored before reversed) and returns the first whose weighted
// outdegrees land inside [lo_v, hi_v] at every vertex.  Depth-first with
// sound interval pruning, so the result matches a plain scan of all 2^m
// orientations while skipping hopeless prefixes.
std::optional<Orientation> first_orientation(const WeightedGraph& g, int cap,
                                             const std::map<int, long long>& lo,
                                             const std::map<int, long long>& hi) {
  if (static_cast<int>(g.edges.size()) > cap)
    throw resource_error("orientation enumeration cap exceeded");
  for (int v : g.vertices) {
    // an isolated vertex is never touched by the search below, so the
    // degree-interval check must happen up front
    if (lo.at(v) > hi.at(v) || lo.at(v) > g.weighted_degree(v) || hi.at(v) < 0)
      return std::nullopt;
  }
  std::vector<WeightedEdge> edges = g.edges;
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  size_t m = edges.size();
  std::map<int, long long> out, rem;  // oriented-out weight, undecided incident weight
  for (int v : g.vertices) {
    out[v] = 0;
    rem[v] = g.weighted_degree(v);
  }
  Orientation o;
  auto feasible = [&](int v) { return out[v] <= hi.at(v) && out[v] + rem[v] >= lo.at(v); };
  std::function<bool(size_t)> dfs = [&](size_t i) -> bool {
    if (i == m) return true;
    const WeightedEdge& e = edges[i];
    rem[e.u] -= e.w;
    rem[e.v] -= e.w;
    for (int tail : {e.u, e.v}) {  // forward (as stored) first: lex order
      o.set(e, tail, e.other(tail));
      out[tail] += e.w;
      if (feasible(e.u) && feasible(e.v) && dfs(i + 1)) return true;
      out[tail] -= e.w;
    }
    o.forward.erase(e.id);
    rem[e.u] += e.w;
    rem[e.v] += e.w;
    return false;
  };
  if (dfs(0)) return o;
  return std::nullopt;
}

}  // namespace

std::optional<Orientation> oracle_oro(const OroInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return std::nullopt;
  std::map<int, long long> lo, hi;
  for (int v : inst.g.vertices) {
    lo[v] = inst.interval.at(v).lo;
    hi[v] = inst.interval.at(v).hi;
  }
  return first_orientation(inst.g, caps.edges, lo, hi);
}

std::optional<Orientation> oracle_too(const TooInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return std::nullopt;
  std::map<int, long long> lo, hi;
  for (int v : inst.g.vertices) lo[v] = hi[v] = inst.target.at(v);
  return first_orientation(inst.g, caps.edges, lo, hi);
}

std::optional<Orientation> oracle_cmo(const CmoInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return std::nullopt;
  std::map<int, long long> lo, hi;
  for (int v : inst.g.vertices) {
    lo[v] = 0;
    hi[v] = inst.bound.at(v);
  }
  return first_orientation(inst.g, caps.edges, lo, hi);
}

std::optional<Orientation> oracle_mmo(const MmoInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return std::nullopt;
  std::map<int, long long> lo, hi;
  for (int v : inst.g.vertices) {
    lo[v] = 0;
    hi[v] = inst.max_out;
  }
  return first_orientation(inst.g, caps.edges, lo, hi);
}

std::optional<Orientation> oracle_co(const CoInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return std::nullopt;
  std::map<int, long long> lo, hi;
  for (int v : inst.g.vertices) {
    long long d = inst.g.weighted_degree(v);
    lo[v] = (d + 1) / 2;  // lo > hi at odd weighted degree: immediate no
    hi[v] = d / 2;
  }
  return first_orientation(inst.g, caps.edges, lo, hi);
}

namespace {

bool flow_conserves(const FlowNetwork& net, const Flow& f, long long value) {
  std::map<int, long long> out;
  for (int v : net.nodes) out[v] = 0;
  for (const auto& a : net.arcs) {
    long long x = f.count(a.id) ? f.at(a.id) : 0;
    out[a.tail] += x;
    out[a.head] -= x;
  }
  for (int v : net.nodes) {
    long long want = v == net.source ? value : (v == net.sink ? -value : 0);
    if (out[v] != want) return false;
  }
  return true;
}

}  // namespace

std::optional<Flow> oracle_aonf_enum(const AonfInstance& inst, const OracleCaps& caps) {
  size_t m = inst.net.arcs.size();
  if (static_cast<int>(m) > caps.arcs)
    throw resource_error("arc subset enumeration cap exceeded");
  std::vector<Arc> arcs = inst.net.arcs;
  std::sort(arcs.begin(), arcs.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    Flow f;
    for (size_t i = 0; i < m; ++i) f[arcs[i].id] = (mask >> i & 1) ? arcs[i].cap : 0;
    if (flow_conserves(inst.net, f, inst.value)) return f;
  }
  return std::nullopt;
}

std::optional<Flow> oracle_aonf_ilp(const AonfInstance& inst) {
  IlpModel model;
  std::map<int, int> use;  // arc id -> variable
  for (const auto& a : inst.net.arcs)
    use[a.id] = model.add_var("u" + std::to_string(a.id), 0, 1);
  for (int v : inst.net.nodes) {
    std::vector<IlpTerm> terms;
    for (const auto& a : inst.net.arcs) {
      if (a.tail == v) terms.push_back({a.cap, use[a.id]});
      if (a.head == v) terms.push_back({-a.cap, use[a.id]});
    }
    long long want = v == inst.net.source ? inst.value : (v == inst.net.sink ? -inst.value : 0);
    model.add_con(std::move(terms), IlpRel::EQ, want);
  }
  IlpResult r = solve_ilp(model);
  if (r.status == IlpStatus::ResourceExceeded)
    throw resource_error("aonf ilp node budget exceeded");
  if (r.status != IlpStatus::Optimal) return std::nullopt;
  Flow f;
  for (const auto& a : inst.net.arcs) f[a.id] = r.values[use[a.id]] ? a.cap : 0;
  return f;
}

std::optional<Flow> oracle_aonf(const AonfInstance& inst, const OracleCaps& caps) {
  if (static_cast<int>(inst.net.arcs.size()) <= caps.arcs)
    return oracle_aonf_enum(inst, caps);
  return oracle_aonf_ilp(inst);
}

std::optional<UflbWitness> oracle_uflb(const UflbInstance& inst, const OracleCaps& caps) {
  if (static_cast<int>(inst.g.edges.size()) > caps.edges)
    throw resource_error("orientation enumeration cap exceeded");
  std::vector<WeightedEdge> edges = inst.g.edges;
  std::sort(edges.begin(), edges.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  size_t m = edges.size();
  for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
    Orientation o;
    FlowNetwork net;
    net.nodes = inst.g.vertices;
    net.source = inst.s;
    net.sink = inst.t;
    for (size_t i = 0; i < m; ++i) {
      const auto& e = edges[i];
      o.forward[e.id] = !(mask >> i & 1);
      long long l = inst.lower.count(e.id) ? inst.lower.at(e.id) : 0;
      net.arcs.push_back({e.id, o.tail_of(e), o.head_of(e), e.w, l});
    }
    auto f = exact_flow_with_lower_bounds(net, inst.value);
    if (f) {
      UflbWitness w;
      w.orientation = std::move(o);
      for (const auto& [id, x] : *f) w.flow[id] = x;
      return w;
    }
  }
  return std::nullopt;
}

namespace {

// Can `must` be assigned to neighbouring dominators within capacities?
std::optional<std::map<int, int>> assignment_via_matching(
    const WeightedGraph& g, const std::set<int>& dominators,
    const std::set<int>& must_in, const std::map<int, long long>& cap_in,
    const std::map<int, int>& mate = {}) {
  // Forced service first: a chosen dominator with a mate serves it directly.
  std::set<int> must = must_in;
  std::map<int, long long> cap = cap_in;
  std::map<int, int> forced;
  for (int d : dominators) {
    auto it = mate.find(d);
    if (it == mate.end()) continue;
    int m = it->second;
    if (forced.count(m)) return std::nullopt;  // two dominators claim one mate
    forced[m] = d;
    if (--cap[d] < 0) return std::nullopt;
    must.erase(m);
  }
  FlowNetwork net;
  int S = -1, T = -2;
  net.nodes = {S, T};
  net.source = S;
  net.sink = T;
  // node ids: dominators and targets share the graph's vertex ids; encode
  // targets as id + offset to keep them distinct
  int off = g.max_vertex_id() + 1;
  int next_arc = 1;
  for (int d : dominators) {
    net.nodes.push_back(d);
    net.arcs.push_back({next_arc++, S, d, cap.at(d)});
  }
  std::map<int, std::pair<int, int>> edge_arc;  // arc id -> (target, dominator)
  for (int v : must) {
    net.nodes.push_back(v + off);
    net.arcs.push_back({next_arc++, v + off, T, 1});
    for (const auto* e : g.incident_edges(v)) {
      int u = e->other(v);
      if (dominators.count(u)) {
        edge_arc[next_arc] = {v, u};
        net.arcs.push_back({next_arc++, u, v + off, 1});
      }
    }
  }
  auto mf = max_flow(net);
  if (mf.value != static_cast<long long>(must.size())) return std::nullopt;
  std::map<int, int> assign = forced;
  for (const auto& [id, tv] : edge_arc)
    if (mf.flow.count(id) && mf.flow.at(id) == 1) assign[tv.first] = tv.second;
  return assign;
}

// Enumerates subsets of `pool` by increasing size; returns the first D for
// which all of must(D) can be assigned.
DominationResult min_domination(const WeightedGraph& g, const std::vector<int>& pool,
                                const std::map<int, long long>& cap,
                                std::function<std::set<int>(const std::set<int>&)> must_of,
                                int cap_reds, const std::map<int, int>& mate = {}) {
  if (static_cast<int>(pool.size()) > cap_reds)
    throw resource_error("dominating-set enumeration cap exceeded");
  size_t n = pool.size();
  for (size_t size = 0; size <= n; ++size) {
    // fixed-popcount masks in increasing numeric order for determinism
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
      if (static_cast<size_t>(__builtin_popcountll(mask)) != size) continue;
      std::set<int> D;
      for (size_t i = 0; i < n; ++i)
        if (mask >> i & 1) D.insert(pool[i]);
      auto must = must_of(D);
      auto assign = assignment_via_matching(g, D, must, cap, mate);
      if (assign) {
        DominationResult r;
        r.feasible = true;
        r.size = static_cast<long long>(size);
        r.witness.dominators = std::move(D);
        r.witness.assign = std::move(*assign);
        return r;
      }
    }
  }
  return {};
}

}  // namespace

DominationResult oracle_crbds(const CrbdsInstance& inst, const OracleCaps& caps) {
  if (inst.trivial_no) return {};
  std::vector<int> pool(inst.red.begin(), inst.red.end());
  return min_domination(
      inst.g, pool, inst.cap, [&](const std::set<int>&) { return inst.blue; }, caps.reds,
      inst.mate);
}

DominationResult oracle_cds(const CdsInstance& inst, const OracleCaps& caps) {
  std::vector<int> pool = inst.g.vertices;
  std::sort(pool.begin(), pool.end());
  return min_domination(
      inst.g, pool, inst.cap,
      [&](const std::set<int>& D) {
        std::set<int> must;
        for (int v : inst.g.vertices)
          if (!D.count(v)) must.insert(v);
        return must;
      },
      caps.reds);
}

std::optional<std::vector<int>> oracle_binpacking(const BinPacking& bp,
                                                  const OracleCaps& caps) {
  bp.validate();
  if (static_cast<int>(bp.items.size()) > caps.items)
    throw resource_error("bin packing item cap exceeded");
  size_t n = bp.items.size();
  // sort indices by descending item size for pruning; emit original indexing
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return bp.items[a] > bp.items[b]; });
  std::vector<long long> load(bp.bins, 0);
  std::vector<int> assign(n, -1);
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == n) return true;
    int item = order[pos];
    for (int b = 0; b < bp.bins; ++b) {
      if (load[b] + bp.items[item] > bp.size) continue;
      load[b] += bp.items[item];
      assign[item] = b;
      if (rec(pos + 1)) return true;
      load[b] -= bp.items[item];
      assign[item] = -1;
      if (load[b] == 0) break;  // empty bins are interchangeable
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return assign;
}

std::optional<NnccmRun> oracle_nnccm(const NnccmMachine& m, const OracleCaps& caps) {
  m.validate();
  double states = static_cast<double>(std::max<size_t>(m.tests.size(), 1));
  for (int i = 0; i < m.counters; ++i) {
    states *= static_cast<double>(m.bound + 1);
    if (states > caps.nnccm_states) throw resource_error("nnccm search cap exceeded");
  }
  size_t n = m.tests.size();
  if (n == 0) return NnccmRun{};
  // memoized DFS over (test index, counter vector)
  std::set<std::pair<size_t, std::vector<long long>>> dead;
  std::vector<std::vector<long long>> chosen;
  std::function<bool(size_t, std::vector<long long>)> rec =
      [&](size_t t, std::vector<long long> c) -> bool {
    if (t == n) return true;
    if (dead.count({t, c})) return false;
    const auto& test = m.tests[t];
    // raise the participating counters over all options; others need not move
    // before this test (raising them can be deferred), so branch only on the
    // two tested counters
    int ci = test.i - 1, cj = test.j - 1;
    std::vector<int> vars = ci == cj ? std::vector<int>{ci} : std::vector<int>{ci, cj};
    std::function<bool(size_t)> pick = [&](size_t vi) -> bool {
      if (vi == vars.size()) {
        bool fire_i = c[ci] == test.a;
        bool fire_j = c[cj] == test.b;
        if (fire_i && fire_j) return false;
        chosen.push_back(c);
        if (rec(t + 1, c)) return true;
        chosen.pop_back();
        return false;
      }
      long long from = c[vars[vi]];
      for (long long x = from; x <= m.bound; ++x) {
        c[vars[vi]] = x;
        if (pick(vi + 1)) return true;
      }
      c[vars[vi]] = from;
      return false;
    };
    if (pick(0)) return true;
    dead.insert({t, std::move(c)});
    return false;
  };
  if (!rec(0, std::vector<long long>(m.counters, 0))) return std::nullopt;
  NnccmRun run;
  run.values = std::move(chosen);
  return run;
}

}  // namespace gonflow
