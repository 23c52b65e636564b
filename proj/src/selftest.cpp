#include "gonflow/selftest.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gonflow/cds_dp.hpp"
#include "gonflow/common.hpp"
#include "gonflow/hardness.hpp"
#include "gonflow/ilp.hpp"
#include "gonflow/instance.hpp"
#include "gonflow/morphism.hpp"
#include "gonflow/oracles.hpp"
#include "gonflow/oro_dp.hpp"
#include "gonflow/reductions.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

namespace {

using Rng = std::mt19937;

int ri(Rng& rng, int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng); }

// ---------------------------------------------------------------------------
// Random corpora

// Connected simple graph on vertices 1..n: random spanning tree plus extras.
WeightedGraph rand_graph(Rng& rng, int n, int maxw) {
  WeightedGraph g;
  for (int v = 1; v <= n; ++v) g.vertices.push_back(v);
  int id = 1;
  for (int v = 2; v <= n; ++v)
    g.edges.push_back({id++, ri(rng, 1, v - 1), v, (long long)ri(rng, 1, maxw)});
  int extra = ri(rng, 0, n);
  for (int t = 0; t < extra; ++t) {
    int u = ri(rng, 1, n), v = ri(rng, 1, n);
    if (u == v || g.edge_between(u, v)) continue;
    g.edges.push_back({id++, u, v, (long long)ri(rng, 1, maxw)});
  }
  return g;
}

// Breadth-first-layer tree partition (a path of bags).
TreePartition layers(const WeightedGraph& g, int src) {
  std::map<int, int> depth;
  depth[src] = 0;
  std::vector<int> q{src};
  for (size_t h = 0; h < q.size(); ++h)
    for (const auto* e : g.incident_edges(q[h])) {
      int o = e->other(q[h]);
      if (!depth.count(o)) {
        depth[o] = depth[q[h]] + 1;
        q.push_back(o);
      }
    }
  int maxd = 0;
  for (auto& [v, d] : depth) maxd = std::max(maxd, d);
  TreePartition tp;
  for (int d = 0; d <= maxd; ++d) {
    tp.nodes.push_back(d + 1);
    tp.bag[d + 1];
    if (d) tp.arcs.emplace_back(d, d + 1);
  }
  for (auto& [v, d] : depth) tp.bag[d + 1].insert(v);
  return tp;
}

// Connected red-blue bipartite graph: reds 1..r, blues r+1..r+b, random
// capacities in 1..3 and budget in 0..r.
CrbdsInstance rand_crbds(Rng& rng, int r, int b) {
  CrbdsInstance in;
  for (int v = 1; v <= r + b; ++v) in.g.vertices.push_back(v);
  for (int v = 1; v <= r; ++v) {
    in.red.insert(v);
    in.cap[v] = ri(rng, 1, 3);
  }
  for (int v = r + 1; v <= r + b; ++v) in.blue.insert(v);
  int id = 1;
  std::vector<int> placedR{1}, placedB;
  std::vector<int> rest;
  for (int v = 2; v <= r; ++v) rest.push_back(v);
  for (int v = r + 1; v <= r + b; ++v) rest.push_back(v);
  std::shuffle(rest.begin(), rest.end(), rng);
  for (size_t q = 0; q < rest.size(); ++q)
    if (rest[q] > r) {  // the vertex attached to red 1 must be blue
      std::swap(rest[0], rest[q]);
      break;
    }
  for (int v : rest) {
    bool isred = v <= r;
    auto& opp = isred ? placedB : placedR;
    int anchor = opp[ri(rng, 0, (int)opp.size() - 1)];
    in.g.edges.push_back({id++, isred ? v : anchor, isred ? anchor : v, 1});
    (isred ? placedR : placedB).push_back(v);
  }
  for (int rr = 1; rr <= r; ++rr)
    for (int bb = r + 1; bb <= r + b; ++bb)
      if (!in.g.edge_between(rr, bb) && ri(rng, 0, 2) == 0)
        in.g.edges.push_back({id++, rr, bb, 1});
  in.budget = ri(rng, 0, r);
  return in;
}

// Connected capacitated-domination instance whose breadth-first layers stay
// small (the domination solver is exponential in the bag width).
CdsInstance rand_cds(Rng& rng, int maxn, int max_layer, TreePartition& tp_out) {
  for (;;) {
    CdsInstance in;
    int n = ri(rng, 1, maxn);
    for (int v = 1; v <= n; ++v) {
      in.g.vertices.push_back(v);
      in.cap[v] = ri(rng, 1, 3);
    }
    int id = 1;
    for (int v = 2; v <= n; ++v) in.g.edges.push_back({id++, ri(rng, 1, v - 1), v, 1});
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (!in.g.edge_between(u, v) && ri(rng, 0, 2) == 0)
          in.g.edges.push_back({id++, u, v, 1});
    in.budget = ri(rng, 0, n);
    TreePartition tp = layers(in.g, 1);
    size_t w = 0;
    for (auto& [t, bag] : tp.bag) w = std::max(w, bag.size());
    if ((int)w <= max_layer) {
      tp_out = std::move(tp);
      return in;
    }
  }
}

AonfInstance rand_aonf(Rng& rng, int n, int maxcap, WeightedGraph* skeleton) {
  AonfInstance a;
  for (int v = 0; v < n; ++v) a.net.nodes.push_back(v);
  int id = 1;
  for (int v = 1; v < n; ++v) {
    int o = ri(rng, 0, v - 1);
    if (ri(rng, 0, 1))
      a.net.arcs.push_back({id++, o, v, (long long)ri(rng, 1, maxcap)});
    else
      a.net.arcs.push_back({id++, v, o, (long long)ri(rng, 1, maxcap)});
  }
  int extra = ri(rng, 0, 2);
  for (int t = 0; t < extra; ++t) {
    int u = ri(rng, 0, n - 1), v = ri(rng, 0, n - 1);
    if (u != v) a.net.arcs.push_back({id++, u, v, (long long)ri(rng, 1, maxcap)});
  }
  a.net.source = 0;
  a.net.sink = n - 1;
  long long tot = 0;
  for (auto& x : a.net.arcs) tot += x.cap;
  a.value = ri(rng, 0, (int)tot);
  if (skeleton) {
    skeleton->vertices = a.net.nodes;
    int eid = 1;
    for (auto& x : a.net.arcs) {
      bool dup = false;
      for (auto& e : skeleton->edges)
        if ((e.u == x.tail && e.v == x.head) || (e.u == x.head && e.v == x.tail)) dup = true;
      if (!dup) skeleton->edges.push_back({eid++, x.tail, x.head, 1});
    }
  }
  return a;
}

// ---------------------------------------------------------------------------
// Exhaustive corpora

// All connected unlabelled graph shapes with <= maxn vertices and <= maxm
// edges, together with their vertex automorphisms.
struct Shape {
  int n = 0;
  std::vector<std::pair<int, int>> edges;        // 0-based endpoints
  std::vector<std::vector<int>> automorphisms;   // vertex permutations
};

std::vector<Shape> connected_shapes(int maxn, int maxm) {
  std::vector<Shape> out;
  for (int n = 1; n <= maxn; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    int P = (int)pairs.size();
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto remap = [&](uint64_t mask, const std::vector<int>& sigma) {
      uint64_t r = 0;
      for (int i = 0; i < P; ++i)
        if (mask >> i & 1) {
          int u = sigma[pairs[i].first], v = sigma[pairs[i].second];
          if (u > v) std::swap(u, v);
          r |= 1ULL << ((2 * n - 1 - u) * u / 2 + (v - u - 1));
        }
      return r;
    };
    std::set<uint64_t> seen;
    for (uint64_t mask = 0; mask < (1ULL << P); ++mask) {
      if (std::popcount(mask) > maxm) continue;
      // connectivity check
      std::vector<int> comp(n, -1);
      std::vector<int> stack{0};
      comp[0] = 0;
      while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int i = 0; i < P; ++i)
          if (mask >> i & 1) {
            int a = pairs[i].first, b = pairs[i].second;
            int o = a == u ? b : (b == u ? a : -1);
            if (o >= 0 && comp[o] < 0) {
              comp[o] = 0;
              stack.push_back(o);
            }
          }
      }
      if (std::count(comp.begin(), comp.end(), 0) != n) continue;
      uint64_t canon = mask;
      for (auto& sigma : perms) canon = std::min(canon, remap(mask, sigma));
      if (canon != mask || !seen.insert(canon).second) continue;
      Shape s;
      s.n = n;
      for (int i = 0; i < P; ++i)
        if (mask >> i & 1) s.edges.push_back(pairs[i]);
      for (auto& sigma : perms)
        if (remap(mask, sigma) == mask) s.automorphisms.push_back(sigma);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// All weight assignments of a shape with weights in 1..maxw, deduplicated
// under the shape's automorphisms.  Emits ready-to-use graphs (vertices
// 1..n, edge ids 1..m).
std::vector<WeightedGraph> weighted_variants(const Shape& s, int maxw) {
  int m = (int)s.edges.size();
  std::map<std::pair<int, int>, int> edge_pos;
  for (int i = 0; i < m; ++i) edge_pos[s.edges[i]] = i;
  std::vector<WeightedGraph> out;
  std::vector<int> w(m, 1);
  for (;;) {
    bool canonical = true;
    for (const auto& sigma : s.automorphisms) {
      std::vector<int> pw(m);
      for (int i = 0; i < m; ++i) {
        int u = sigma[s.edges[i].first], v = sigma[s.edges[i].second];
        if (u > v) std::swap(u, v);
        pw[edge_pos.at({u, v})] = w[i];
      }
      if (pw < w) {
        canonical = false;
        break;
      }
    }
    if (canonical) {
      WeightedGraph g;
      for (int v = 1; v <= s.n; ++v) g.vertices.push_back(v);
      for (int i = 0; i < m; ++i)
        g.edges.push_back({i + 1, s.edges[i].first + 1, s.edges[i].second + 1, (long long)w[i]});
      out.push_back(std::move(g));
    }
    int i = m - 1;
    while (i >= 0 && w[i] == maxw) w[i--] = 1;
    if (i < 0) break;
    ++w[i];
  }
  if (m == 0) {
    WeightedGraph g;
    for (int v = 1; v <= s.n; ++v) g.vertices.push_back(v);
    out.push_back(std::move(g));
  }
  return out;
}

// Every tree partition of g with at most three bags (bag count 1, 2, or a
// 3-node path in each of its three bag-to-node assignments), keeping only
// the ones valid for g's edge set.
std::vector<TreePartition> small_partitions(const WeightedGraph& g) {
  std::vector<TreePartition> out;
  const auto& V = g.vertices;
  int n = (int)V.size();
  std::vector<int> assign(n, 0);
  auto emit = [&](int q, std::vector<std::pair<int, int>> arcs) {
    TreePartition tp;
    for (int t = 1; t <= q; ++t) {
      tp.nodes.push_back(t);
      tp.bag[t];
    }
    for (int j = 0; j < n; ++j) tp.bag[assign[j] + 1].insert(V[j]);
    tp.arcs = std::move(arcs);
    try {
      validate_tree_partition(g, tp);
    } catch (const input_error&) {
      return;
    }
    out.push_back(std::move(tp));
  };
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == n) {
      if (used == 1) emit(1, {});
      else if (used == 2) emit(2, {{1, 2}});
      else
        for (int c = 1; c <= 3; ++c) {
          std::vector<std::pair<int, int>> arcs;
          for (int t = 1; t <= 3; ++t)
            if (t != c) arcs.push_back({std::min(c, t), std::max(c, t)});
          emit(3, std::move(arcs));
        }
      return;
    }
    for (int b = 0; b <= std::min(used, 2); ++b) {
      assign[i] = b;
      rec(i + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

std::string plural(long long n, const char* what) {
  std::ostringstream os;
  os << n << " " << what;
  return os.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: orientation DP vs oracle on the exhaustive small corpus.

CriterionOutcome criterion_oro_exact() {
  CriterionOutcome res{1, "interval-orientation DP exactness", false, ""};
  Rng rng(1001);
  OroDpOptions opts;
  opts.max_breadth = 1000;
  long long graphs = 0, runs = 0, yes = 0;
  for (const Shape& s : connected_shapes(5, 6)) {
    for (const WeightedGraph& g : weighted_variants(s, 3)) {
      ++graphs;
      auto tps = small_partitions(g);
      for (int variant = 0; variant < 2; ++variant) {
        OroInstance inst;
        inst.g = g;
        for (int v : g.vertices) {
          long long lo = ri(rng, 0, 4), hi = lo + ri(rng, 0, 3);
          inst.interval[v] = {lo, hi};
        }
        bool oracle_yes = (bool)oracle_oro(inst);
        for (const TreePartition& tp : tps) {
          ++runs;
          OroResult r = solve_oro(inst, tp, opts);
          if (r.yes != oracle_yes) {
            std::ostringstream os;
            os << "mismatch on graph #" << graphs << " (n=" << g.vertices.size()
               << ", m=" << g.edges.size() << "): solver=" << r.yes
               << " oracle=" << oracle_yes;
            res.detail = os.str();
            return res;
          }
          if (r.yes) {
            ++yes;
            if (!validate_witness(AnyInstance{inst}, AnyWitness{r.orientation}).ok) {
              res.detail = "solver emitted an invalid orientation witness";
              return res;
            }
          }
        }
      }
    }
  }
  res.pass = true;
  std::ostringstream os;
  os << graphs << " weighted graphs, " << runs << " (instance, partition) runs, " << yes
     << " yes answers, all agree";
  res.detail = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 2: family front-end vs oracles on random instances.

CriterionOutcome criterion_family_exact() {
  CriterionOutcome res{2, "orientation family exactness", false, ""};
  Rng rng(1002);
  OroDpOptions opts;
  opts.max_breadth = 1000;
  long long yes = 0, no = 0;
  const char* names[] = {"TOO", "CMO", "MMO", "CO"};
  for (int kind = 0; kind < 4; ++kind) {
    for (int it = 0; it < 500; ++it) {
      WeightedGraph g = rand_graph(rng, ri(rng, 2, 6), 4);
      TreePartition tp = layers(g, 1);
      AnyInstance inst;
      bool oracle_yes = false;
      switch (kind) {
        case 0: {
          TooInstance x;
          x.g = g;
          for (int v : g.vertices) x.target[v] = ri(rng, 0, 5);
          oracle_yes = (bool)oracle_too(x);
          inst = x;
          break;
        }
        case 1: {
          CmoInstance x;
          x.g = g;
          for (int v : g.vertices) x.bound[v] = ri(rng, 0, 4);
          oracle_yes = (bool)oracle_cmo(x);
          inst = x;
          break;
        }
        case 2: {
          MmoInstance x;
          x.g = g;
          x.max_out = ri(rng, 0, 5);
          oracle_yes = (bool)oracle_mmo(x);
          inst = x;
          break;
        }
        default: {
          CoInstance x;
          x.g = g;
          oracle_yes = (bool)oracle_co(x);
          inst = x;
          break;
        }
      }
      FamilyResult fr = solve_family(inst, tp, opts);
      if (fr.yes != oracle_yes) {
        std::ostringstream os;
        os << names[kind] << " mismatch at iteration " << it << ": solver=" << fr.yes
           << " oracle=" << oracle_yes;
        res.detail = os.str();
        return res;
      }
      if (fr.yes && !validate_witness(inst, fr.witness).ok) {
        res.detail = std::string(names[kind]) + ": invalid witness";
        return res;
      }
      (fr.yes ? yes : no)++;
    }
  }
  long long uyes = 0, ayes = 0;
  for (int it = 0; it < 300; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 4);
    UflbInstance u;
    u.g = g;
    for (auto& e : g.edges) {
      int l = ri(rng, 0, (int)e.w);
      if (l) u.lower[e.id] = l;
    }
    u.s = 1;
    u.t = (int)g.vertices.size();
    long long total = g.total_weight();
    u.value = ri(rng, 0, (int)total);
    TreePartition tp = layers(g, 1);
    FamilyResult fr = solve_family(AnyInstance{u}, tp, opts);
    bool oracle_yes = (bool)oracle_uflb(u);
    if (fr.yes != oracle_yes) {
      res.detail = "UFLB mismatch at iteration " + std::to_string(it);
      return res;
    }
    if (fr.yes && !validate_witness(AnyInstance{u}, fr.witness).ok) {
      res.detail = "UFLB: invalid witness";
      return res;
    }
    uyes += fr.yes;
  }
  for (int it = 0; it < 300; ++it) {
    WeightedGraph skeleton;
    AonfInstance a = rand_aonf(rng, ri(rng, 2, 5), 4, &skeleton);
    TreePartition tp = layers(skeleton, 0);
    FamilyResult fr = solve_family(AnyInstance{a}, tp, opts);
    bool oracle_yes = (bool)oracle_aonf(a);
    if (fr.yes != oracle_yes) {
      res.detail = "AONF mismatch at iteration " + std::to_string(it);
      return res;
    }
    if (fr.yes && !validate_witness(AnyInstance{a}, fr.witness).ok) {
      res.detail = "AONF: invalid witness";
      return res;
    }
    ayes += fr.yes;
  }
  res.pass = true;
  std::ostringstream os;
  os << "TOO/CMO/MMO/CO: 2000 runs (" << yes << " yes); UFLB: 300 runs (" << uyes
     << " yes); AONF: 300 runs (" << ayes << " yes); all agree";
  res.detail = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 3: domination DP vs oracle, exhaustive bipartite + random CDS.

CriterionOutcome criterion_domination_exact() {
  CriterionOutcome res{3, "capacitated domination exactness", false, ""};
  CdsDpOptions opts;
  opts.max_width = 20;
  long long instances = 0, max_spread = 0, max_excess = 0;
  for (int r = 1; r <= 4; ++r) {
    for (int b = 1; b <= 4; ++b) {
      // connected bipartite shapes up to red/blue label permutations
      std::vector<std::vector<int>> rperm, bperm;
      std::vector<int> p(r);
      std::iota(p.begin(), p.end(), 0);
      do rperm.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      p.assign(b, 0);
      std::iota(p.begin(), p.end(), 0);
      do bperm.push_back(p);
      while (std::next_permutation(p.begin(), p.end()));
      auto remap = [&](uint64_t mask, const std::vector<int>& sr, const std::vector<int>& sb) {
        uint64_t out = 0;
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < b; ++j)
            if (mask >> (i * b + j) & 1) out |= 1ULL << (sr[i] * b + sb[j]);
        return out;
      };
      for (uint64_t mask = 0; mask < (1ULL << (r * b)); ++mask) {
        // connectivity over r + b vertices
        int n = r + b;
        std::vector<int> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
          int u = stack.back();
          stack.pop_back();
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < b; ++j)
              if (mask >> (i * b + j) & 1) {
                int a = i, c = r + j;
                int o = a == u ? c : (c == u ? a : -1);
                if (o >= 0 && !seen[o]) {
                  seen[o] = 1;
                  stack.push_back(o);
                }
              }
        }
        if (std::count(seen.begin(), seen.end(), 1) != n) continue;
        bool canonical = true;
        for (auto& sr : rperm) {
          for (auto& sb : bperm)
            if (remap(mask, sr, sb) < mask) {
              canonical = false;
              break;
            }
          if (!canonical) break;
        }
        if (!canonical) continue;
        // exhaust capacity assignments in 1..3 per red
        std::vector<int> cap(r, 1);
        for (;;) {
          CrbdsInstance in;
          for (int v = 1; v <= n; ++v) in.g.vertices.push_back(v);
          for (int i = 0; i < r; ++i) {
            in.red.insert(i + 1);
            in.cap[i + 1] = cap[i];
          }
          for (int j = 0; j < b; ++j) in.blue.insert(r + j + 1);
          int id = 1;
          for (int i = 0; i < r; ++i)
            for (int j = 0; j < b; ++j)
              if (mask >> (i * b + j) & 1) in.g.edges.push_back({id++, i + 1, r + j + 1, 1});
          in.budget = r;
          TreePartition tp;
          tp.nodes = {1};
          for (int v = 1; v <= n; ++v) tp.bag[1].insert(v);
          ++instances;
          CdsDpResult dp = solve_crbds(in, tp, opts);
          DominationResult oc = oracle_crbds(in);
          if (oc.feasible != (dp.status != DominationStatus::Infeasible) ||
              (oc.feasible && oc.size != dp.min_size)) {
            std::ostringstream os;
            os << "bipartite mismatch (r=" << r << ", b=" << b << ", mask=" << mask << ")";
            res.detail = os.str();
            return res;
          }
          max_spread = std::max(max_spread, dp.max_c_spread);
          max_excess = std::max(max_excess, dp.max_b_excess);
          int i = r - 1;
          while (i >= 0 && cap[i] == 3) cap[i--] = 1;
          if (i < 0) break;
          ++cap[i];
        }
      }
    }
  }
  if (max_excess != 0) {
    res.detail = "finite-index excess bound violated on a mate-free instance";
    return res;
  }
  Rng rng(1003);
  long long k2max = 0;
  for (int it = 0; it < 300; ++it) {
    TreePartition tp;
    CdsInstance in = rand_cds(rng, 7, 3, tp);
    CdsDpResult dp = solve_cds(in, tp, opts);
    DominationResult oc = oracle_cds(in);
    if (!oc.feasible || dp.status == DominationStatus::Infeasible ||
        oc.size != dp.min_size) {
      res.detail = "CDS mismatch at iteration " + std::to_string(it);
      return res;
    }
    long long w = 0;
    for (auto& [t, bag] : tp.bag) w = std::max<long long>(w, (long long)bag.size());
    k2max = std::max(k2max, 2 * w);  // doubled bags in the red-blue transport
    if (dp.max_c_spread > 2 * (2 * w)) {
      res.detail = "C-table spread exceeded 2k at iteration " + std::to_string(it);
      return res;
    }
    max_spread = std::max(max_spread, dp.max_c_spread);
  }
  res.pass = true;
  std::ostringstream os;
  os << instances << " exhaustive bipartite instances + 300 random CDS instances, all "
     << "minima agree; spread bounds held (max C-spread " << max_spread << ")";
  res.detail = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 4: reductions preserve answers and back-translate witnesses.

CriterionOutcome criterion_reductions() {
  CriterionOutcome res{4, "reduction soundness", false, ""};
  Rng rng(1004);
  auto fail = [&](const std::string& what, int it) {
    res.detail = what + " at iteration " + std::to_string(it);
    return res;
  };
  // interval lifts
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    TooInstance in;
    in.g = g;
    for (int v : g.vertices) in.target[v] = ri(rng, 0, 5);
    auto a = oracle_too(in);
    auto o = oracle_oro(lift_to_oro(in));
    if ((bool)a != (bool)o) return fail("TOO lift mismatch", it);
    if (o && !orientation_satisfies_too(in, *o)) return fail("TOO lift witness", it);
  }
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    CmoInstance in;
    in.g = g;
    for (int v : g.vertices) in.bound[v] = ri(rng, 0, 4);
    auto a = oracle_cmo(in);
    auto o = oracle_oro(lift_to_oro(in));
    if ((bool)a != (bool)o) return fail("CMO lift mismatch", it);
    if (o && !orientation_satisfies_cmo(in, *o)) return fail("CMO lift witness", it);
  }
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    MmoInstance in;
    in.g = g;
    in.max_out = ri(rng, 0, 5);
    auto a = oracle_mmo(in);
    auto o = oracle_oro(lift_to_oro(in));
    if ((bool)a != (bool)o) return fail("MMO lift mismatch", it);
    if (o && !orientation_satisfies_mmo(in, *o)) return fail("MMO lift witness", it);
  }
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    CoInstance in;
    in.g = g;
    auto a = oracle_co(in);
    auto o = oracle_oro(lift_to_oro(in));
    if ((bool)a != (bool)o) return fail("CO lift mismatch", it);
    if (o && !orientation_satisfies_co(in, *o)) return fail("CO lift witness", it);
  }
  // all-or-nothing flow -> target orientation
  for (int it = 0; it < 200; ++it) {
    AonfInstance in = rand_aonf(rng, ri(rng, 2, 5), 4, nullptr);
    AonfToToo red = aonf_to_too(in);
    auto a = oracle_aonf(in);
    auto o = oracle_too(red.out);
    if ((bool)a != (bool)o) return fail("aonf_to_too mismatch", it);
    if (o) {
      Flow f = aonf_flow_from_too(red, in, *o);
      if (!validate_witness(AnyInstance{in}, AnyWitness{f}).ok)
        return fail("aonf_to_too witness", it);
    }
  }
  // target orientation -> circulation
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    TooInstance in;
    in.g = g;
    for (int v : g.vertices) in.target[v] = ri(rng, 0, 5);
    TooToCo red = too_to_co(in);
    auto a = oracle_too(in);
    auto o = oracle_co(red.out);
    if ((bool)a != (bool)o) return fail("too_to_co mismatch", it);
    if (o) {
      Orientation back = too_orientation_from_co(red, in, *o);
      if (!orientation_satisfies_too(in, back)) return fail("too_to_co witness", it);
    }
  }
  // target orientation -> capped orientation (exact at matched totals)
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 3);
    TooInstance in;
    in.g = g;
    if (it % 2 == 0) {
      // targets forming a composition of the total weight
      for (int v : g.vertices) in.target[v] = 0;
      long long left = g.total_weight();
      while (left-- > 0) in.target[g.vertices[ri(rng, 0, (int)g.vertices.size() - 1)]]++;
    } else {
      for (int v : g.vertices) in.target[v] = ri(rng, 0, 5);
    }
    CmoInstance out = too_to_cmo(in);
    auto a = oracle_too(in);
    auto o = oracle_cmo(out);
    if ((bool)a != (bool)o) return fail("too_to_cmo mismatch", it);
    if (o && !orientation_satisfies_too(in, *o)) return fail("too_to_cmo witness", it);
  }
  // lower-bounded flow -> circulation
  OracleCaps co_caps;
  co_caps.edges = 120;  // chains of subdivided light edges; pruning collapses them
  for (int it = 0; it < 200; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 4);
    UflbInstance in;
    in.g = g;
    for (auto& e : g.edges) {
      int l = ri(rng, 0, (int)e.w);
      if (l) in.lower[e.id] = l;
    }
    in.s = 1;
    in.t = (int)g.vertices.size();
    in.value = ri(rng, 0, (int)g.total_weight());
    TreePartition tp = layers(g, 1);
    UflbToCo red = uflb_to_co(in, tp);
    auto a = oracle_uflb(in);
    if (red.early_no) {
      if (a) return fail("uflb_to_co early-no on a yes instance", it);
      continue;
    }
    auto o = oracle_co(red.out, co_caps);
    if ((bool)a != (bool)o) return fail("uflb_to_co mismatch", it);
    if (o) {
      UflbWitness w = uflb_witness_from_co(red, in, *o);
      if (!validate_witness(AnyInstance{in}, AnyWitness{w}).ok)
        return fail("uflb_to_co witness", it);
    }
  }
  // plain domination -> red-blue domination
  for (int it = 0; it < 200; ++it) {
    TreePartition tp;
    CdsInstance in = rand_cds(rng, 5, 5, tp);
    in.budget = (long long)in.g.vertices.size();
    CdsToCrbds red = cds_to_crbds(in);
    DominationResult a = oracle_cds(in);
    DominationResult o = oracle_crbds(red.out);
    if (a.feasible != o.feasible || (a.feasible && a.size != o.size))
      return fail("cds_to_crbds mismatch", it);
    if (o.feasible) {
      DominationWitness w = cds_witness_from_crbds(red, in, o.witness);
      if (!validate_witness(AnyInstance{in}, AnyWitness{w}).ok)
        return fail("cds_to_crbds witness", it);
    }
  }
  res.pass = true;
  res.detail = "9 reductions x 200 random instances, all answers agree and all "
               "witnesses back-translate";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 5: morphism-to-partition bounds.

// Tree identity morphism: indices on the parallel copies of each edge split a
// common degree D = max edge weight.
void tree_identity_morphism(Rng& rng, WeightedGraph& g, HarmonicMorphism& m) {
  int n = ri(rng, 2, 6);
  g = {};
  for (int v = 1; v <= n; ++v) g.vertices.push_back(v);
  for (int v = 2; v <= n; ++v)
    g.edges.push_back({v - 1, ri(rng, 1, v - 1), v, (long long)ri(rng, 1, 3)});
  long long D = 1;
  for (auto& e : g.edges) D = std::max(D, e.w);
  MultiOfWeighted mo = weighted_to_multigraph(g);
  m = {};
  m.source = mo.graph;
  m.tree.nodes = g.vertices;
  std::map<int, int> arc_of_edge;  // base edge id -> 1-based tree arc
  for (auto& e : g.edges) {
    m.tree.arcs.push_back({e.u, e.v});
    arc_of_edge[e.id] = (int)m.tree.arcs.size();
  }
  for (int v : g.vertices) m.vmap[v] = v;
  // split D into w positive indices per base edge
  std::map<int, std::vector<int>> copies;  // base edge -> multi-edge ids
  for (auto& me : mo.graph.edges) copies[mo.origin_edge.at(me.id)].push_back(me.id);
  for (auto& [base, ids] : copies) {
    std::vector<long long> part(ids.size(), 1);
    for (long long extra = D - (long long)ids.size(); extra > 0; --extra)
      part[ri(rng, 0, (int)ids.size() - 1)]++;
    for (size_t i = 0; i < ids.size(); ++i) {
      m.emap[ids[i]] = arc_of_edge.at(base);
      m.index[ids[i]] = part[i];
    }
  }
  m.has_trace = true;  // empty trace: the source is the base multigraph
}

// Fold of an even cycle with constant weight w onto a path; both antipodal
// vertices sit over the path's ends.
void even_cycle_fold(Rng& rng, WeightedGraph& g, HarmonicMorphism& m) {
  int half = ri(rng, 2, 5);
  int n = 2 * half;
  long long w = ri(rng, 1, 2);
  g = {};
  for (int v = 1; v <= n; ++v) g.vertices.push_back(v);
  for (int v = 1; v <= n; ++v) g.edges.push_back({v, v, v % n + 1, w});
  MultiOfWeighted mo = weighted_to_multigraph(g);
  m = {};
  m.source = mo.graph;
  for (int t = 0; t <= half; ++t) {
    m.tree.nodes.push_back(t);
    if (t) m.tree.arcs.push_back({t - 1, t});
  }
  auto pos = [&](int v) { return std::min(v - 1, n - (v - 1)); };
  for (int v : g.vertices) m.vmap[v] = pos(v);
  for (auto& me : mo.graph.edges) {
    m.emap[me.id] = std::max(pos(me.u), pos(me.v));
    m.index[me.id] = 1;
  }
  m.has_trace = true;
}

// Fold of an odd cycle after one subdivision evens its length.
void odd_cycle_fold(Rng& rng, WeightedGraph& g, HarmonicMorphism& m) {
  int n = 2 * ri(rng, 1, 4) + 1;
  g = {};
  for (int v = 1; v <= n; ++v) g.vertices.push_back(v);
  for (int v = 1; v <= n; ++v) g.edges.push_back({v, v, v % n + 1, 1});
  m = {};
  m.trace.ops.push_back({RefinementOp::Subdivide, n});  // the edge n -- 1
  m.has_trace = true;
  MultiOfWeighted mo = weighted_to_multigraph(g);
  Refinement ref = replay_refinement(mo.graph, m.trace);
  m.source = ref.graph;
  int x = n + 1;  // the subdivision vertex: cycle order 1, 2, ..., n, x
  int len = n + 1, half = len / 2;
  auto pos = [&](int v) {
    int d = v == x ? n : v - 1;
    return std::min(d, len - d);
  };
  for (int t = 0; t <= half; ++t) {
    m.tree.nodes.push_back(t);
    if (t) m.tree.arcs.push_back({t - 1, t});
  }
  for (int v : ref.graph.vertices) m.vmap[v] = pos(v);
  for (auto& me : ref.graph.edges) {
    m.emap[me.id] = std::max(pos(me.u), pos(me.v));
    m.index[me.id] = 1;
  }
}

CriterionOutcome criterion_morphism_bounds() {
  CriterionOutcome res{5, "morphism-to-partition bounds", false, ""};
  Rng rng(1005);
  for (int it = 0; it < 100; ++it) {
    WeightedGraph g;
    HarmonicMorphism m;
    switch (it % 3) {
      case 0: tree_identity_morphism(rng, g, m); break;
      case 1: even_cycle_fold(rng, g, m); break;
      default: odd_cycle_fold(rng, g, m); break;
    }
    long long deg = validate_harmonic_morphism(m);
    MorphismPartition mp = morphism_to_tree_partition(g, m);
    PartitionCheck pc = validate_tree_partition(mp.graph, mp.partition);
    if (pc.breadth > deg) {
      std::ostringstream os;
      os << "breadth " << pc.breadth << " exceeds degree " << deg << " at iteration " << it;
      res.detail = os.str();
      return res;
    }
    if (mp.partition.nodes.size() > 2 * g.vertices.size()) {
      res.detail = "node count exceeds twice the vertex count at iteration " +
                   std::to_string(it);
      return res;
    }
  }
  res.pass = true;
  res.detail = "100 morphisms (tree identities, even/odd cycle folds): breadth <= degree, "
               "node count <= 2|V|, partitions valid";
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 6: counter machines vs the flow encoding.

CriterionOutcome criterion_nnccm() {
  CriterionOutcome res{6, "counter-machine flow encoding", false, ""};
  std::vector<NnccmMachine> all;
  for (int k = 1; k <= 2; ++k)
    for (long long B = 0; B <= 2; ++B) {
      std::vector<NnccmTest> tests;
      for (int i = 1; i <= k; ++i)
        for (long long a = 0; a <= B; ++a)
          for (int j = 1; j <= k; ++j)
            for (long long b = 0; b <= B; ++b) tests.push_back({i, a, j, b});
      NnccmMachine m;
      m.counters = k;
      m.bound = B;
      all.push_back(m);  // no tests
      for (auto& t1 : tests) {
        m.tests = {t1};
        all.push_back(m);
        for (auto& t2 : tests) {
          m.tests = {t1, t2};
          all.push_back(m);
        }
      }
    }
  Rng rng(1006);
  std::shuffle(all.begin(), all.end(), rng);
  size_t take = all.size();  // fast enough to skip the permitted sub-sampling
  long long accept = 0, reject = 0;
  for (size_t i = 0; i < take; ++i) {
    const NnccmMachine& m = all[i];
    NnccmAonf net = nnccm_to_aonf(m);
    long long expectR = (long long)m.counters * (net.L + 2 * m.bound);
    if (net.instance.value != expectR || net.R != expectR) {
      res.detail = "flow target differs from k(L+2B) at machine " + std::to_string(i);
      return res;
    }
    auto run = oracle_nnccm(m);
    auto flow = oracle_aonf_ilp(net.instance);
    if ((bool)run != (bool)flow) {
      std::ostringstream os;
      os << "accept mismatch at machine " << i << " (k=" << m.counters << ", B=" << m.bound
         << ", n=" << m.tests.size() << "): machine=" << (bool)run
         << " flow=" << (bool)flow;
      res.detail = os.str();
      return res;
    }
    if (run) {
      ++accept;
      Flow f = witness_flow_from_run(m, *run, net);
      FlowReport rep = check_flow(net.instance.net, f);
      if (!rep.valid || rep.value != net.instance.value) {
        res.detail = "run-derived flow rejected at machine " + std::to_string(i);
        return res;
      }
    } else {
      ++reject;
    }
  }
  res.pass = true;
  std::ostringstream os;
  os << take << " machines (exhaustive for k <= 2, B <= 2, n <= 2): " << accept
     << " accepting, " << reject << " rejecting, machine and flow answers agree";
  res.detail = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 7: bin packing vs both encodings, exhaustively.

CriterionOutcome criterion_binpacking() {
  CriterionOutcome res{7, "bin-packing three-way agreement", false, ""};
  OracleCaps caps;
  caps.edges = 40;  // item-bin graphs reach 36 edges; pruning keeps this fast
  long long triples = 0, packable = 0;
  std::vector<long long> items;
  std::function<bool(int, long long)> rec = [&](int n, long long minv) -> bool {
    if (!items.empty()) {
      long long sum = std::accumulate(items.begin(), items.end(), 0LL);
      long long maxi = *std::max_element(items.begin(), items.end());
      for (int k = 1; k <= (int)items.size(); ++k) {
        if (sum % k) continue;
        long long B = sum / k;
        if (maxi > B) continue;
        BinPacking bp{items, B, k};
        ++triples;
        bool a = (bool)oracle_binpacking(bp);
        bool t = (bool)oracle_too(binpacking_to_too(bp), caps);
        bool f = (bool)oracle_aonf(binpacking_to_aonf(bp), caps);
        if (a != t || a != f) {
          std::ostringstream os;
          os << "disagreement (direct=" << a << ", orientation=" << t << ", flow=" << f
             << ") on items {";
          for (long long x : items) os << " " << x;
          os << " } with B=" << B << ", k=" << k;
          res.detail = os.str();
          return false;
        }
        packable += a;
      }
    }
    if (n == 6) return true;
    for (long long v = minv; v <= 6; ++v) {
      items.push_back(v);
      if (!rec(n + 1, v)) return false;
      items.pop_back();
    }
    return true;
  };
  if (!rec(0, 1)) return res;
  res.pass = true;
  std::ostringstream os;
  os << triples << " (multiset, B, k) triples, " << packable
     << " packable, all three answers agree";
  res.detail = os.str();
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 8: every yes answer carries a validating witness.

CriterionOutcome criterion_witness_roundtrip() {
  CriterionOutcome res{8, "witness round-trip", false, ""};
  Rng rng(1008);
  OroDpOptions opts;
  opts.max_breadth = 1000;
  CdsDpOptions dopts;
  dopts.max_width = 20;
  long long yes = 0;
  auto check = [&](const AnyInstance& inst, const AnyWitness& w, const char* what) {
    WitnessReport rep = validate_witness(inst, w);
    if (!rep.ok) {
      res.detail = std::string(what) + ": witness rejected — " +
                   (rep.violations.empty() ? "no detail" : rep.violations.front());
      return false;
    }
    ++yes;
    return true;
  };
  for (int it = 0; it < 80; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 6), 3);
    TreePartition tp = layers(g, 1);
    AnyInstance inst;
    switch (it % 5) {
      case 0: {
        OroInstance x;
        x.g = g;
        for (int v : g.vertices) {
          long long lo = ri(rng, 0, 3), hi = lo + ri(rng, 0, 4);
          x.interval[v] = {lo, hi};
        }
        inst = x;
        break;
      }
      case 1: {
        TooInstance x;
        x.g = g;
        for (int v : g.vertices) x.target[v] = ri(rng, 0, 5);
        inst = x;
        break;
      }
      case 2: {
        CmoInstance x;
        x.g = g;
        for (int v : g.vertices) x.bound[v] = ri(rng, 0, 4);
        inst = x;
        break;
      }
      case 3: {
        MmoInstance x;
        x.g = g;
        x.max_out = ri(rng, 0, 5);
        inst = x;
        break;
      }
      default: {
        CoInstance x;
        x.g = g;
        inst = x;
        break;
      }
    }
    FamilyResult fr = solve_family(inst, tp, opts);
    if (fr.yes && !check(inst, fr.witness, "orientation family")) return res;
  }
  for (int it = 0; it < 40; ++it) {
    WeightedGraph g = rand_graph(rng, ri(rng, 2, 5), 4);
    UflbInstance u;
    u.g = g;
    for (auto& e : g.edges) {
      int l = ri(rng, 0, (int)e.w);
      if (l) u.lower[e.id] = l;
    }
    u.s = 1;
    u.t = (int)g.vertices.size();
    u.value = ri(rng, 0, (int)g.total_weight());
    FamilyResult fr = solve_family(AnyInstance{u}, layers(g, 1), opts);
    if (fr.yes && !check(AnyInstance{u}, fr.witness, "lower-bounded flow")) return res;
  }
  for (int it = 0; it < 40; ++it) {
    WeightedGraph skeleton;
    AonfInstance a = rand_aonf(rng, ri(rng, 2, 5), 4, &skeleton);
    FamilyResult fr = solve_family(AnyInstance{a}, layers(skeleton, 0), opts);
    if (fr.yes && !check(AnyInstance{a}, fr.witness, "all-or-nothing flow")) return res;
  }
  for (int it = 0; it < 60; ++it) {
    CrbdsInstance in = rand_crbds(rng, ri(rng, 1, 4), ri(rng, 1, 4));
    TreePartition tp = layers(in.g, ri(rng, 1, (int)in.g.vertices.size()));
    CdsDpResult dp = solve_crbds(in, tp, dopts);
    if (dp.status == DominationStatus::Yes &&
        !check(AnyInstance{in}, AnyWitness{dp.witness}, "red-blue domination"))
      return res;
  }
  for (int it = 0; it < 40; ++it) {
    TreePartition tp;
    CdsInstance in = rand_cds(rng, 7, 3, tp);
    CdsDpResult dp = solve_cds(in, tp, dopts);
    if (dp.status == DominationStatus::Yes &&
        !check(AnyInstance{in}, AnyWitness{dp.witness}, "capacitated domination"))
      return res;
  }
  res.pass = true;
  res.detail = plural(yes, "yes answers across all solver families, every witness validated");
  return res;
}

// ---------------------------------------------------------------------------
// Criterion 9: integer-program solver vs exhaustive enumeration.

CriterionOutcome criterion_ilp() {
  CriterionOutcome res{9, "integer-program solver soundness", false, ""};
  Rng rng(1009);
  for (int it = 0; it < 1000; ++it) {
    IlpModel model;
    int nvars;
    long long space;
    do {
      model = {};
      nvars = ri(rng, 1, 6);
      space = 1;
      for (int v = 0; v < nvars; ++v) {
        long long lo = ri(rng, -8, 8);
        long long hi = ri(rng, (int)lo, 8);
        model.add_var("x" + std::to_string(v), lo, hi);
        space *= hi - lo + 1;
      }
    } while (space > 300000);
    int ncons = ri(rng, 0, 4);
    for (int c = 0; c < ncons; ++c) {
      std::vector<IlpTerm> terms;
      for (int v = 0; v < nvars; ++v) {
        int coef = ri(rng, -3, 3);
        if (coef) terms.push_back({(long long)coef, v});
      }
      IlpRel rel = ri(rng, 0, 2) == 0 ? IlpRel::LE : (ri(rng, 0, 1) ? IlpRel::GE : IlpRel::EQ);
      model.add_con(std::move(terms), rel, ri(rng, -10, 10));
    }
    bool has_obj = ri(rng, 0, 1);
    if (has_obj) {
      std::vector<IlpTerm> terms;
      for (int v = 0; v < nvars; ++v) {
        int coef = ri(rng, -3, 3);
        if (coef) terms.push_back({(long long)coef, v});
      }
      model.set_objective(std::move(terms));
    }
    // exhaustive reference
    bool any = false;
    long long best = 0;
    std::vector<long long> assign(nvars);
    std::function<void(int)> enumerate = [&](int v) {
      if (v == nvars) {
        for (const auto& con : model.cons) {
          long long lhs = 0;
          for (const auto& t : con.terms) lhs += t.coef * assign[t.var];
          bool ok = con.rel == IlpRel::LE   ? lhs <= con.rhs
                    : con.rel == IlpRel::GE ? lhs >= con.rhs
                                            : lhs == con.rhs;
          if (!ok) return;
        }
        long long obj = 0;
        if (model.has_objective)
          for (const auto& t : model.objective) obj += t.coef * assign[t.var];
        if (!any || obj < best) best = obj;
        any = true;
        return;
      }
      for (long long x = model.vars[v].lo; x <= model.vars[v].hi; ++x) {
        assign[v] = x;
        enumerate(v + 1);
      }
    };
    enumerate(0);
    IlpResult r = solve_ilp(model);
    if (r.status == IlpStatus::ResourceExceeded) {
      res.detail = "node budget exceeded at iteration " + std::to_string(it);
      return res;
    }
    bool solved = r.status == IlpStatus::Optimal;
    if (solved != any || (any && model.has_objective && r.objective != best)) {
      std::ostringstream os;
      os << "mismatch at iteration " << it << ": solver " << (solved ? "optimal " : "infeasible")
         << (solved && model.has_objective ? std::to_string(r.objective) : "")
         << ", enumeration " << (any ? "feasible " : "infeasible")
         << (any && model.has_objective ? std::to_string(best) : "");
      res.detail = os.str();
      return res;
    }
    if (solved) {
      // the returned point must itself be feasible with the claimed objective
      long long obj = 0;
      for (const auto& t : model.objective) obj += t.coef * r.values[t.var];
      bool ok = !model.has_objective || obj == r.objective;
      for (size_t v = 0; v < model.vars.size() && ok; ++v)
        ok = r.values[v] >= model.vars[v].lo && r.values[v] <= model.vars[v].hi;
      for (const auto& con : model.cons) {
        long long lhs = 0;
        for (const auto& t : con.terms) lhs += t.coef * r.values[t.var];
        ok = ok && (con.rel == IlpRel::LE   ? lhs <= con.rhs
                    : con.rel == IlpRel::GE ? lhs >= con.rhs
                                            : lhs == con.rhs);
      }
      if (!ok) {
        res.detail = "solver returned an infeasible point at iteration " + std::to_string(it);
        return res;
      }
    }
  }
  res.pass = true;
  res.detail = "1000 random models (<= 6 vars, bounds within [-8, 8]): feasibility and "
               "optima match exhaustive enumeration";
  return res;
}

}  // namespace

CriterionOutcome run_criterion(int id) {
  switch (id) {
    case 1: return criterion_oro_exact();
    case 2: return criterion_family_exact();
    case 3: return criterion_domination_exact();
    case 4: return criterion_reductions();
    case 5: return criterion_morphism_bounds();
    case 6: return criterion_nnccm();
    case 7: return criterion_binpacking();
    case 8: return criterion_witness_roundtrip();
    case 9: return criterion_ilp();
    default: throw input_error("criterion id must be in 1..9");
  }
}

std::vector<CriterionOutcome> run_all_criteria(std::ostream* log) {
  std::vector<CriterionOutcome> out;
  for (int id = 1; id <= 9; ++id) {
    CriterionOutcome c = run_criterion(id);
    if (log)
      *log << "criterion " << c.id << " (" << c.name << "): " << (c.pass ? "PASS" : "FAIL")
           << " — " << c.detail << "\n" << std::flush;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gonflow
