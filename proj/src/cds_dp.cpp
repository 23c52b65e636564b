#include "gonflow/cds_dp.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "gonflow/flow.hpp"
#include "gonflow/ilp.hpp"
#include "gonflow/reductions.hpp"

namespace gonflow {

namespace {

int popcount(uint64_t m) { return std::popcount(m); }

// One admissible child characteristic inside a combine step.
struct VarDesc {
  int cls = -1;                          // child-class index
  uint64_t De = 0;                       // mask over this node's bag blues
  const std::vector<long long>* g = nullptr;  // usage per bag red
  long long cost = 0;                    // class-normalized child cost
};

// A fully specified bag-local guess plus the optimal child distribution.
struct AChoice {
  uint64_t D = 0;                             // served bag blues
  const std::vector<long long>* h = nullptr;  // clipped residuals per bag red
  uint64_t Q = 0;                             // chosen bag reds
  const std::vector<int>* opt = nullptr;      // per blue: -2 skip, -1 child, else red index
  long long size = 0;
  const std::vector<VarDesc>* vars = nullptr;
  const std::vector<long long>* x = nullptr;  // children per variable
};

// Children grouped by equality of their minimum-shifted C-tables.
struct ChildSummary {
  using Norm = std::vector<std::pair<std::pair<uint64_t, std::vector<long long>>, long long>>;
  std::vector<std::vector<int>> members;  // per class, ascending child ids
  std::vector<Norm> tbl;                  // per class, the shared table
  std::map<int, long long> m_child;
  long long m_tot = 0;
};

struct Dp {
  const CrbdsInstance& inst;
  const TreePartition& tree;
  const CdsDpOptions& opts;
  RootedPartition rooted;
  long long k;  // partition width (max bag size)

  std::map<int, std::vector<int>> bagReds, bagBlues;  // per node, sorted
  std::map<int, std::set<int>> nbr;

  using AKey = std::pair<uint64_t, std::vector<long long>>;  // (D, h)
  using CKey = std::pair<uint64_t, std::vector<long long>>;  // (parent D, g)
  std::map<int, std::map<AKey, long long>> A;
  std::map<int, std::map<uint64_t, long long>> B;  // low bits: own blues, high: parent blues
  std::map<int, std::map<CKey, long long>> C;
  std::map<int, ChildSummary> summary;

  bool assert_spreads;  // the exchange-argument bounds are proved mate-free
  long long max_b_excess = 0, max_c_spread = 0;

  // Witness accumulation during replay.
  std::set<int> wS;
  std::map<int, int> wF;

  Dp(const CrbdsInstance& i, const TreePartition& t, const CdsDpOptions& o, long long width)
      : inst(i), tree(t), opts(o), k(width) {
    rooted = root_partition(tree, tree.root);
    for (const auto& [n, bag] : tree.bag) {
      auto& r = bagReds[n];
      auto& b = bagBlues[n];
      for (int v : bag) (inst.is_red(v) ? r : b).push_back(v);
    }
    for (const auto& e : inst.g.edges) {
      nbr[e.u].insert(e.v);
      nbr[e.v].insert(e.u);
    }
    assert_spreads = inst.mate.empty();
  }

  bool adjacent(int u, int v) const {
    auto it = nbr.find(u);
    return it != nbr.end() && it->second.count(v) > 0;
  }

  // Enumerates, in a fixed deterministic order, every realizable bag-local
  // combination at node i: chosen reds Q, a service option per bag blue, and
  // a clipped-residual vector h; children are folded in through an integer
  // program.  Calls visit for each feasible combination; stops early when
  // visit returns true.
  template <class F>
  bool enumerate_a(int i, F&& visit) {
    const auto& reds = bagReds.at(i);
    const auto& blues = bagBlues.at(i);
    int r = static_cast<int>(reds.size()), b = static_cast<int>(blues.size());
    const ChildSummary& cs = summary.at(i);
    bool have_kids = !cs.members.empty();

    std::vector<std::vector<int>> badj(b);  // blue index -> adjacent red indices
    for (int t = 0; t < b; ++t)
      for (int p = 0; p < r; ++p)
        if (adjacent(blues[t], reds[p])) badj[t].push_back(p);
    std::vector<int> mate_blue(r, -1);  // red index -> blue index it must serve
    for (int p = 0; p < r; ++p) {
      auto it = inst.mate.find(reds[p]);
      if (it == inst.mate.end()) continue;
      auto pos = std::lower_bound(blues.begin(), blues.end(), it->second);
      if (pos == blues.end() || *pos != it->second)
        throw std::logic_error("forced-service pair split across bags after validation");
      mate_blue[p] = static_cast<int>(pos - blues.begin());
    }

    std::vector<long long> cap_left(r, 0);
    std::vector<int> opt(b, -2);

    for (uint64_t Qm = 0; Qm < (1ull << r); ++Qm) {
      for (int p = 0; p < r; ++p) cap_left[p] = (Qm >> p & 1) ? inst.cap.at(reds[p]) : 0;
      std::vector<int> forced(b, -1);  // blue index -> the red that must serve it
      bool ok = true;
      for (int p = 0; p < r && ok; ++p)
        if ((Qm >> p & 1) && mate_blue[p] >= 0) {
          if (forced[mate_blue[p]] >= 0) ok = false;  // two chosen reds share a mate
          forced[mate_blue[p]] = p;
        }
      if (!ok) continue;

      // Evaluate one complete option vector: build the admissible child
      // characteristics, then walk the residual vectors.
      auto finish = [&]() -> bool {
        uint64_t D = 0, Drem = 0;
        for (int t = 0; t < b; ++t) {
          if (opt[t] != -2) D |= 1ull << t;
          if (opt[t] == -1) Drem |= 1ull << t;
        }
        std::vector<VarDesc> vars;
        if (have_kids) {
          std::vector<char> class_has(cs.members.size(), 0);
          for (size_t cz = 0; cz < cs.members.size(); ++cz)
            for (const auto& [key, cost] : cs.tbl[cz]) {
              const auto& [De, g] = key;
              if (De & ~Drem) continue;  // children may not serve other blues
              bool good = true;
              for (int p = 0; p < r && good; ++p)
                if (g[p] > 0 && (!(Qm >> p & 1) || g[p] > cap_left[p])) good = false;
              if (!good) continue;
              vars.push_back({static_cast<int>(cz), De, &g, cost});
              class_has[cz] = 1;
            }
          for (size_t cz = 0; cz < cs.members.size(); ++cz)
            if (!class_has[cz]) return false;
          for (int t = 0; t < b; ++t)
            if ((Drem >> t & 1) &&
                std::none_of(vars.begin(), vars.end(),
                             [&](const VarDesc& v) { return v.De >> t & 1; }))
              return false;
        }

        std::vector<char> can_use(r, 0);  // some child may consume this red
        for (const auto& v : vars)
          for (int p = 0; p < r; ++p)
            if ((*v.g)[p] > 0) can_use[p] = 1;

        std::vector<long long> h(r, 0);
        std::vector<std::pair<int, long long>> free_pos;  // (red index, max h)
        for (int p = 0; p < r; ++p) {
          if (!(Qm >> p & 1)) continue;
          long long hi = std::min<long long>(k, cap_left[p]);
          if (can_use[p])
            free_pos.emplace_back(p, hi);
          else
            h[p] = hi;  // children cannot touch it: residual is exact
        }

        while (true) {
          long long cand = -1;
          std::vector<long long> x;
          if (!have_kids) {
            cand = popcount(Qm);
          } else {
            IlpModel m;
            for (size_t vi = 0; vi < vars.size(); ++vi)
              m.add_var("x" + std::to_string(vi), 0,
                        static_cast<long long>(cs.members[vars[vi].cls].size()));
            for (size_t cz = 0; cz < cs.members.size(); ++cz) {
              std::vector<IlpTerm> terms;
              for (size_t vi = 0; vi < vars.size(); ++vi)
                if (vars[vi].cls == static_cast<int>(cz)) terms.push_back({1, (int)vi});
              m.add_con(std::move(terms), IlpRel::EQ,
                        static_cast<long long>(cs.members[cz].size()));
            }
            for (int t = 0; t < b; ++t) {
              if (!(Drem >> t & 1)) continue;
              std::vector<IlpTerm> terms;
              for (size_t vi = 0; vi < vars.size(); ++vi)
                if (vars[vi].De >> t & 1) terms.push_back({1, (int)vi});
              m.add_con(std::move(terms), IlpRel::EQ, 1);
            }
            bool h_ok = true;
            for (int p = 0; p < r && h_ok; ++p) {
              if (!can_use[p]) continue;
              std::vector<IlpTerm> terms;
              for (size_t vi = 0; vi < vars.size(); ++vi)
                if ((*vars[vi].g)[p] > 0) terms.push_back({(*vars[vi].g)[p], (int)vi});
              if (h[p] < k) {
                m.add_con(std::move(terms), IlpRel::EQ, cap_left[p] - h[p]);
              } else if (cap_left[p] < k) {
                h_ok = false;  // residual cannot reach the clip value
              } else {
                m.add_con(std::move(terms), IlpRel::LE, cap_left[p] - k);
              }
            }
            if (h_ok) {
              std::vector<IlpTerm> obj;
              for (size_t vi = 0; vi < vars.size(); ++vi)
                if (vars[vi].cost > 0) obj.push_back({vars[vi].cost, (int)vi});
              m.set_objective(std::move(obj));
              IlpResult res = solve_ilp(m, opts.ilp_node_budget);
              if (res.status == IlpStatus::ResourceExceeded)
                throw resource_error("ILP node budget exceeded in the domination solver");
              if (res.status == IlpStatus::Optimal) {
                cand = popcount(Qm) + cs.m_tot + res.objective;
                x = std::move(res.values);
              }
            }
          }
          if (cand >= 0) {
            AChoice ch{D, &h, Qm, &opt, cand, &vars, &x};
            if (visit(ch)) return true;
          }
          // Odometer step over the free residual positions.
          size_t pos = 0;
          while (pos < free_pos.size() && h[free_pos[pos].first] == free_pos[pos].second)
            h[free_pos[pos++].first] = 0;
          if (pos == free_pos.size()) break;
          ++h[free_pos[pos].first];
        }
        return false;
      };

      std::function<bool(int)> rec = [&](int t) -> bool {
        if (t == b) return finish();
        if (forced[t] >= 0) {
          int p = forced[t];
          if (cap_left[p] <= 0) return false;
          opt[t] = p;
          --cap_left[p];
          bool stop = rec(t + 1);
          ++cap_left[p];
          opt[t] = -2;
          return stop;
        }
        opt[t] = -2;
        if (rec(t + 1)) return true;
        if (have_kids) {
          opt[t] = -1;
          if (rec(t + 1)) {
            opt[t] = -2;
            return true;
          }
        }
        for (int p : badj[t]) {
          if (!(Qm >> p & 1) || cap_left[p] <= 0) continue;
          opt[t] = p;
          --cap_left[p];
          bool stop = rec(t + 1);
          ++cap_left[p];
          opt[t] = -2;
          if (stop) return true;
        }
        return false;
      };
      if (rec(0)) return true;
    }
    return false;
  }

  void build_summary(int i) {
    ChildSummary cs;
    std::map<ChildSummary::Norm, int> index;
    for (int c : rooted.children.at(i)) {
      const auto& tc = C.at(c);
      if (tc.empty())
        throw std::logic_error("empty characteristic table below a feasible instance");
      long long m = tc.begin()->second;
      for (const auto& [key, v] : tc) m = std::min(m, v);
      cs.m_child[c] = m;
      cs.m_tot += m;
      ChildSummary::Norm norm;
      norm.reserve(tc.size());
      for (const auto& [key, v] : tc) norm.emplace_back(key, v - m);
      auto [it, fresh] = index.try_emplace(norm, static_cast<int>(cs.members.size()));
      if (fresh) {
        cs.members.emplace_back();
        cs.tbl.push_back(std::move(norm));
      }
      cs.members[it->second].push_back(c);
    }
    summary[i] = std::move(cs);
  }

  void compute_a(int i) {
    build_summary(i);
    int b = static_cast<int>(bagBlues.at(i).size());
    double est = static_cast<double>(1ull << b);
    for (int v : bagReds.at(i))
      est *= static_cast<double>(std::min<long long>(k, inst.cap.at(v)) + 1);
    if (est > static_cast<double>(opts.max_table))
      throw resource_error("characteristic table for bag " + std::to_string(i) +
                           " exceeds the configured limit");
    auto& Ai = A[i];
    enumerate_a(i, [&](const AChoice& ch) {
      AKey key{ch.D, *ch.h};
      auto it = Ai.find(key);
      if (it == Ai.end() || ch.size < it->second)
        Ai[key] = ch.size;
      return false;
    });
  }

  void compute_b(int i) {
    int j = rooted.parent.at(i);
    const auto& reds = bagReds.at(i);
    const auto& blues = bagBlues.at(i);
    const auto& pblues = bagBlues.at(j);
    int r = static_cast<int>(reds.size());
    int b = static_cast<int>(blues.size());
    int pb = static_cast<int>(pblues.size());
    std::vector<std::vector<int>> padj(pb);  // parent blue index -> red indices
    for (int t = 0; t < pb; ++t)
      for (int p = 0; p < r; ++p)
        if (adjacent(pblues[t], reds[p])) padj[t].push_back(p);

    auto& Bi = B[i];
    for (const auto& [key, a] : A.at(i)) {
      const auto& [Dl, h] = key;
      std::vector<long long> used(r, 0);
      std::function<void(int, uint64_t)> rec = [&](int t, uint64_t Dp) {
        if (t == pb) {
          uint64_t mask = Dl | (Dp << b);
          auto it = Bi.find(mask);
          if (it == Bi.end() || a < it->second) Bi[mask] = a;
          return;
        }
        rec(t + 1, Dp);
        for (int p : padj[t]) {
          if (used[p] >= h[p]) continue;
          ++used[p];
          rec(t + 1, Dp | (1ull << t));
          --used[p];
        }
      };
      rec(0, 0);
    }

    if (Bi.count(0)) {
      long long alpha = Bi.at(0);
      for (const auto& [mask, v] : Bi) {
        long long excess = v - alpha - popcount(mask);
        max_b_excess = std::max(max_b_excess, excess);
        if (assert_spreads && (v < alpha || excess > 0))
          throw std::logic_error("B-table value outside its proven spread bound");
      }
    } else if (assert_spreads) {
      throw std::logic_error("empty-characteristic entry missing from a B-table");
    }
  }

  void compute_c(int i) {
    int j = rooted.parent.at(i);
    const auto& blues = bagBlues.at(i);
    const auto& preds = bagReds.at(j);
    int b = static_cast<int>(blues.size());
    int pr = static_cast<int>(preds.size());
    std::vector<std::vector<int>> cadj(b);  // blue index -> parent red indices
    for (int t = 0; t < b; ++t)
      for (int p = 0; p < pr; ++p)
        if (adjacent(blues[t], preds[p])) cadj[t].push_back(p);
    std::vector<long long> gcap(pr);
    for (int p = 0; p < pr; ++p) gcap[p] = std::min<long long>(k, inst.cap.at(preds[p]));

    auto& Ci = C[i];
    for (const auto& [mask, val] : B.at(i)) {
      uint64_t Dl = mask & ((b ? (1ull << b) : 1ull) - 1);
      uint64_t Dp = mask >> b;
      std::vector<int> rest;
      for (int t = 0; t < b; ++t)
        if (!(Dl >> t & 1)) rest.push_back(t);
      std::vector<long long> g(pr, 0);
      std::function<void(size_t)> rec = [&](size_t q) {
        if (q == rest.size()) {
          CKey key{Dp, g};
          auto it = Ci.find(key);
          if (it == Ci.end() || val < it->second) Ci[key] = val;
          return;
        }
        for (int p : cadj[rest[q]]) {
          if (g[p] >= gcap[p]) continue;
          ++g[p];
          rec(q + 1);
          --g[p];
        }
      };
      rec(0);
    }

    if (Ci.empty())
      throw std::logic_error("empty characteristic table below a feasible instance");
    long long mn = Ci.begin()->second, mx = mn;
    for (const auto& [key, v] : Ci) {
      mn = std::min(mn, v);
      mx = std::max(mx, v);
    }
    max_c_spread = std::max(max_c_spread, mx - mn);
    if (assert_spreads && mx - mn > 2 * k)
      throw std::logic_error("C-table spread exceeds twice the partition width");
  }

  // ---- witness replay (top-down, first achiever in enumeration order) ----

  void replay_a(int i, const AKey& key, long long target) {
    const auto& reds = bagReds.at(i);
    const auto& blues = bagBlues.at(i);
    const ChildSummary& cs = summary.at(i);
    bool found = enumerate_a(i, [&](const AChoice& ch) {
      if (ch.D != key.first || *ch.h != key.second || ch.size != target) return false;
      for (size_t p = 0; p < reds.size(); ++p)
        if (ch.Q >> p & 1) wS.insert(reds[p]);
      for (size_t t = 0; t < blues.size(); ++t)
        if ((*ch.opt)[t] >= 0) wF[blues[t]] = reds[(*ch.opt)[t]];
      std::vector<size_t> cursor(cs.members.size(), 0);
      std::map<int, std::pair<CKey, long long>> pick;
      for (size_t vi = 0; vi < ch.vars->size(); ++vi) {
        const VarDesc& vd = (*ch.vars)[vi];
        for (long long n = (*ch.x)[vi]; n > 0; --n) {
          int c = cs.members[vd.cls][cursor[vd.cls]++];
          pick[c] = {{vd.De, *vd.g}, cs.m_child.at(c) + vd.cost};
        }
      }
      for (size_t cz = 0; cz < cs.members.size(); ++cz)
        if (cursor[cz] != cs.members[cz].size())
          throw std::logic_error("child distribution does not cover every child");
      for (const auto& [c, pr] : pick) replay_c(c, pr.first, pr.second);
      return true;
    });
    if (!found) throw std::logic_error("witness replay found no matching bag combination");
  }

  void replay_c(int i, const CKey& key, long long target) {
    int j = rooted.parent.at(i);
    const auto& blues = bagBlues.at(i);
    const auto& preds = bagReds.at(j);
    int b = static_cast<int>(blues.size());
    int pr = static_cast<int>(preds.size());
    std::vector<std::vector<int>> cadj(b);
    for (int t = 0; t < b; ++t)
      for (int p = 0; p < pr; ++p)
        if (adjacent(blues[t], preds[p])) cadj[t].push_back(p);

    for (const auto& [mask, val] : B.at(i)) {
      if (val != target) continue;
      uint64_t Dl = mask & ((b ? (1ull << b) : 1ull) - 1);
      if ((mask >> b) != key.first) continue;
      std::vector<int> rest;
      for (int t = 0; t < b; ++t)
        if (!(Dl >> t & 1)) rest.push_back(t);
      std::vector<long long> g(pr, 0);
      std::vector<int> chosen(rest.size(), -1);
      std::function<bool(size_t)> rec = [&](size_t q) -> bool {
        if (q == rest.size()) return g == key.second;
        for (int p : cadj[rest[q]]) {
          if (g[p] >= key.second[p]) continue;
          ++g[p];
          chosen[q] = p;
          if (rec(q + 1)) return true;
          --g[p];
        }
        return false;
      };
      if (!rec(0)) continue;
      for (size_t q = 0; q < rest.size(); ++q) wF[blues[rest[q]]] = preds[chosen[q]];
      replay_b(i, mask, target);
      return;
    }
    throw std::logic_error("witness replay found no matching eps entry");
  }

  void replay_b(int i, uint64_t mask, long long target) {
    int j = rooted.parent.at(i);
    const auto& reds = bagReds.at(i);
    const auto& pblues = bagBlues.at(j);
    int r = static_cast<int>(reds.size());
    int b = static_cast<int>(bagBlues.at(i).size());
    int pb = static_cast<int>(pblues.size());
    uint64_t Dl = mask & ((b ? (1ull << b) : 1ull) - 1);
    uint64_t Dp = mask >> b;
    std::vector<std::vector<int>> padj(pb);
    for (int t = 0; t < pb; ++t)
      for (int p = 0; p < r; ++p)
        if (adjacent(pblues[t], reds[p])) padj[t].push_back(p);
    std::vector<int> targets;
    for (int t = 0; t < pb; ++t)
      if (Dp >> t & 1) targets.push_back(t);

    for (const auto& [key, a] : A.at(i)) {
      if (key.first != Dl || a != target) continue;
      const auto& h = key.second;
      std::vector<long long> used(r, 0);
      std::vector<int> chosen(targets.size(), -1);
      std::function<bool(size_t)> rec = [&](size_t q) -> bool {
        if (q == targets.size()) return true;
        for (int p : padj[targets[q]]) {
          if (used[p] >= h[p]) continue;
          ++used[p];
          chosen[q] = p;
          if (rec(q + 1)) return true;
          --used[p];
        }
        return false;
      };
      if (!rec(0)) continue;
      for (size_t q = 0; q < targets.size(); ++q) wF[pblues[targets[q]]] = reds[chosen[q]];
      replay_a(i, key, target);
      return;
    }
    throw std::logic_error("witness replay found no matching peps entry");
  }

  // Runs the full bottom-up pass and the top-down witness replay.
  // Returns the minimum dominating-set size.
  long long run() {
    for (int i : rooted.postorder) {
      compute_a(i);
      if (i != rooted.root) {
        compute_b(i);
        compute_c(i);
      }
    }
    int broot = static_cast<int>(bagBlues.at(rooted.root).size());
    uint64_t full = broot ? ((1ull << broot) - 1) : 0;
    const AKey* best_key = nullptr;
    long long best = -1;
    for (const auto& [key, v] : A.at(rooted.root)) {
      if (key.first != full) continue;
      if (best < 0 || v < best) {
        best = v;
        best_key = &key;
      }
    }
    if (!best_key)
      throw std::logic_error("no root entry for a feasible instance");
    replay_a(rooted.root, *best_key, best);
    for (int v : inst.blue)
      if (!wF.count(v)) throw std::logic_error("replayed witness leaves a blue unserved");
    return best;
  }
};

}  // namespace

bool crbds_assignment_feasible(const CrbdsInstance& inst) {
  inst.validate();
  if (inst.trivial_no) return false;
  std::map<int, long long> cap = inst.cap;
  std::set<int> must = inst.blue;
  for (const auto& [r, b] : inst.mate) {  // every red is chosen: mates are fixed
    if (--cap[r] < 0) return false;
    must.erase(b);
  }
  FlowNetwork net;
  int S = -1, T = -2;
  net.nodes = {S, T};
  net.source = S;
  net.sink = T;
  int off = inst.g.max_vertex_id() + 1;
  int next_arc = 1;
  for (int r : inst.red) {
    net.nodes.push_back(r);
    net.arcs.push_back({next_arc++, S, r, cap.at(r)});
  }
  for (int v : must) {
    net.nodes.push_back(v + off);
    net.arcs.push_back({next_arc++, v + off, T, 1});
    for (const auto* e : inst.g.incident_edges(v)) {
      int u = e->other(v);
      if (inst.red.count(u)) net.arcs.push_back({next_arc++, u, v + off, 1});
    }
  }
  return max_flow(net).value == static_cast<long long>(must.size());
}

GadgetizedCrbds gadgetize_subdivisions(const CrbdsInstance& in, const TreePartition& tp) {
  in.validate();
  GadgetizedCrbds g;
  g.out = in;
  g.tree = tp;
  g.original = in;
  if (in.subdiv_origin.empty()) return g;

  for (const auto& [r, b] : in.mate)
    if (in.subdiv_origin.count(r) || in.subdiv_origin.count(b))
      throw input_error("forced-service pairs may not involve subdivision vertices");

  std::map<int, int> bag_of;
  for (const auto& [n, bag] : tp.bag)
    for (int v : bag) bag_of[v] = n;

  int next_v = in.g.max_vertex_id() + 1;
  int next_e = in.g.max_edge_id() + 1;
  auto drop_vertex = [](CrbdsInstance& inst, int s) {
    auto& vs = inst.g.vertices;
    vs.erase(std::remove(vs.begin(), vs.end(), s), vs.end());
    auto& es = inst.g.edges;
    es.erase(std::remove_if(es.begin(), es.end(),
                            [&](const WeightedEdge& e) { return e.u == s || e.v == s; }),
             es.end());
    inst.red.erase(s);
    inst.blue.erase(s);
    inst.cap.erase(s);
  };

  for (const auto& [s, orig] : in.subdiv_origin) {
    auto inc = in.g.incident_edges(s);
    if (inc.size() != 2)
      throw input_error("subdivision vertex " + std::to_string(s) +
                        " must have exactly two incident edges");
    int a = inc[0]->other(s), c = inc[1]->other(s);
    if (in.subdiv_origin.count(a) || in.subdiv_origin.count(c))
      throw input_error("adjacent subdivision vertices are unsupported "
                        "(each edge may be subdivided at most once)");
    if (in.is_red(a) == in.is_red(c))
      throw input_error("subdivision vertex " + std::to_string(s) +
                        " must join a red and a blue vertex");
    int v = in.is_red(a) ? a : c;  // red endpoint
    int w = in.is_red(a) ? c : a;  // blue endpoint

    int x = next_v++, y = next_v++, z = next_v++;
    drop_vertex(g.out, s);
    g.out.g.vertices.insert(g.out.g.vertices.end(), {x, y, z});
    g.out.blue.insert(x);
    g.out.blue.insert(z);
    g.out.red.insert(y);
    g.out.cap[y] = 2;
    g.out.g.edges.push_back({next_e++, v, x, 1});
    g.out.g.edges.push_back({next_e++, x, y, 1});
    g.out.g.edges.push_back({next_e++, y, z, 1});
    g.out.g.edges.push_back({next_e++, y, w, 1});

    drop_vertex(g.original, s);
    g.original.g.edges.push_back({next_e++, v, w, 1});

    auto& bag = g.tree.bag.at(bag_of.at(s));
    bag.erase(s);
    bag.insert(x);
    bag.insert(y);
    bag.insert(z);

    g.gadget_red[y] = {v, w};
    g.gadget_blue.insert(x);
    g.gadget_blue.insert(z);
  }
  g.gadget_count = static_cast<int>(in.subdiv_origin.size());
  g.out.subdiv_origin.clear();
  g.original.subdiv_origin.clear();
  g.out.budget = in.budget + g.gadget_count;
  g.out.validate();
  g.original.validate();
  return g;
}

CdsDpResult solve_crbds(const CrbdsInstance& inst, const TreePartition& tp,
                        const CdsDpOptions& opts) {
  inst.validate();
  CdsDpResult res;
  if (inst.trivial_no) return res;

  if (!inst.subdiv_origin.empty()) {
    auto gad = gadgetize_subdivisions(inst, tp);
    CdsDpResult inner = solve_crbds(gad.out, gad.tree, opts);
    if (inner.status == DominationStatus::Infeasible) return inner;
    CdsDpResult out = inner;
    out.min_size = inner.min_size - gad.gadget_count;
    out.witness = {};
    for (int d : inner.witness.dominators)
      if (!gad.gadget_red.count(d)) out.witness.dominators.insert(d);
    for (const auto& [bl, d] : inner.witness.assign) {
      if (gad.gadget_blue.count(bl)) continue;
      auto it = gad.gadget_red.find(d);
      if (it == gad.gadget_red.end()) {
        out.witness.assign[bl] = d;
      } else {
        // The gadget red serves the blue endpoint: in the contracted graph
        // the red endpoint takes over (its unit on the gadget's entry blue
        // is freed).
        int v = it->second.first;
        if (!out.witness.dominators.count(v))
          throw std::logic_error("gadget service without its red endpoint chosen");
        out.witness.assign[bl] = v;
      }
    }
    out.status = out.min_size <= inst.budget ? DominationStatus::Yes
                                             : DominationStatus::OverBudget;
    if (out.status == DominationStatus::Yes) {
      auto rep = validate_witness(gad.original, out.witness);
      if (!rep.ok)
        throw std::logic_error("translated domination witness failed validation: " +
                               rep.violations.front());
    }
    return out;
  }

  auto check = validate_tree_partition(inst.g, tp);
  if (check.max_bag > opts.max_width)
    throw resource_error("partition width " + std::to_string(check.max_bag) +
                         " exceeds the configured limit " + std::to_string(opts.max_width));
  {
    std::map<int, int> bag_of;
    for (const auto& [n, bag] : tp.bag)
      for (int v : bag) bag_of[v] = n;
    for (const auto& [r, b] : inst.mate)
      if (bag_of.at(r) != bag_of.at(b))
        throw input_error("forced-service pair " + std::to_string(r) + "-" +
                          std::to_string(b) + " must share a bag");
  }
  if (!crbds_assignment_feasible(inst)) return res;

  Dp dp(inst, tp, opts, check.max_bag);
  res.min_size = dp.run();
  res.witness.dominators = std::move(dp.wS);
  res.witness.assign = std::move(dp.wF);
  res.max_b_excess = dp.max_b_excess;
  res.max_c_spread = dp.max_c_spread;
  res.status = res.min_size <= inst.budget ? DominationStatus::Yes
                                           : DominationStatus::OverBudget;
  if (static_cast<long long>(res.witness.dominators.size()) != res.min_size)
    throw std::logic_error("replayed dominating set has the wrong size");
  if (res.status == DominationStatus::Yes) {
    auto rep = validate_witness(inst, res.witness);
    if (!rep.ok)
      throw std::logic_error("domination witness failed validation: " +
                             rep.violations.front());
  }
  return res;
}

CdsDpResult solve_cds(const CdsInstance& inst, const TreePartition& tp,
                      const CdsDpOptions& opts) {
  inst.validate();
  auto red = cds_to_crbds(inst);
  auto tp2 = transport_partition_cds(red, tp);
  CdsDpResult r = solve_crbds(red.out, tp2, opts);
  if (r.status == DominationStatus::Infeasible) return r;
  r.witness = cds_witness_from_crbds(red, inst, r.witness);
  r.status = r.min_size <= inst.budget ? DominationStatus::Yes : DominationStatus::OverBudget;
  if (r.status == DominationStatus::Yes) {
    auto rep = validate_witness(inst, r.witness);
    if (!rep.ok)
      throw std::logic_error("capacitated domination witness failed validation: " +
                             rep.violations.front());
  }
  return r;
}

}  // namespace gonflow
