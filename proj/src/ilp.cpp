#include "gonflow/ilp.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

#include "gonflow/common.hpp"

namespace gonflow {

long long default_node_budget() {
  if (const char* s = std::getenv("GONFLOW_NODE_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 20'000'000;
}

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

struct Bounds {
  std::vector<long long> lo, hi;
};

// Normalized constraint sum(a_i x_i) <= b.
struct LeCon {
  std::vector<IlpTerm> terms;
  long long rhs;
};

long long clamp_inf(long long v) { return std::clamp(v, -kInf, kInf); }

// Tighten bounds against all constraints until fixpoint.  Returns false on
// detected infeasibility.
bool propagate(const std::vector<LeCon>& cons, Bounds& b) {
  bool changed = true;
  int rounds = 0;
  while (changed && rounds++ < 200) {
    changed = false;
    for (const auto& c : cons) {
      // min total and per-term min contribution
      long long min_total = 0;
      bool overflow = false;
      for (const auto& t : c.terms) {
        long long m = t.coef >= 0 ? t.coef * b.lo[t.var] : t.coef * b.hi[t.var];
        min_total = clamp_inf(min_total + clamp_inf(m));
        if (min_total >= kInf || min_total <= -kInf) overflow = true;
      }
      if (!overflow && min_total > c.rhs) return false;
      for (const auto& t : c.terms) {
        if (t.coef == 0) continue;
        long long own_min =
            clamp_inf(t.coef >= 0 ? t.coef * b.lo[t.var] : t.coef * b.hi[t.var]);
        long long rest = clamp_inf(min_total - own_min);
        long long slack = clamp_inf(c.rhs - rest);
        // t.coef * x <= slack
        if (t.coef > 0) {
          long long nh = slack >= 0 ? slack / t.coef
                                    : -((-slack + t.coef - 1) / t.coef);
          if (nh < b.hi[t.var]) {
            b.hi[t.var] = nh;
            changed = true;
            if (b.hi[t.var] < b.lo[t.var]) return false;
          }
        } else {
          long long a = -t.coef;  // a * x >= -slack
          long long need = -slack;
          long long nl = need >= 0 ? (need + a - 1) / a : -((-need) / a);
          if (nl > b.lo[t.var]) {
            b.lo[t.var] = nl;
            changed = true;
            if (b.hi[t.var] < b.lo[t.var]) return false;
          }
        }
      }
    }
  }
  return true;
}

struct Solver {
  const IlpModel& model;
  std::vector<LeCon> cons;
  long long budget;
  long long nodes = 0;
  bool exceeded = false;
  bool found = false;
  long long best_obj = kInf;
  std::vector<long long> best_vals;

  explicit Solver(const IlpModel& m, long long bud) : model(m), budget(bud) {
    for (const auto& c : m.cons) {
      if (c.rel == IlpRel::LE || c.rel == IlpRel::EQ) cons.push_back({c.terms, c.rhs});
      if (c.rel == IlpRel::GE || c.rel == IlpRel::EQ) {
        LeCon neg{c.terms, -c.rhs};
        for (auto& t : neg.terms) t.coef = -t.coef;
        cons.push_back(std::move(neg));
      }
    }
  }

  long long obj_lower_bound(const Bounds& b) const {
    long long lb = 0;
    for (const auto& t : model.objective)
      lb = clamp_inf(lb + clamp_inf(t.coef >= 0 ? t.coef * b.lo[t.var]
                                                : t.coef * b.hi[t.var]));
    return lb;
  }

  void record(const Bounds& b) {
    long long obj = 0;
    if (model.has_objective)
      for (const auto& t : model.objective) obj += t.coef * b.lo[t.var];
    if (!found || obj < best_obj) {
      found = true;
      best_obj = model.has_objective ? obj : 0;
      best_vals = b.lo;
    }
  }

  // Returns true if search can stop (pure feasibility solved, or budget hit).
  bool dive(Bounds b) {
    if (++nodes > budget) {
      exceeded = true;
      return true;
    }
    if (!propagate(cons, b)) return false;
    if (model.has_objective && found && obj_lower_bound(b) >= best_obj) return false;
    int pick = -1;
    long long dom = 0;
    for (size_t i = 0; i < b.lo.size(); ++i) {
      if (b.lo[i] == b.hi[i]) continue;
      long long d = b.hi[i] - b.lo[i];
      if (pick == -1 || d < dom) {
        pick = static_cast<int>(i);
        dom = d;
      }
    }
    if (pick == -1) {
      record(b);
      return !model.has_objective;  // first feasible point is enough
    }
    long long lo = b.lo[pick], hi = b.hi[pick];
    for (long long v = lo; v <= hi; ++v) {
      Bounds child = b;
      child.lo[pick] = child.hi[pick] = v;
      if (dive(std::move(child))) return true;
    }
    return false;
  }
};

}  // namespace

IlpResult solve_ilp(const IlpModel& model, long long node_budget) {
  if (node_budget < 0) node_budget = default_node_budget();
  Bounds b;
  for (const auto& v : model.vars) {
    if (v.lo > v.hi) return {IlpStatus::Infeasible, {}, 0, 0};
    b.lo.push_back(v.lo);
    b.hi.push_back(v.hi);
  }
  Solver s(model, node_budget);
  s.dive(std::move(b));
  IlpResult r;
  r.nodes = s.nodes;
  if (s.exceeded && (model.has_objective || !s.found)) {
    r.status = IlpStatus::ResourceExceeded;
    r.values = s.best_vals;  // incumbent, if any; not proven optimal
    r.objective = s.found ? s.best_obj : 0;
  } else if (s.found) {
    r.status = IlpStatus::Optimal;
    r.values = s.best_vals;
    r.objective = s.best_obj;
  } else {
    r.status = IlpStatus::Infeasible;
  }
  return r;
}

}  // namespace gonflow
