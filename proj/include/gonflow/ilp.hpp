#pragma once

#include <string>
#include <vector>

namespace gonflow {

// Small exact integer-program solver: bounded integer variables, linear
// constraints, optional linear minimization objective.  Solved by
// depth-first branch and bound with interval constraint propagation.

struct IlpTerm {
  long long coef = 0;
  int var = -1;
};

enum class IlpRel { LE, GE, EQ };

struct IlpConstraint {
  std::vector<IlpTerm> terms;
  IlpRel rel = IlpRel::LE;
  long long rhs = 0;
};

struct IlpVar {
  std::string name;
  long long lo = 0;
  long long hi = 0;
};

struct IlpModel {
  std::vector<IlpVar> vars;
  std::vector<IlpConstraint> cons;
  std::vector<IlpTerm> objective;  // minimized; ignored unless has_objective
  bool has_objective = false;

  int add_var(std::string name, long long lo, long long hi) {
    vars.push_back({std::move(name), lo, hi});
    return static_cast<int>(vars.size()) - 1;
  }
  void add_con(std::vector<IlpTerm> terms, IlpRel rel, long long rhs) {
    cons.push_back({std::move(terms), rel, rhs});
  }
  void set_objective(std::vector<IlpTerm> terms) {
    objective = std::move(terms);
    has_objective = true;
  }
};

enum class IlpStatus { Optimal, Infeasible, ResourceExceeded };

struct IlpResult {
  IlpStatus status = IlpStatus::Infeasible;
  std::vector<long long> values;  // one per variable when Optimal
  long long objective = 0;        // 0 for pure feasibility problems
  long long nodes = 0;
};

// Reads GONFLOW_NODE_BUDGET from the environment; falls back to the default.
long long default_node_budget();

IlpResult solve_ilp(const IlpModel& model, long long node_budget = -1);

}  // namespace gonflow
