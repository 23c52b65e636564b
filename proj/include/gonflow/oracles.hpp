#pragma once

#include <optional>
#include <utility>

#include "gonflow/hardness.hpp"
#include "gonflow/instance.hpp"

namespace gonflow {

// Brute-force reference solvers.  Each enumerates directly from the problem
// definition, independent of the dynamic-programming solvers, and each
// yes-answer carries a witness.  Exceeding a cap throws resource_error so
// "too big" is never mistaken for "no".

struct OracleCaps {
  int edges = 24;       // 2^edges orientation enumerations
  int arcs = 20;        // 2^arcs subset enumerations for flows
  int reds = 20;        // 2^reds dominating-set enumerations
  int items = 16;       // bin-packing item count
  double nnccm_states = 5e7;  // (B+1)^k * n search-space bound
};

std::optional<Orientation> oracle_oro(const OroInstance& inst, const OracleCaps& caps = {});
std::optional<Orientation> oracle_too(const TooInstance& inst, const OracleCaps& caps = {});
std::optional<Orientation> oracle_cmo(const CmoInstance& inst, const OracleCaps& caps = {});
std::optional<Orientation> oracle_mmo(const MmoInstance& inst, const OracleCaps& caps = {});
std::optional<Orientation> oracle_co(const CoInstance& inst, const OracleCaps& caps = {});

// Subset enumeration when the arc count allows it, otherwise a 0/1 program.
std::optional<Flow> oracle_aonf(const AonfInstance& inst, const OracleCaps& caps = {});
std::optional<Flow> oracle_aonf_enum(const AonfInstance& inst, const OracleCaps& caps = {});
std::optional<Flow> oracle_aonf_ilp(const AonfInstance& inst);

std::optional<UflbWitness> oracle_uflb(const UflbInstance& inst, const OracleCaps& caps = {});

struct DominationResult {
  bool feasible = false;
  long long size = 0;  // minimum dominating-set size when feasible
  DominationWitness witness;
};

// Minimum-size search, ignoring the instance budget (callers compare).
DominationResult oracle_crbds(const CrbdsInstance& inst, const OracleCaps& caps = {});
DominationResult oracle_cds(const CdsInstance& inst, const OracleCaps& caps = {});

// assignment[i] = bin of item i (0-based), when a perfect packing exists.
std::optional<std::vector<int>> oracle_binpacking(const BinPacking& bp,
                                                  const OracleCaps& caps = {});

std::optional<NnccmRun> oracle_nnccm(const NnccmMachine& m, const OracleCaps& caps = {});

}  // namespace gonflow
