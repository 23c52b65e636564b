#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "gonflow/instance.hpp"
#include "gonflow/tree_partition.hpp"

namespace gonflow {

// Checking counter machines: k counters starting at 0 that may only
// increase (bounded by B), interleaved with tests (i,a,j,b); the machine
// rejects when both halves of a test fire.

struct NnccmTest {
  int i = 1;
  long long a = 0;
  int j = 1;
  long long b = 0;
};

struct NnccmMachine {
  int counters = 0;
  long long bound = 0;
  std::vector<NnccmTest> tests;
  void validate() const;  // throws input_error on out-of-range components
};

struct NnccmRun {
  // values[t] = counter vector during test t+1 (componentwise non-decreasing)
  std::vector<std::vector<long long>> values;
};

struct NnccmOutcome {
  bool accept = false;
  int reject_at = -1;  // 1-based test index
};

NnccmOutcome simulate_nnccm(const NnccmMachine& m, const NnccmRun& run);

NnccmMachine parse_machine(std::istream& in);
NnccmMachine load_machine(const std::string& path);
void write_machine(std::ostream& out, const NnccmMachine& m);

// Roles let the flow-witness constructor find arcs after subdivision.
struct NnccmAonf {
  AonfInstance instance;
  TreePartition pathdecomp;  // pathdecomp flag set
  long long L = 0;
  long long R = 0;
  // arc id -> role string, e.g. "src j", "snk j", "topup j t q",
  // "vw j t alpha", "wv j t alpha", "chk1a i", "chk1b i", "chk12 i",
  // "chk2a i", "chk2b i"; subdivided halves carry the original arc's role
  // with suffix " h1"/" h2".
  std::map<int, std::string> role;
  std::map<int, int> subdivided_from;  // subdivision vertex -> pre-split arc id

  // Pre-subdivision view: raw arcs in construction order, and for each raw
  // arc that was split to remove parallels, the ids of its two halves.
  std::vector<Arc> raw_arcs;
  std::map<int, std::pair<int, int>> split;
};

NnccmAonf nnccm_to_aonf(const NnccmMachine& m);

// Builds the explicit all-or-nothing flow of value R for an accepting run.
// Throws input_error if the run is rejecting or malformed.
Flow witness_flow_from_run(const NnccmMachine& m, const NnccmRun& run,
                           const NnccmAonf& net);

struct BinPacking {
  std::vector<long long> items;
  long long size = 0;  // B
  int bins = 0;        // k
  void validate() const;  // sum must equal size * bins
};

TooInstance binpacking_to_too(const BinPacking& bp);
AonfInstance binpacking_to_aonf(const BinPacking& bp);

}  // namespace gonflow
