// gonflow: command-line front end for the orientation / flow / domination
// solver toolkit.  Subcommand style; all files use the shared line-oriented
// text formats (see io.hpp).  Exit codes: 0 yes/ok, 1 no, 2 resource limit,
// 3 invalid input or usage.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <cctype>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gonflow/cds_dp.hpp"
#include "gonflow/common.hpp"
#include "gonflow/hardness.hpp"
#include "gonflow/ilp.hpp"
#include "gonflow/io.hpp"
#include "gonflow/oracles.hpp"
#include "gonflow/oro_dp.hpp"
#include "gonflow/reductions.hpp"
#include "gonflow/selftest.hpp"
#include "gonflow/tree_partition.hpp"

using namespace gonflow;
using nlohmann::json;

namespace {

constexpr int kYes = 0, kNo = 1, kResource = 2, kBadInput = 3;

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw input_error("cannot open " + path + " for writing");
  return f;
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << text << "\n";
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::string& what, const std::string& input,
                 const std::string& graph_file, const std::string& witness_file,
                 bool as_json) {
  if (what == "morphism") {
    MorphismFile mf = load_morphism(input);
    long long deg = validate_harmonic_morphism(mf.m);
    emit(as_json, {{"ok", true}, {"degree", deg}}, "ok degree=" + std::to_string(deg));
    return kYes;
  }
  if (what == "partition" || what == "pathdecomp") {
    if (graph_file.empty()) throw input_error("--graph is required for " + what);
    AnyInstance inst = load_instance(graph_file);
    const WeightedGraph* g = graph_of(inst);
    TreePartition tp = load_partition(input);
    if (what == "pathdecomp" || tp.pathdecomp) {
      std::vector<int> vertices;
      std::vector<std::pair<int, int>> edges;
      if (g) {
        vertices = g->vertices;
        for (const auto& e : g->edges) edges.push_back({e.u, e.v});
      } else {
        const auto& net = std::get<AonfInstance>(inst).net;
        vertices = net.nodes;
        for (const auto& a : net.arcs) edges.push_back({a.tail, a.head});
      }
      int width = validate_path_decomposition(vertices, edges, tp);
      emit(as_json, {{"ok", true}, {"width", width}}, "ok width=" + std::to_string(width));
      return kYes;
    }
    if (!g) throw input_error("tree partitions apply to graph-based instances");
    PartitionCheck pc = validate_tree_partition(*g, tp);
    emit(as_json, {{"ok", true}, {"breadth", pc.breadth}, {"max_bag", pc.max_bag}},
         "ok breadth=" + std::to_string(pc.breadth) +
             " max-bag=" + std::to_string(pc.max_bag));
    return kYes;
  }
  if (what == "witness") {
    if (witness_file.empty()) throw input_error("--witness is required");
    AnyInstance inst = load_instance(input);
    std::ifstream wf(witness_file);
    if (!wf) throw input_error("cannot open " + witness_file);
    AnyWitness w = parse_witness(wf, inst);
    WitnessReport rep = validate_witness(inst, w);
    json j{{"ok", rep.ok}, {"violations", rep.violations}};
    if (rep.ok) {
      emit(as_json, j, "ok");
      return kYes;
    }
    std::string text = "invalid";
    for (const auto& v : rep.violations) text += "\n  " + v;
    emit(as_json, j, text);
    return kNo;
  }
  throw input_error("validate target must be partition, morphism, pathdecomp, or witness");
}

// ---------------------------------------------------------------------------
// convert

int cmd_convert(const std::string& input, const std::string& out_partition,
                const std::string& out_graph, bool as_json) {
  MorphismFile mf = load_morphism(input);
  MorphismPartition mp = morphism_to_tree_partition(mf.g, mf.m);
  PartitionCheck pc = validate_tree_partition(mp.graph, mp.partition);
  if (!out_partition.empty()) {
    auto f = open_out(out_partition);
    write_partition(f, mp.partition);
  }
  if (!out_graph.empty()) {
    // the subdivided graph is emitted as a circulating-orientation instance:
    // the plain-graph carrier of the shared format
    CoInstance carrier;
    carrier.g = mp.graph;
    carrier.subdiv_origin = mp.subdiv_origin;
    auto f = open_out(out_graph);
    write_instance(f, AnyInstance{carrier});
  }
  emit(as_json,
       {{"ok", true},
        {"breadth", pc.breadth},
        {"nodes", mp.partition.nodes.size()},
        {"subdivision_vertices", mp.subdiv_origin.size()}},
       "ok breadth=" + std::to_string(pc.breadth) +
           " nodes=" + std::to_string(mp.partition.nodes.size()));
  return kYes;
}

// ---------------------------------------------------------------------------
// reduce

void write_provenance(const std::string& path, const std::vector<std::string>& lines) {
  if (path.empty()) return;
  auto f = open_out(path);
  f << "# provenance: output ids -> input ids\n";
  for (const auto& l : lines) f << l << "\n";
}

int cmd_reduce(const std::string& name, const std::string& input, const std::string& output,
               const std::string& partition_file, const std::string& partition_out,
               const std::string& provenance, bool as_json) {
  AnyInstance in = load_instance(input);
  AnyInstance out;
  std::vector<std::string> prov;
  std::optional<TreePartition> tp_out;

  auto need = [&](Problem p) {
    if (problem_of(in) != p)
      throw input_error("reduction " + name + " expects a " + problem_name(p) + " instance");
  };
  auto load_tp = [&]() {
    if (partition_file.empty())
      throw input_error("reduction " + name + " needs --partition");
    return load_partition(partition_file);
  };

  if (name == "too-oro") {
    need(Problem::TOO);
    out = lift_to_oro(std::get<TooInstance>(in));
    prov.push_back("edges identical");
  } else if (name == "cmo-oro") {
    need(Problem::CMO);
    out = lift_to_oro(std::get<CmoInstance>(in));
    prov.push_back("edges identical");
  } else if (name == "mmo-oro") {
    need(Problem::MMO);
    out = lift_to_oro(std::get<MmoInstance>(in));
    prov.push_back("edges identical");
  } else if (name == "co-oro") {
    need(Problem::CO);
    out = lift_to_oro(std::get<CoInstance>(in));
    prov.push_back("edges identical");
  } else if (name == "aonf-too") {
    need(Problem::AONF);
    const auto& a = std::get<AonfInstance>(in);
    AonfToToo red = aonf_to_too(a);
    out = red.out;
    for (const auto& [arc, img] : red.arc_image)
      prov.push_back("arc " + std::to_string(arc) + " -> mid " + std::to_string(img.mid) +
                     " halves " + std::to_string(img.half_tail) + " " +
                     std::to_string(img.half_head));
    if (!partition_file.empty()) tp_out = transport_partition_aonf(red, a, load_tp());
  } else if (name == "too-co") {
    need(Problem::TOO);
    TooToCo red = too_to_co(std::get<TooInstance>(in));
    out = red.out;
    prov.push_back("input edge ids preserved");
    if (red.s != -1)
      prov.push_back("supersource " + std::to_string(red.s) + " supersink " +
                     std::to_string(red.t) + " return-edge " + std::to_string(red.ts_edge));
  } else if (name == "too-cmo") {
    need(Problem::TOO);
    out = too_to_cmo(std::get<TooInstance>(in));
    prov.push_back("edges identical");
  } else if (name == "uflb-co") {
    need(Problem::UFLB);
    const auto& u = std::get<UflbInstance>(in);
    UflbToCo red = uflb_to_co(u, load_tp());
    if (red.early_no) {
      std::string cut;
      for (int e : red.cut_edges) cut += " " + std::to_string(e);
      emit(as_json, {{"early_no", true}, {"cut_edges", red.cut_edges}},
           "early-no: the demanded value exceeds the cut of edges" + cut);
      return kNo;
    }
    out = red.out;
    tp_out = red.partition;
    for (const auto& [e, img] : red.edge_image) {
      std::string line = "edge " + std::to_string(e) + " -> heavy";
      for (int h : img.heavy) line += " " + std::to_string(h);
      for (const auto& l : img.lights)
        line += " light " + std::to_string(l[0]) + "+" + std::to_string(l[1]);
      prov.push_back(line);
    }
  } else if (name == "cds-crbds") {
    need(Problem::CDS);
    const auto& c = std::get<CdsInstance>(in);
    CdsToCrbds red = cds_to_crbds(c);
    out = red.out;
    for (const auto& [v, r] : red.red_of)
      prov.push_back("vertex " + std::to_string(v) + " -> red " + std::to_string(r) +
                     " blue " + std::to_string(red.blue_of.at(v)));
    if (!partition_file.empty()) tp_out = transport_partition_cds(red, load_tp());
  } else {
    throw input_error(
        "unknown reduction; expected too-oro, cmo-oro, mmo-oro, co-oro, aonf-too, "
        "too-co, too-cmo, uflb-co, or cds-crbds");
  }

  {
    auto f = open_out(output);
    write_instance(f, out);
  }
  if (tp_out) {
    if (partition_out.empty())
      throw input_error("reduction produced a partition; pass --partition-out");
    auto f = open_out(partition_out);
    write_partition(f, *tp_out);
  }
  write_provenance(provenance, prov);
  emit(as_json, {{"ok", true}, {"output", output}}, "ok");
  return kYes;
}

// ---------------------------------------------------------------------------
// solve

int solve_domination(const AnyInstance& inst, const std::string& method,
                     const std::string& partition_file, const std::string& witness_out,
                     bool as_json) {
  long long budget =
      problem_of(inst) == Problem::CDS ? std::get<CdsInstance>(inst).budget
                                       : std::get<CrbdsInstance>(inst).budget;
  DominationStatus status;
  long long size = -1;
  DominationWitness witness;
  if (method == "fpt") {
    if (partition_file.empty()) throw input_error("--method fpt needs --partition");
    TreePartition tp = load_partition(partition_file);
    CdsDpResult r = problem_of(inst) == Problem::CDS
                        ? solve_cds(std::get<CdsInstance>(inst), tp)
                        : solve_crbds(std::get<CrbdsInstance>(inst), tp);
    status = r.status;
    size = r.min_size;
    witness = r.witness;
  } else {
    DominationResult r = problem_of(inst) == Problem::CDS
                             ? oracle_cds(std::get<CdsInstance>(inst))
                             : oracle_crbds(std::get<CrbdsInstance>(inst));
    if (!r.feasible)
      status = DominationStatus::Infeasible;
    else
      status = r.size <= budget ? DominationStatus::Yes : DominationStatus::OverBudget;
    size = r.feasible ? r.size : -1;
    witness = r.witness;
  }
  if (status == DominationStatus::Infeasible) {
    emit(as_json, {{"answer", "infeasible"}}, "infeasible");
    return kNo;
  }
  if (status == DominationStatus::OverBudget) {
    emit(as_json, {{"answer", "over-budget"}, {"size", size}},
         "over-budget size " + std::to_string(size));
    return kNo;
  }
  if (!witness_out.empty()) {
    auto f = open_out(witness_out);
    write_witness(f, inst, AnyWitness{witness});
  }
  emit(as_json, {{"answer", "yes"}, {"size", size}}, "size " + std::to_string(size));
  return kYes;
}

int cmd_solve(const std::string& problem, const std::string& input, const std::string& method,
              const std::string& partition_file, const std::string& witness_out,
              bool as_json) {
  if (method != "fpt" && method != "oracle")
    throw input_error("--method must be fpt or oracle");
  AnyInstance inst = load_instance(input);
  std::string upper = problem;
  for (char& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  auto want = problem_from_name(upper);
  if (!want) throw input_error("unknown problem " + problem);
  if (problem_of(inst) != *want)
    throw input_error("input file holds a " + problem_name(problem_of(inst)) + " instance");

  if (*want == Problem::CDS || *want == Problem::CRBDS)
    return solve_domination(inst, method, partition_file, witness_out, as_json);

  bool yes = false;
  AnyWitness witness;
  if (method == "fpt") {
    if (partition_file.empty()) throw input_error("--method fpt needs --partition");
    TreePartition tp = load_partition(partition_file);
    FamilyResult r = solve_family(inst, tp);
    yes = r.yes;
    witness = r.witness;
  } else {
    switch (*want) {
      case Problem::ORO:
        if (auto o = oracle_oro(std::get<OroInstance>(inst))) yes = true, witness = *o;
        break;
      case Problem::TOO:
        if (auto o = oracle_too(std::get<TooInstance>(inst))) yes = true, witness = *o;
        break;
      case Problem::CMO:
        if (auto o = oracle_cmo(std::get<CmoInstance>(inst))) yes = true, witness = *o;
        break;
      case Problem::MMO:
        if (auto o = oracle_mmo(std::get<MmoInstance>(inst))) yes = true, witness = *o;
        break;
      case Problem::CO:
        if (auto o = oracle_co(std::get<CoInstance>(inst))) yes = true, witness = *o;
        break;
      case Problem::UFLB:
        if (auto o = oracle_uflb(std::get<UflbInstance>(inst))) yes = true, witness = *o;
        break;
      default:
        if (auto o = oracle_aonf(std::get<AonfInstance>(inst))) yes = true, witness = *o;
        break;
    }
  }
  if (!yes) {
    emit(as_json, {{"answer", "no"}}, "no");
    return kNo;
  }
  if (!witness_out.empty()) {
    auto f = open_out(witness_out);
    write_witness(f, inst, witness);
  }
  emit(as_json, {{"answer", "yes"}}, "yes");
  return kYes;
}

// ---------------------------------------------------------------------------
// generate

int cmd_generate(const std::string& family, const std::string& machine_file,
                 const std::vector<long long>& items, long long size, int bins,
                 const std::string& output, const std::string& pathdecomp_out,
                 const std::string& manifest_out, bool as_json) {
  if (family == "nnccm-aonf") {
    if (machine_file.empty()) throw input_error("generate nnccm-aonf needs --machine");
    NnccmMachine m = load_machine(machine_file);
    NnccmAonf net = nnccm_to_aonf(m);
    {
      auto f = open_out(output);
      write_instance(f, AnyInstance{net.instance});
    }
    if (!pathdecomp_out.empty()) {
      auto f = open_out(pathdecomp_out);
      write_partition(f, net.pathdecomp);
    }
    if (!manifest_out.empty()) {
      auto f = open_out(manifest_out);
      f << "# nnccm-aonf manifest\n"
        << "counters " << m.counters << "\nbound " << m.bound << "\ntests "
        << m.tests.size() << "\nL " << net.L << "\nR " << net.R << "\n";
    }
    emit(as_json, {{"ok", true}, {"L", net.L}, {"R", net.R}},
         "ok L=" + std::to_string(net.L) + " R=" + std::to_string(net.R));
    return kYes;
  }
  if (family == "binpacking-too" || family == "binpacking-aonf") {
    BinPacking bp{items, size, bins};
    AnyInstance out = family == "binpacking-too" ? AnyInstance{binpacking_to_too(bp)}
                                                 : AnyInstance{binpacking_to_aonf(bp)};
    {
      auto f = open_out(output);
      write_instance(f, out);
    }
    if (!manifest_out.empty()) {
      auto f = open_out(manifest_out);
      f << "# bin-packing manifest\nitems";
      for (long long a : items) f << " " << a;
      f << "\nsize " << size << "\nbins " << bins << "\n";
    }
    emit(as_json, {{"ok", true}}, "ok");
    return kYes;
  }
  throw input_error("unknown family; expected nnccm-aonf, binpacking-too, or binpacking-aonf");
}

// ---------------------------------------------------------------------------
// ilp + selftest

int cmd_ilp(const std::string& input, bool as_json) {
  std::ifstream f(input);
  if (!f) throw input_error("cannot open " + input);
  IlpModel model = parse_ilp_model(f);
  IlpResult r = solve_ilp(model);
  if (r.status == IlpStatus::ResourceExceeded) {
    emit(as_json, {{"status", "resource-exceeded"}, {"nodes", r.nodes}}, "resource-exceeded");
    return kResource;
  }
  if (r.status == IlpStatus::Infeasible) {
    emit(as_json, {{"status", "infeasible"}}, "infeasible");
    return kNo;
  }
  json j{{"status", "optimal"}, {"objective", r.objective}};
  std::ostringstream text;
  text << "optimal";
  if (model.has_objective) text << " objective=" << r.objective;
  json vals = json::object();
  for (size_t i = 0; i < model.vars.size(); ++i) {
    vals[model.vars[i].name] = r.values[i];
    text << "\n" << model.vars[i].name << " = " << r.values[i];
  }
  j["values"] = vals;
  emit(as_json, j, text.str());
  return kYes;
}

int cmd_selftest(int criterion, bool as_json) {
  std::vector<CriterionOutcome> outcomes;
  if (criterion > 0) {
    CriterionOutcome c = run_criterion(criterion);
    std::cerr << "criterion " << c.id << " (" << c.name << "): "
              << (c.pass ? "PASS" : "FAIL") << " — " << c.detail << "\n";
    outcomes.push_back(std::move(c));
  } else {
    outcomes = run_all_criteria(&std::cerr);
  }
  bool all = true;
  json arr = json::array();
  for (const auto& c : outcomes) {
    all = all && c.pass;
    arr.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  if (as_json) std::cout << arr.dump() << "\n";
  return all ? kYes : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orientation, flow, and capacitated-domination solver toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "mirror results as JSON on stdout");

  std::string what, input, graph_file, witness_file;
  auto* validate = app.add_subcommand("validate", "check a partition, morphism, "
                                                  "path decomposition, or witness");
  validate->add_option("target", what, "partition|morphism|pathdecomp|witness")->required();
  validate->add_option("-i,--input", input, "file to validate (instance file for witness)")
      ->required();
  validate->add_option("-g,--graph", graph_file, "instance file carrying the graph");
  validate->add_option("-w,--witness", witness_file, "witness file");

  std::string conv_in, conv_part, conv_graph;
  auto* convert = app.add_subcommand("convert", "morphism-to-partition construction");
  convert->add_option("kind", what, "morphism-to-partition")->required();
  convert->add_option("-i,--input", conv_in, "morphism file")->required();
  convert->add_option("-o,--output", conv_part, "partition output file");
  convert->add_option("--graph-out", conv_graph, "subdivided graph output file");

  std::string red_name, red_in, red_out, red_part, red_part_out, red_prov;
  auto* reduce = app.add_subcommand("reduce", "apply a problem reduction");
  reduce->add_option("name", red_name, "too-oro|cmo-oro|mmo-oro|co-oro|aonf-too|too-co|"
                                       "too-cmo|uflb-co|cds-crbds")->required();
  reduce->add_option("-i,--input", red_in, "instance file")->required();
  reduce->add_option("-o,--output", red_out, "output instance file")->required();
  reduce->add_option("--partition", red_part, "tree partition of the input");
  reduce->add_option("--partition-out", red_part_out, "transported partition output");
  reduce->add_option("--provenance", red_prov, "sidecar id-mapping file");

  std::string sol_problem, sol_in, sol_method = "fpt", sol_part, sol_wit;
  auto* solve = app.add_subcommand("solve", "decide an instance");
  solve->add_option("problem", sol_problem, "oro|too|cmo|mmo|co|uflb|aonf|crbds|cds")
      ->required();
  solve->add_option("-i,--input", sol_in, "instance file")->required();
  solve->add_option("-m,--method", sol_method, "fpt (tree-partition DP) or oracle");
  solve->add_option("-p,--partition", sol_part, "tree partition file (fpt)");
  solve->add_option("-w,--witness", sol_wit, "witness output file");

  std::string gen_family, gen_machine, gen_out, gen_pd, gen_manifest;
  std::vector<long long> gen_items;
  long long gen_size = 0;
  int gen_bins = 0;
  auto* generate = app.add_subcommand("generate", "emit a hard-family instance");
  generate->add_option("family", gen_family, "nnccm-aonf|binpacking-too|binpacking-aonf")
      ->required();
  generate->add_option("--machine", gen_machine, "counter-machine file");
  generate->add_option("--items", gen_items, "bin-packing item sizes");
  generate->add_option("--size", gen_size, "bin size B");
  generate->add_option("--bins", gen_bins, "bin count k");
  generate->add_option("-o,--output", gen_out, "instance output file")->required();
  generate->add_option("--pathdecomp", gen_pd, "path decomposition output file");
  generate->add_option("--manifest", gen_manifest, "manifest output file");

  std::string ilp_action, ilp_in;
  auto* ilp = app.add_subcommand("ilp", "debug access to the integer-program solver");
  ilp->add_option("action", ilp_action, "solve")->required();
  ilp->add_option("input", ilp_in, "model file")->required();

  int st_criterion = 0;
  auto* selftest = app.add_subcommand("selftest", "run the acceptance corpus");
  selftest->add_option("-c,--criterion", st_criterion, "run a single criterion (1..9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (validate->parsed()) return cmd_validate(what, input, graph_file, witness_file, as_json);
    if (convert->parsed()) {
      if (what != "morphism-to-partition")
        throw input_error("unknown conversion " + what);
      return cmd_convert(conv_in, conv_part, conv_graph, as_json);
    }
    if (reduce->parsed())
      return cmd_reduce(red_name, red_in, red_out, red_part, red_part_out, red_prov, as_json);
    if (solve->parsed())
      return cmd_solve(sol_problem, sol_in, sol_method, sol_part, sol_wit, as_json);
    if (generate->parsed())
      return cmd_generate(gen_family, gen_machine, gen_items, gen_size, gen_bins, gen_out,
                          gen_pd, gen_manifest, as_json);
    if (ilp->parsed()) {
      if (ilp_action != "solve") throw input_error("unknown ilp action " + ilp_action);
      return cmd_ilp(ilp_in, as_json);
    }
    if (selftest->parsed()) return cmd_selftest(st_criterion, as_json);
    return kBadInput;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kBadInput;
  } catch (const resource_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  }
}
