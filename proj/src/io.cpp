#include "gonflow/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gonflow/common.hpp"

namespace gonflow {

namespace {

std::vector<std::vector<std::string>> read_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

long long to_ll(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw input_error("not an integer: '" + s + "'");
  }
}

int to_int(const std::string& s) {
  long long v = to_ll(s);
  if (v < INT32_MIN || v > INT32_MAX) throw input_error("value out of range: " + s);
  return static_cast<int>(v);
}

void need(const std::vector<std::string>& t, size_t n) {
  if (t.size() != n)
    throw input_error("malformed line starting with '" + t[0] + "'");
}

void need_at_least(const std::vector<std::string>& t, size_t n) {
  if (t.size() < n)
    throw input_error("malformed line starting with '" + t[0] + "'");
}

}  // namespace

AnyInstance parse_instance(std::istream& in) {
  auto lines = read_lines(in);
  std::string prob;
  WeightedGraph g;
  FlowNetwork net;
  std::map<int, long long> lower, nums;   // lower bounds; target/bound/cap values
  std::map<int, Interval> intervals;
  std::map<int, int> subdiv;
  std::set<int> red, blue;
  std::map<int, int> mate;
  long long maxout = -1, value = -1, budget = -1;
  int source = -1, sink = -1;
  bool trivial_no = false;
  bool saw_arc = false;

  for (const auto& t : lines) {
    const std::string& k = t[0];
    if (k == "problem") {
      need(t, 2);
      prob = t[1];
    } else if (k == "v") {
      need(t, 2);
      g.vertices.push_back(to_int(t[1]));
      net.nodes.push_back(to_int(t[1]));
    } else if (k == "e") {
      if (t.size() != 5 && t.size() != 6) throw input_error("malformed e line");
      g.edges.push_back({to_int(t[1]), to_int(t[2]), to_int(t[3]), to_ll(t[4])});
      if (t.size() == 6) lower[to_int(t[1])] = to_ll(t[5]);
    } else if (k == "arc") {
      if (t.size() != 5 && t.size() != 6) throw input_error("malformed arc line");
      Arc a{to_int(t[1]), to_int(t[2]), to_int(t[3]), to_ll(t[4]),
            t.size() == 6 ? to_ll(t[5]) : 0};
      net.arcs.push_back(a);
      saw_arc = true;
    } else if (k == "interval") {
      need(t, 4);
      intervals[to_int(t[1])] = {to_ll(t[2]), to_ll(t[3])};
    } else if (k == "target" || k == "bound" || k == "cap") {
      need(t, 3);
      nums[to_int(t[1])] = to_ll(t[2]);
    } else if (k == "maxout") {
      need(t, 2);
      maxout = to_ll(t[1]);
    } else if (k == "value") {
      need(t, 2);
      value = to_ll(t[1]);
    } else if (k == "budget") {
      need(t, 2);
      budget = to_ll(t[1]);
    } else if (k == "source") {
      need(t, 2);
      source = to_int(t[1]);
    } else if (k == "sink") {
      need(t, 2);
      sink = to_int(t[1]);
    } else if (k == "red" || k == "blue") {
      need_at_least(t, 2);
      for (size_t i = 1; i < t.size(); ++i)
        (k == "red" ? red : blue).insert(to_int(t[i]));
    } else if (k == "mate") {
      need(t, 3);
      mate[to_int(t[1])] = to_int(t[2]);
    } else if (k == "subdiv") {
      need(t, 3);
      subdiv[to_int(t[1])] = to_int(t[2]);
    } else if (k == "trivialno") {
      need(t, 1);
      trivial_no = true;
    } else {
      throw input_error("unknown directive '" + k + "'");
    }
  }

  auto p = problem_from_name(prob);
  if (!p) throw input_error("missing or unknown problem name '" + prob + "'");

  AnyInstance inst;
  switch (*p) {
    case Problem::ORO: {
      OroInstance x{std::move(g), std::move(intervals), std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
    case Problem::TOO: {
      TooInstance x{std::move(g), std::move(nums), std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
    case Problem::CMO: {
      CmoInstance x{std::move(g), std::move(nums), std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
    case Problem::MMO: {
      if (maxout < 0) throw input_error("MMO needs a maxout line");
      MmoInstance x{std::move(g), maxout, std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
    case Problem::CO: {
      CoInstance x{std::move(g), std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
    case Problem::UFLB: {
      if (value < 0) throw input_error("UFLB needs a value line");
      UflbInstance x{std::move(g), std::move(lower), source, sink, value};
      inst = std::move(x);
      break;
    }
    case Problem::AONF: {
      if (!saw_arc) throw input_error("AONF needs arc lines");
      if (value < 0) throw input_error("AONF needs a value line");
      net.source = source;
      net.sink = sink;
      AonfInstance x{std::move(net), value};
      inst = std::move(x);
      break;
    }
    case Problem::CDS: {
      if (budget < 0) throw input_error("CDS needs a budget line");
      CdsInstance x{std::move(g), std::move(nums), budget};
      inst = std::move(x);
      break;
    }
    case Problem::CRBDS: {
      if (budget < 0) throw input_error("CRBDS needs a budget line");
      CrbdsInstance x{std::move(g), std::move(red), std::move(blue),
                      std::move(nums), std::move(mate), budget, std::move(subdiv), trivial_no};
      inst = std::move(x);
      break;
    }
  }
  validate_instance(inst);
  return inst;
}

AnyInstance load_instance(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  return parse_instance(f);
}

namespace {

void write_graph(std::ostream& out, const WeightedGraph& g,
                 const std::map<int, long long>* lower = nullptr) {
  for (int v : g.vertices) out << "v " << v << "\n";
  for (const auto& e : g.edges) {
    out << "e " << e.id << " " << e.u << " " << e.v << " " << e.w;
    if (lower && lower->count(e.id)) out << " " << lower->at(e.id);
    out << "\n";
  }
}

void write_subdiv(std::ostream& out, const std::map<int, int>& subdiv, bool trivial_no) {
  for (const auto& [v, e] : subdiv) out << "subdiv " << v << " " << e << "\n";
  if (trivial_no) out << "trivialno\n";
}

}  // namespace

void write_instance(std::ostream& out, const AnyInstance& inst) {
  out << "problem " << problem_name(problem_of(inst)) << "\n";
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, OroInstance>) {
          write_graph(out, x.g);
          for (const auto& [v, iv] : x.interval)
            out << "interval " << v << " " << iv.lo << " " << iv.hi << "\n";
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        } else if constexpr (std::is_same_v<T, TooInstance>) {
          write_graph(out, x.g);
          for (const auto& [v, d] : x.target) out << "target " << v << " " << d << "\n";
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        } else if constexpr (std::is_same_v<T, CmoInstance>) {
          write_graph(out, x.g);
          for (const auto& [v, m] : x.bound) out << "bound " << v << " " << m << "\n";
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        } else if constexpr (std::is_same_v<T, MmoInstance>) {
          write_graph(out, x.g);
          out << "maxout " << x.max_out << "\n";
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        } else if constexpr (std::is_same_v<T, CoInstance>) {
          write_graph(out, x.g);
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        } else if constexpr (std::is_same_v<T, UflbInstance>) {
          write_graph(out, x.g, &x.lower);
          out << "source " << x.s << "\nsink " << x.t << "\nvalue " << x.value << "\n";
        } else if constexpr (std::is_same_v<T, AonfInstance>) {
          for (int v : x.net.nodes) out << "v " << v << "\n";
          for (const auto& a : x.net.arcs)
            out << "arc " << a.id << " " << a.tail << " " << a.head << " " << a.cap << "\n";
          out << "source " << x.net.source << "\nsink " << x.net.sink << "\nvalue "
              << x.value << "\n";
        } else if constexpr (std::is_same_v<T, CdsInstance>) {
          write_graph(out, x.g);
          for (const auto& [v, c] : x.cap) out << "cap " << v << " " << c << "\n";
          out << "budget " << x.budget << "\n";
        } else {
          write_graph(out, x.g);
          out << "red";
          for (int v : x.red) out << " " << v;
          out << "\nblue";
          for (int v : x.blue) out << " " << v;
          out << "\n";
          for (const auto& [v, c] : x.cap) out << "cap " << v << " " << c << "\n";
          for (const auto& [r, b] : x.mate) out << "mate " << r << " " << b << "\n";
          out << "budget " << x.budget << "\n";
          write_subdiv(out, x.subdiv_origin, x.trivial_no);
        }
      },
      inst);
}

TreePartition parse_partition(std::istream& in) {
  TreePartition tp;
  for (const auto& t : read_lines(in)) {
    const std::string& k = t[0];
    if (k == "tnode") {
      need(t, 2);
      tp.nodes.push_back(to_int(t[1]));
      tp.bag[to_int(t[1])];
    } else if (k == "tarc") {
      need(t, 3);
      tp.arcs.push_back({to_int(t[1]), to_int(t[2])});
    } else if (k == "bag") {
      need_at_least(t, 2);
      auto& b = tp.bag[to_int(t[1])];
      for (size_t i = 2; i < t.size(); ++i) b.insert(to_int(t[i]));
    } else if (k == "root") {
      need(t, 2);
      tp.root = to_int(t[1]);
    } else if (k == "pathdecomp") {
      tp.pathdecomp = true;
    } else {
      throw input_error("unknown partition directive '" + k + "'");
    }
  }
  return tp;
}

TreePartition load_partition(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  return parse_partition(f);
}

void write_partition(std::ostream& out, const TreePartition& tp) {
  for (int n : tp.nodes) out << "tnode " << n << "\n";
  for (auto [a, b] : tp.arcs) out << "tarc " << a << " " << b << "\n";
  for (int n : tp.nodes) {
    auto it = tp.bag.find(n);
    if (it == tp.bag.end() || it->second.empty()) continue;
    out << "bag " << n;
    for (int v : it->second) out << " " << v;
    out << "\n";
  }
  if (tp.root != -1) out << "root " << tp.root << "\n";
  if (tp.pathdecomp) out << "pathdecomp\n";
}

MorphismFile parse_morphism(std::istream& in) {
  MorphismFile mf;
  for (const auto& t : read_lines(in)) {
    const std::string& k = t[0];
    if (k == "v") {
      need(t, 2);
      mf.g.vertices.push_back(to_int(t[1]));
    } else if (k == "e") {
      need(t, 5);
      mf.g.edges.push_back({to_int(t[1]), to_int(t[2]), to_int(t[3]), to_ll(t[4])});
    } else if (k == "tnode") {
      need(t, 2);
      mf.m.tree.nodes.push_back(to_int(t[1]));
    } else if (k == "tarc") {
      need(t, 3);
      mf.m.tree.arcs.push_back({to_int(t[1]), to_int(t[2])});
    } else if (k == "vmap") {
      need(t, 3);
      mf.m.vmap[to_int(t[1])] = to_int(t[2]);
    } else if (k == "emap") {
      need(t, 3);
      mf.m.emap[to_int(t[1])] = to_int(t[2]);
    } else if (k == "index") {
      need(t, 3);
      mf.m.index[to_int(t[1])] = to_ll(t[2]);
    } else if (k == "refine") {
      need(t, 3);
      RefinementOp op;
      if (t[1] == "subdivide") op.kind = RefinementOp::Subdivide;
      else if (t[1] == "leaf") op.kind = RefinementOp::AddLeaf;
      else throw input_error("unknown refine op '" + t[1] + "'");
      op.target = to_int(t[2]);
      mf.m.trace.ops.push_back(op);
    } else {
      throw input_error("unknown morphism directive '" + k + "'");
    }
  }
  mf.g.validate();
  mf.m.has_trace = true;
  auto base = weighted_to_multigraph(mf.g);
  mf.m.source = replay_refinement(base.graph, mf.m.trace).graph;
  // edges with no explicit index default to 1
  for (const auto& e : mf.m.source.edges)
    if (!mf.m.index.count(e.id)) mf.m.index[e.id] = 1;
  return mf;
}

MorphismFile load_morphism(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  return parse_morphism(f);
}

void write_morphism(std::ostream& out, const MorphismFile& mf) {
  write_graph(out, mf.g);
  for (int n : mf.m.tree.nodes) out << "tnode " << n << "\n";
  for (auto [a, b] : mf.m.tree.arcs) out << "tarc " << a << " " << b << "\n";
  for (const auto& op : mf.m.trace.ops)
    out << "refine " << (op.kind == RefinementOp::Subdivide ? "subdivide" : "leaf") << " "
        << op.target << "\n";
  for (const auto& [v, n] : mf.m.vmap) out << "vmap " << v << " " << n << "\n";
  for (const auto& [e, a] : mf.m.emap) out << "emap " << e << " " << a << "\n";
  for (const auto& [e, r] : mf.m.index)
    if (r != 1) out << "index " << e << " " << r << "\n";
}

AnyWitness parse_witness(std::istream& in, const AnyInstance& inst) {
  Orientation o;
  Flow flow;
  DominationWitness dw;
  const WeightedGraph* g = graph_of(inst);
  bool saw_orient = false;
  for (const auto& t : read_lines(in)) {
    const std::string& k = t[0];
    if (k == "orient") {
      need(t, 4);
      if (!g) throw input_error("orient line in a witness for a network problem");
      const WeightedEdge* e = g->edge_by_id(to_int(t[1]));
      if (!e) throw input_error("orient line names unknown edge " + t[1]);
      o.set(*e, to_int(t[2]), to_int(t[3]));
      saw_orient = true;
    } else if (k == "flow") {
      need(t, 3);
      flow[to_int(t[1])] = to_ll(t[2]);
    } else if (k == "dominator") {
      need(t, 2);
      dw.dominators.insert(to_int(t[1]));
    } else if (k == "assign") {
      need(t, 3);
      dw.assign[to_int(t[1])] = to_int(t[2]);
    } else {
      throw input_error("unknown witness directive '" + k + "'");
    }
  }
  switch (problem_of(inst)) {
    case Problem::AONF:
      return flow;
    case Problem::CDS:
    case Problem::CRBDS:
      return dw;
    case Problem::UFLB: {
      UflbWitness uw{std::move(o), std::move(flow)};
      return uw;
    }
    default:
      if (!saw_orient) throw input_error("witness has no orient lines");
      return o;
  }
}

void write_witness(std::ostream& out, const AnyInstance& inst, const AnyWitness& w) {
  const WeightedGraph* g = graph_of(inst);
  auto write_orient = [&](const Orientation& o) {
    for (const auto& e : g->edges)
      out << "orient " << e.id << " " << o.tail_of(e) << " " << o.head_of(e) << "\n";
  };
  if (std::holds_alternative<Orientation>(w)) {
    write_orient(std::get<Orientation>(w));
    return;
  }
  if (std::holds_alternative<UflbWitness>(w)) {
    const auto& uw = std::get<UflbWitness>(w);
    write_orient(uw.orientation);
    std::map<int, long long> sorted(uw.flow.begin(), uw.flow.end());
    for (const auto& [e, f] : sorted) out << "flow " << e << " " << f << "\n";
    return;
  }
  if (std::holds_alternative<Flow>(w)) {
    std::map<int, long long> sorted(std::get<Flow>(w).begin(), std::get<Flow>(w).end());
    for (const auto& [a, f] : sorted) out << "flow " << a << " " << f << "\n";
    return;
  }
  const auto& dw = std::get<DominationWitness>(w);
  for (int d : dw.dominators) out << "dominator " << d << "\n";
  for (const auto& [b, r] : dw.assign) out << "assign " << b << " " << r << "\n";
}

IlpModel parse_ilp_model(std::istream& in) {
  IlpModel model;
  std::map<std::string, int> byname;
  auto var_of = [&](const std::string& n) {
    auto it = byname.find(n);
    if (it == byname.end()) throw input_error("unknown variable '" + n + "'");
    return it->second;
  };
  auto parse_terms = [&](const std::vector<std::string>& t, size_t from, size_t to) {
    std::vector<IlpTerm> terms;
    for (size_t i = from; i < to; ++i) {
      if (t[i] == "+") continue;
      auto star = t[i].find('*');
      if (star == std::string::npos)
        throw input_error("expected coef*var, got '" + t[i] + "'");
      terms.push_back({to_ll(t[i].substr(0, star)), var_of(t[i].substr(star + 1))});
    }
    return terms;
  };
  for (const auto& t : read_lines(in)) {
    if (t[0] == "var") {
      need(t, 4);
      if (byname.count(t[1])) throw input_error("duplicate variable '" + t[1] + "'");
      byname[t[1]] = model.add_var(t[1], to_ll(t[2]), to_ll(t[3]));
    } else if (t[0] == "con") {
      if (t.size() < 4) throw input_error("malformed con line");
      size_t relpos = 0;
      IlpRel rel = IlpRel::LE;
      for (size_t i = 1; i + 1 < t.size(); ++i) {
        if (t[i] == "<=" || t[i] == ">=" || t[i] == "=") {
          relpos = i;
          rel = t[i] == "<=" ? IlpRel::LE : (t[i] == ">=" ? IlpRel::GE : IlpRel::EQ);
          break;
        }
      }
      if (relpos == 0 || relpos + 2 != t.size())
        throw input_error("constraint needs '<relation> <rhs>' at the end");
      model.add_con(parse_terms(t, 1, relpos), rel, to_ll(t.back()));
    } else if (t[0] == "min") {
      model.set_objective(parse_terms(t, 1, t.size()));
    } else {
      throw input_error("unknown ilp directive '" + t[0] + "'");
    }
  }
  return model;
}

}  // namespace gonflow
