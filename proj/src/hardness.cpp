#include "gonflow/hardness.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gonflow/common.hpp"

namespace gonflow {

void NnccmMachine::validate() const {
  if (counters < 1) throw input_error("machine needs at least one counter");
  if (bound < 0) throw input_error("counter bound must be non-negative");
  for (const auto& t : tests) {
    if (t.i < 1 || t.i > counters || t.j < 1 || t.j > counters)
      throw input_error("test names a counter outside [1,k]");
    if (t.a < 0 || t.a > bound || t.b < 0 || t.b > bound)
      throw input_error("test value outside [0,B]");
  }
}

NnccmOutcome simulate_nnccm(const NnccmMachine& m, const NnccmRun& run) {
  m.validate();
  if (run.values.size() != m.tests.size())
    throw input_error("run length differs from test count");
  std::vector<long long> prev(m.counters, 0);
  for (size_t t = 0; t < m.tests.size(); ++t) {
    const auto& c = run.values[t];
    if (c.size() != static_cast<size_t>(m.counters))
      throw input_error("run entry has wrong counter count");
    for (int i = 0; i < m.counters; ++i) {
      if (c[i] < prev[i]) throw input_error("run decreases a counter");
      if (c[i] > m.bound) throw input_error("run exceeds the bound");
    }
    const auto& test = m.tests[t];
    if (c[test.i - 1] == test.a && c[test.j - 1] == test.b)
      return {false, static_cast<int>(t) + 1};
    prev = c;
  }
  return {true, -1};
}

NnccmMachine parse_machine(std::istream& in) {
  NnccmMachine m;
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string k;
    if (!(ls >> k)) continue;
    if (k == "counters") {
      if (!(ls >> m.counters)) throw input_error("malformed counters line");
    } else if (k == "bound") {
      if (!(ls >> m.bound)) throw input_error("malformed bound line");
    } else if (k == "test") {
      NnccmTest t;
      if (!(ls >> t.i >> t.a >> t.j >> t.b)) throw input_error("malformed test line");
      m.tests.push_back(t);
    } else {
      throw input_error("unknown machine directive '" + k + "'");
    }
  }
  m.validate();
  return m;
}

NnccmMachine load_machine(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  return parse_machine(f);
}

void write_machine(std::ostream& out, const NnccmMachine& m) {
  out << "counters " << m.counters << "\nbound " << m.bound << "\n";
  for (const auto& t : m.tests)
    out << "test " << t.i << " " << t.a << " " << t.j << " " << t.b << "\n";
}

NnccmAonf nnccm_to_aonf(const NnccmMachine& m) {
  m.validate();
  NnccmAonf out;
  int k = m.counters;
  long long B = m.bound;
  int n = static_cast<int>(m.tests.size());
  out.L = checked_mul(checked_mul(4LL * k, std::max<long long>(n, 1)), std::max<long long>(B, 1));
  // L is nominally 4knB, but degenerate n=0 or B=0
  // still needs L>0 for the capacities to be positive
  if (n > 0 && B > 0) out.L = 4LL * k * n * B;
  out.R = k * (out.L + 2 * B);

  FlowNetwork& net = out.instance.net;
  out.instance.value = out.R;
  int s = 0, t = 1;
  net.source = s;
  net.sink = t;
  net.nodes = {s, t};
  int next_v = 2;
  // v[j][t], w[j][t] for j in [1,k], t in [0,n]
  std::vector<std::vector<int>> v(k + 1, std::vector<int>(n + 1));
  std::vector<std::vector<int>> w(k + 1, std::vector<int>(n + 1));
  for (int j = 1; j <= k; ++j)
    for (int tt = 0; tt <= n; ++tt) {
      v[j][tt] = next_v++;
      w[j][tt] = next_v++;
      net.nodes.push_back(v[j][tt]);
      net.nodes.push_back(w[j][tt]);
    }
  std::vector<int> x1(n + 1), x2(n + 1);
  for (int i = 1; i <= n; ++i) {
    x1[i] = next_v++;
    x2[i] = next_v++;
    net.nodes.push_back(x1[i]);
    net.nodes.push_back(x2[i]);
  }

  int next_a = 1;
  auto add = [&](int tail, int head, long long cap, std::string role) {
    out.raw_arcs.push_back({next_a, tail, head, cap, 0});
    out.role[next_a] = std::move(role);
    ++next_a;
  };
  for (int j = 1; j <= k; ++j)
    add(s, v[j][0], out.L, "src " + std::to_string(j));
  for (int j = 1; j <= k; ++j)
    add(w[j][n], t, out.L + 2 * B, "snk " + std::to_string(j));
  for (int j = 1; j <= k; ++j)
    for (int tt = 0; tt <= n; ++tt)
      for (long long q = 1; q <= B; ++q)
        add(s, w[j][tt], 2,
            "topup " + std::to_string(j) + " " + std::to_string(tt) + " " + std::to_string(q));
  for (int j = 1; j <= k; ++j)
    for (int tt = 0; tt <= n; ++tt)
      for (long long alpha = 0; alpha <= B; ++alpha)
        add(v[j][tt], w[j][tt], out.L + 2 * alpha,
            "vw " + std::to_string(j) + " " + std::to_string(tt) + " " + std::to_string(alpha));
  for (int j = 1; j <= k; ++j)
    for (int tt = 0; tt <= n - 1; ++tt)
      for (long long alpha = 0; alpha <= B; ++alpha) {
        const auto& test = m.tests[tt];  // the (tt+1)-st check
        // One unit is diverted through the checkpoint per half of the test
        // that checks counter j against alpha.  A test with both halves on
        // the same counter and value diverts two units, which the capacity-1
        // checkpoint cannot carry -- exactly the single-counter reject case.
        int firing = (test.i == j && test.a == alpha ? 1 : 0) +
                     (test.j == j && test.b == alpha ? 1 : 0);
        add(w[j][tt], v[j][tt + 1], out.L + 2 * alpha - firing,
            "wv " + std::to_string(j) + " " + std::to_string(tt) + " " + std::to_string(alpha));
      }
  for (int i = 1; i <= n; ++i) {
    const auto& test = m.tests[i - 1];
    add(w[test.i][i - 1], x1[i], 1, "chk1a " + std::to_string(i));
    add(w[test.j][i - 1], x1[i], 1, "chk1b " + std::to_string(i));
    add(x1[i], x2[i], 1, "chk12 " + std::to_string(i));
    add(x2[i], v[test.i][i], 1, "chk2a " + std::to_string(i));
    add(x2[i], v[test.j][i], 1, "chk2b " + std::to_string(i));
  }

  // split every arc belonging to a parallel (tail, head) group
  std::map<std::pair<int, int>, int> mult;
  for (const auto& a : out.raw_arcs) mult[{a.tail, a.head}]++;
  std::map<int, int> arc_home_bag;  // subdivision vertex -> bag index, later
  for (const auto& a : out.raw_arcs) {
    if (mult[{a.tail, a.head}] < 2) {
      net.arcs.push_back(a);
      continue;
    }
    int y = next_v++;
    net.nodes.push_back(y);
    int h1 = next_a++, h2 = next_a++;
    net.arcs.push_back({h1, a.tail, y, a.cap, 0});
    net.arcs.push_back({h2, y, a.head, a.cap, 0});
    out.role[h1] = out.role.at(a.id) + " h1";
    out.role[h2] = out.role.at(a.id) + " h2";
    out.subdivided_from[y] = a.id;
    out.split[a.id] = {h1, h2};
  }
  (void)arc_home_bag;

  // path decomposition: base bags X_0..X_{n-1} (single bag when n = 0),
  // with one extra bag spliced in per subdivision vertex
  std::vector<std::set<int>> base;
  if (n == 0) {
    std::set<int> all(net.nodes.begin(), net.nodes.end());
    for (const auto& [y, raw] : out.subdivided_from) all.erase(y);
    base.push_back(all);
  } else {
    for (int i = 0; i <= n - 1; ++i) {
      std::set<int> bag{s, t, x1[i + 1], x2[i + 1]};
      for (int j = 1; j <= k; ++j) {
        bag.insert(v[j][i]);
        bag.insert(v[j][i + 1]);
        bag.insert(w[j][i]);
        bag.insert(w[j][i + 1]);
      }
      base.push_back(std::move(bag));
    }
  }
  // home bag of a raw arc (both endpoints present there)
  auto home_of = [&](const Arc& a) {
    for (size_t i = 0; i < base.size(); ++i)
      if (base[i].count(a.tail) && base[i].count(a.head)) return static_cast<int>(i);
    throw input_error("internal: arc endpoints share no bag");
  };
  std::vector<std::vector<std::set<int>>> inserted(base.size());
  for (const auto& a : out.raw_arcs) {
    auto it = out.split.find(a.id);
    if (it == out.split.end()) continue;
    int y = -1;
    for (const auto& [yy, raw] : out.subdivided_from)
      if (raw == a.id) y = yy;
    int h = home_of(a);
    std::set<int> bag = base[h];
    bag.insert(y);
    inserted[h].push_back(std::move(bag));
  }
  TreePartition& tp = out.pathdecomp;
  tp.pathdecomp = true;
  int node = 0;
  auto push_bag = [&](std::set<int> bag) {
    ++node;
    tp.nodes.push_back(node);
    tp.bag[node] = std::move(bag);
    if (node > 1) tp.arcs.push_back({node - 1, node});
  };
  for (size_t i = 0; i < base.size(); ++i) {
    push_bag(base[i]);
    for (auto& extra : inserted[i]) push_bag(std::move(extra));
  }
  tp.root = 1;
  return out;
}

Flow witness_flow_from_run(const NnccmMachine& m, const NnccmRun& run,
                           const NnccmAonf& net) {
  auto outcome = simulate_nnccm(m, run);
  if (!outcome.accept)
    throw input_error("run rejects at test " + std::to_string(outcome.reject_at));
  int k = m.counters;
  long long B = m.bound;
  int n = static_cast<int>(m.tests.size());
  // a[j][t] = counter j's value during check t; a[j][0] = 0, a[j][n+1] = B
  std::vector<std::vector<long long>> a(k + 1, std::vector<long long>(n + 2, 0));
  for (int t = 1; t <= n; ++t)
    for (int j = 1; j <= k; ++j) a[j][t] = run.values[t - 1][j - 1];
  for (int j = 1; j <= k; ++j) a[j][n + 1] = B;

  std::map<std::string, const Arc*> by_role;
  for (const auto& arc : net.raw_arcs) by_role[net.role.at(arc.id)] = &arc;
  Flow raw;
  for (const auto& arc : net.raw_arcs) raw[arc.id] = 0;
  auto use = [&](const std::string& role) {
    const Arc* arc = by_role.at(role);
    raw[arc->id] = arc->cap;
  };
  auto tag3 = [](const std::string& p, int x, int y, long long z) {
    return p + " " + std::to_string(x) + " " + std::to_string(y) + " " + std::to_string(z);
  };
  for (int j = 1; j <= k; ++j) {
    use("src " + std::to_string(j));
    use("snk " + std::to_string(j));
    for (int t = 0; t <= n; ++t) {
      use(tag3("vw", j, t, a[j][t]));
      for (long long q = 1; q <= a[j][t + 1] - a[j][t]; ++q) use(tag3("topup", j, t, q));
      if (t < n) {
        use(tag3("wv", j, t, a[j][t + 1]));
        const auto& test = m.tests[t];  // check t+1
        bool fires =
            (test.i == j && test.a == a[j][t + 1]) || (test.j == j && test.b == a[j][t + 1]);
        if (fires) {
          bool first_half = test.i == j && test.a == a[j][t + 1];
          use((first_half ? "chk1a " : "chk1b ") + std::to_string(t + 1));
          use("chk12 " + std::to_string(t + 1));
          use((first_half ? "chk2a " : "chk2b ") + std::to_string(t + 1));
        }
      }
    }
  }
  // expand to the subdivided network
  Flow f;
  for (const auto& arc : net.raw_arcs) {
    auto it = net.split.find(arc.id);
    if (it == net.split.end()) {
      f[arc.id] = raw[arc.id];
    } else {
      f[it->second.first] = raw[arc.id];
      f[it->second.second] = raw[arc.id];
    }
  }
  return f;
}

void BinPacking::validate() const {
  if (bins < 1) throw input_error("need at least one bin");
  if (size < 0) throw input_error("bin size must be non-negative");
  long long sum = 0;
  for (long long a : items) {
    if (a < 1) throw input_error("item sizes must be positive");
    sum = checked_add(sum, a);
  }
  if (sum != checked_mul(size, static_cast<long long>(bins)))
    throw input_error("item sizes must sum to size * bins");
}

TooInstance binpacking_to_too(const BinPacking& bp) {
  bp.validate();
  int k = bp.bins;
  int n = static_cast<int>(bp.items.size());
  TooInstance inst;
  for (int j = 1; j <= k; ++j) {
    inst.g.vertices.push_back(j);
    inst.target[j] = bp.size * k - bp.size;  // Bk - B
  }
  for (int i = 1; i <= n; ++i) {
    inst.g.vertices.push_back(k + i);
    inst.target[k + i] = bp.items[i - 1];
  }
  int id = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      inst.g.edges.push_back({++id, j, k + i, bp.items[i - 1]});
  return inst;
}

AonfInstance binpacking_to_aonf(const BinPacking& bp) {
  bp.validate();
  int k = bp.bins;
  int n = static_cast<int>(bp.items.size());
  AonfInstance inst;
  inst.value = bp.size * k;
  FlowNetwork& net = inst.net;
  int s = 0, t = 1;
  net.source = s;
  net.sink = t;
  net.nodes = {s, t};
  auto item = [&](int i) { return 1 + i; };        // 2..n+1
  auto bin = [&](int j) { return 1 + n + j; };     // n+2..n+k+1
  for (int i = 1; i <= n; ++i) net.nodes.push_back(item(i));
  for (int j = 1; j <= k; ++j) net.nodes.push_back(bin(j));
  int id = 0;
  for (int i = 1; i <= n; ++i) net.arcs.push_back({++id, s, item(i), bp.items[i - 1], 0});
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= k; ++j)
      net.arcs.push_back({++id, item(i), bin(j), bp.items[i - 1], 0});
  for (int j = 1; j <= k; ++j) net.arcs.push_back({++id, bin(j), t, bp.size, 0});
  return inst;
}

}  // namespace gonflow
