#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "gonflow/io.hpp"
#include "gonflow/oracles.hpp"
#include "helpers.hpp"

using namespace gonflow;
using gonflow::testing::make_graph;
using gonflow::testing::path_bags;

TEST_CASE("instance files round-trip") {
  SUBCASE("target-outdegree instance") {
    TooInstance in{make_graph(3, {{1, 2, 2}, {2, 3, 1}}), {{1, 2}, {2, 1}, {3, 0}}};
    std::stringstream s;
    write_instance(s, AnyInstance{in});
    AnyInstance back = parse_instance(s);
    REQUIRE(problem_of(back) == Problem::TOO);
    const auto& t = std::get<TooInstance>(back);
    CHECK(t.g.edges.size() == 2);
    CHECK(t.target.at(1) == 2);
  }
  SUBCASE("flow network instance") {
    AonfInstance in;
    in.net.nodes = {1, 2};
    in.net.arcs = {{1, 1, 2, 3}};
    in.net.source = 1;
    in.net.sink = 2;
    in.value = 3;
    std::stringstream s;
    write_instance(s, AnyInstance{in});
    AnyInstance back = parse_instance(s);
    const auto& a = std::get<AonfInstance>(back);
    CHECK(a.value == 3);
    CHECK(a.net.arcs.at(0).cap == 3);
  }
  SUBCASE("red-blue instance keeps mates and capacities") {
    CrbdsInstance in;
    in.g = make_graph(2, {{1, 2, 1}});
    in.red = {1};
    in.blue = {2};
    in.cap = {{1, 2}};
    in.mate = {{1, 2}};
    in.budget = 1;
    std::stringstream s;
    write_instance(s, AnyInstance{in});
    const auto& c = std::get<CrbdsInstance>(parse_instance(s));
    CHECK(c.mate.at(1) == 2);
    CHECK(c.cap.at(1) == 2);
  }
  SUBCASE("parse errors carry diagnostics") {
    std::stringstream s("problem TOO\nv 1\ne nonsense\n");
    CHECK_THROWS_AS(parse_instance(s), input_error);
  }
}

TEST_CASE("partition and witness files round-trip") {
  TreePartition tp = path_bags({{1}, {2, 4}, {3}});
  std::stringstream s;
  write_partition(s, tp);
  TreePartition back = parse_partition(s);
  CHECK(back.nodes.size() == 3);
  CHECK(back.bag.at(1) == std::set<int>{2, 4});
  CHECK(back.root == 0);

  TooInstance in{make_graph(2, {{1, 2, 1}}), {{1, 1}, {2, 0}}};
  auto o = oracle_too(in);
  REQUIRE(o.has_value());
  std::stringstream w;
  write_witness(w, AnyInstance{in}, AnyWitness{*o});
  AnyWitness parsed = parse_witness(w, AnyInstance{in});
  CHECK(validate_witness(AnyInstance{in}, parsed).ok);
}

#ifdef GONFLOW_CLI
namespace {

const std::string kCli = GONFLOW_CLI;

std::string tmp_file(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

int run(const std::string& args) {
  int rc = std::system((kCli + " " + args + " > cli_test_stdout.txt 2>/dev/null").c_str());
  return WEXITSTATUS(rc);
}

std::string stdout_text() {
  std::ifstream f("cli_test_stdout.txt");
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("cli end-to-end") {
  std::string inst = tmp_file("too.inst");
  write_file(inst,
             "problem TOO\nv 1\nv 2\nv 3\ne 1 1 2 1\ne 2 2 3 1\ne 3 1 3 1\n"
             "target 1 1\ntarget 2 1\ntarget 3 1\n");
  std::string part = tmp_file("too.part");
  write_file(part, "tnode 0\nbag 0 1 2 3\nroot 0\n");

  SUBCASE("fpt and oracle methods agree on exit codes") {
    CHECK(run("solve too -i " + inst + " -m oracle") == 0);
    CHECK(run("solve too -i " + inst + " -m fpt -p " + part) == 0);

    std::string no_inst = tmp_file("no.inst");
    write_file(no_inst, "problem CO\nv 1\nv 2\ne 1 1 2 1\n");
    std::string no_part = tmp_file("no.part");
    write_file(no_part, "tnode 0\nbag 0 1 2\nroot 0\n");
    CHECK(run("solve co -i " + no_inst + " -m oracle") == 1);
    CHECK(run("solve co -i " + no_inst + " -m fpt -p " + no_part) == 1);
  }
  SUBCASE("emitted witnesses pass validate witness") {
    std::string wit = tmp_file("too.wit");
    REQUIRE(run("solve too -i " + inst + " -m fpt -p " + part + " -w " + wit) == 0);
    CHECK(run("validate witness -i " + inst + " -w " + wit) == 0);
  }
  SUBCASE("morphism validation prints the degree") {
    std::string morph = tmp_file("c4.morph");
    write_file(morph,
               "v 1\nv 2\nv 3\nv 4\ne 1 1 2 1\ne 2 2 3 1\ne 3 3 4 1\ne 4 4 1 1\n"
               "tnode 0\ntnode 1\ntnode 2\ntarc 0 1\ntarc 1 2\n"
               "vmap 1 0\nvmap 2 1\nvmap 4 1\nvmap 3 2\n"
               "emap 1 1\nemap 2 2\nemap 3 2\nemap 4 1\n");
    CHECK(run("validate morphism -i " + morph) == 0);
    CHECK(stdout_text() == "ok degree=2\n");
  }
  SUBCASE("bad inputs exit with code 3") {
    CHECK(run("definitely-not-a-subcommand") == 3);
    CHECK(run("solve too -i this_file_does_not_exist") == 3);
    std::string broken = tmp_file("broken.inst");
    write_file(broken, "problem TOO\nv 1\ne oops\n");
    CHECK(run("solve too -i " + broken + " -m oracle") == 3);
  }
}
#endif  // GONFLOW_CLI
