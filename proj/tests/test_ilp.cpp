#include <doctest.h>

#include <sstream>

#include "gonflow/ilp.hpp"
#include "gonflow/io.hpp"

using namespace gonflow;

TEST_CASE("ilp feasibility and optimality") {
  SUBCASE("single equality pins the variable") {
    IlpModel m;
    int x = m.add_var("x", 0, 5);
    m.add_con({{1, x}}, IlpRel::EQ, 3);
    IlpResult r = solve_ilp(m);
    REQUIRE(r.status == IlpStatus::Optimal);
    CHECK(r.values[x] == 3);
  }
  SUBCASE("bounds make the sum unreachable") {
    IlpModel m;
    int x = m.add_var("x", 0, 2);
    int y = m.add_var("y", 0, 2);
    m.add_con({{1, x}, {1, y}}, IlpRel::EQ, 5);
    CHECK(solve_ilp(m).status == IlpStatus::Infeasible);
  }
  SUBCASE("minimization picks the cheap corner") {
    IlpModel m;
    int x = m.add_var("x", 0, 3);
    int y = m.add_var("y", 0, 3);
    m.add_con({{1, x}, {1, y}}, IlpRel::GE, 3);
    m.set_objective({{2, x}, {1, y}});
    IlpResult r = solve_ilp(m);
    REQUIRE(r.status == IlpStatus::Optimal);
    CHECK(r.objective == 3);
    CHECK(r.values[x] == 0);
    CHECK(r.values[y] == 3);
  }
  SUBCASE("negative bounds and coefficients") {
    IlpModel m;
    int x = m.add_var("x", -4, 4);
    m.add_con({{-2, x}}, IlpRel::LE, -6);  // x >= 3
    m.set_objective({{1, x}});
    IlpResult r = solve_ilp(m);
    REQUIRE(r.status == IlpStatus::Optimal);
    CHECK(r.values[x] == 3);
  }
}

TEST_CASE("ilp node budget yields a distinct resource outcome") {
  IlpModel m;
  std::vector<int> vars;
  for (int i = 0; i < 10; ++i) vars.push_back(m.add_var("v" + std::to_string(i), 0, 10));
  std::vector<IlpTerm> all;
  for (int v : vars) all.push_back({1, v});
  m.add_con(all, IlpRel::EQ, 55);
  CHECK(solve_ilp(m, 1).status == IlpStatus::ResourceExceeded);
  CHECK(solve_ilp(m).status == IlpStatus::Optimal);
}

TEST_CASE("ilp text model parses and solves") {
  std::istringstream in(R"(
var x 0 5
var y 0 5
con 1*x + 1*y >= 4
con 1*x <= 1
min 3*x + 1*y
)");
  IlpModel m = parse_ilp_model(in);
  REQUIRE(m.vars.size() == 2);
  REQUIRE(m.cons.size() == 2);
  IlpResult r = solve_ilp(m);
  REQUIRE(r.status == IlpStatus::Optimal);
  CHECK(r.objective == 4);  // x=0, y=4
}
