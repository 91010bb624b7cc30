#include <doctest.h>

#include "eocd/domination.hpp"
#include "eocd/error.hpp"
#include "eocd/sat_reduction.hpp"

#include <random>
#include <sstream>

using namespace eocd;

namespace {

CnfFormula parse(const std::string& text) {
  std::istringstream in(text);
  return read_dimacs(in);
}

} // namespace

TEST_CASE("gadget shape") {
  Graph g = build_gadget(0);
  CHECK(g.order() == gadget::Size);
  CHECK(g.edge_count() == gadget::EdgeCount);
  CHECK(g.degree(gadget::Q) == 4);
  CHECK(g.label(gadget::U) == "u[1]");
  CHECK(build_gadget(2).label(gadget::Ubar) == "ubar[3]");
  CHECK(is_connected(g));
}

TEST_CASE("reduction graph sizes") {
  CnfFormula one = parse("p cnf 3 1\n1 2 3 0\n");
  auto [g, layout] = build_reduction(one);
  CHECK(g.order() == 70);
  CHECK(g.edge_count() == 93);
  CHECK(g.label(layout.clause_vertex(0)) == "y[1]");
  CHECK(g.has_edge(layout.clause_vertex(0), layout.vertex(1, gadget::U)));

  CnfFormula neg = parse("p cnf 3 1\n-1 2 -3 0\n");
  auto rn = build_reduction(neg);
  CHECK(rn.graph.has_edge(rn.layout.clause_vertex(0), rn.layout.vertex(0, gadget::Ubar)));
  CHECK_FALSE(rn.graph.has_edge(rn.layout.clause_vertex(0), rn.layout.vertex(0, gadget::U)));

  CnfFormula empty{1, {}};
  auto r0 = build_reduction(empty);
  CHECK(r0.graph.order() == 23);
  CHECK(r0.graph.edge_count() == 30);
}

TEST_CASE("DIMACS parsing") {
  CnfFormula f = parse("c comment\np cnf 4 2\n1 -2 3 0 -1\n2 4 0\n");
  REQUIRE(f.clauses.size() == 2);
  CHECK(f.clauses[1][0] == Literal{0, false});
  CHECK(f.clauses[1][2] == Literal{3, true});
  std::ostringstream out;
  write_dimacs(out, f);
  CnfFormula back = parse(out.str());
  CHECK(back.n_vars == 4);
  CHECK(back.clauses == f.clauses);

  CHECK_THROWS_AS(parse("1 2 3 0\n"), Error);
  CHECK_THROWS_AS(parse("p cnf 3 1\n1 2 0\n"), Error);
  CHECK_THROWS_AS(parse("p cnf 3 1\n1 2 4 0\n"), Error);
  CHECK_THROWS_AS(parse("p cnf 3 2\n1 2 3 0\n"), Error);
  CHECK_THROWS_AS(parse("p cnf 3 1\n1 2 x 0\n"), Error);
  CHECK_THROWS_AS(parse("p cnf 3 1\n1 2 3\n"), Error);
  CHECK_THROWS_WITH_AS(parse("p cnf 3 1\n1 -1 3 0\n"), doctest::Contains("repeats"), Error);
  CHECK_THROWS_AS(read_dimacs_file("/nonexistent/file.cnf"), Error);
}

TEST_CASE("one-in-three brute force") {
  CnfFormula one = parse("p cnf 3 1\n1 2 3 0\n");
  CHECK(brute_force_one_in_three(one).size() == 3);
  CnfFormula pair = parse("p cnf 3 2\n1 2 3 0\n-1 2 3 0\n");
  CHECK(brute_force_one_in_three(pair).empty());
  CHECK(satisfies_one_in_three(one, {false, true, false}));
  CHECK_FALSE(satisfies_one_in_three(one, {true, true, false}));
  CHECK_THROWS_AS(satisfies_one_in_three(one, {true}), Error);
  CHECK_THROWS_AS(brute_force_one_in_three(CnfFormula{25, {}}), Error);
}

TEST_CASE("witness round trip") {
  CnfFormula one = parse("p cnf 3 1\n1 2 3 0\n");
  auto [g, layout] = build_reduction(one);
  EocdCertificate w = witness_from_assignment(one, {false, false, true});
  CHECK(w.d().size() == 24);
  CHECK(w.p().size() == 18);
  CHECK(is_eod_set(g, w.d()));
  CHECK(is_ecd_set(g, w.p()));
  CHECK(assignment_from_witness(one, g, w.d(), w.p()) == Assignment{false, false, true});
  CHECK_THROWS_AS(witness_from_assignment(one, {true, true, false}), Error);

  auto found = find_eocd(g);
  REQUIRE(found);
  Assignment a = assignment_from_witness(one, g, found->d(), found->p());
  CHECK(satisfies_one_in_three(one, a));

  VertexSet bad = w.p();
  bad.erase(layout.vertex(0, gadget::Q));
  CHECK_THROWS_WITH_AS(assignment_from_witness(one, g, w.d(), bad), doctest::Contains("ECD"), Error);
  CHECK_THROWS_AS(assignment_from_witness(one, build_gadget(0), w.d(), w.p()), Error);
}

TEST_CASE("every solver certificate yields a satisfying assignment") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    CnfFormula f;
    f.n_vars = 3 + static_cast<int>(rng() % 3);
    int m = 1 + static_cast<int>(rng() % 3);
    for (int j = 0; j < m; ++j) {
      Clause c;
      std::vector<int> vars(f.n_vars);
      for (int i = 0; i < f.n_vars; ++i)
        vars[i] = i;
      std::shuffle(vars.begin(), vars.end(), rng);
      for (int k = 0; k < 3; ++k)
        c[k] = Literal{vars[k], (rng() & 1) != 0};
      f.clauses.push_back(c);
    }
    auto [g, layout] = build_reduction(f);
    auto cert = find_eocd(g);
    CHECK(cert.has_value() == !brute_force_one_in_three(f).empty());
    if (cert)
      CHECK(satisfies_one_in_three(f, assignment_from_witness(f, g, cert->d(), cert->p())));
  }
}
