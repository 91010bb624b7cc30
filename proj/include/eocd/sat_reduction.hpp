#pragma once

#include "eocd/domination.hpp"
#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace eocd {

struct Literal {
  int var = 0; // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int n_vars = 0;
  std::vector<Clause> clauses;
};

/// Throws eocd::Error unless every clause has three distinct in-range variables.
void validate(const CnfFormula& f);

/// DIMACS subset: comment lines start with 'c', header `p cnf V C`, then C
/// clauses of exactly three nonzero literals each terminated by 0.
CnfFormula read_dimacs(std::istream& in);
CnfFormula read_dimacs_file(const std::string& path);
void write_dimacs(std::ostream& out, const CnfFormula& f);

using Assignment = std::vector<bool>;

bool satisfies_one_in_three(const CnfFormula& f, const Assignment& a);
/// Every assignment with exactly one true literal per clause, in binary
/// counting order (variable 0 least significant). Refuses n_vars > 24.
std::vector<Assignment> brute_force_one_in_three(const CnfFormula& f);

/// Local vertex order inside a variable gadget.
namespace gadget {
inline constexpr int U = 0, Ubar = 1;
inline constexpr int T1 = 2, T2 = 3, T3 = 4, T4 = 5;
inline constexpr int Q = 6;
inline constexpr int C1 = 7; // c1..c7 = 7..13
inline constexpr int V1 = 14, V2 = 15;
inline constexpr int W1 = 16; // w1..w7 = 16..22
inline constexpr int Size = 23;
inline constexpr int EdgeCount = 30;
constexpr int c(int k) { return C1 + k - 1; }
constexpr int w(int k) { return W1 + k - 1; }
} // namespace gadget

/// Gadget for variable i (0-based) on local ids 0..22, labeled like
/// "u[1]", "ubar[1]", "t2[1]", "c5[1]", "w7[1]" (1-based variable index).
Graph build_gadget(int i);

struct GadgetLayout {
  int n_vars = 0;
  int n_clauses = 0;

  int vertex(int var, int local) const { return gadget::Size * var + local; }
  int clause_vertex(int j) const { return gadget::Size * n_vars + j; }
  int order() const { return gadget::Size * n_vars + n_clauses; }
};

struct ReductionGraph {
  Graph graph;
  GadgetLayout layout;
};

/// One gadget per variable followed by one vertex y_j per clause, joined
/// to u_i for each positive occurrence of x_i and to ubar_i for each
/// negative one.
ReductionGraph build_reduction(const CnfFormula& f);

/// Certificate on the reduction graph built from a one-in-three assignment.
EocdCertificate witness_from_assignment(const CnfFormula& f, const Assignment& a);

/// Reads an assignment off any valid certificate of the reduction graph,
/// first rewriting P on gadgets where neither u nor ubar lies in D∩P.
Assignment assignment_from_witness(const CnfFormula& f, const Graph& g, const VertexSet& d,
                                   const VertexSet& p);

} // namespace eocd
