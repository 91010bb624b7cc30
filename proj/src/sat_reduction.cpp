#include "eocd/sat_reduction.hpp"

#include "eocd/error.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace eocd {

using namespace gadget;

void validate(const CnfFormula& f) {
  if (f.n_vars < 0)
    throw Error("formula: negative variable count");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const Clause& c = f.clauses[j];
    for (int k = 0; k < 3; ++k) {
      if (c[k].var < 0 || c[k].var >= f.n_vars)
        throw Error("formula: clause " + std::to_string(j + 1) + " uses variable " +
                    std::to_string(c[k].var + 1) + " outside 1.." + std::to_string(f.n_vars));
      for (int l = 0; l < k; ++l)
        if (c[l].var == c[k].var)
          throw Error("formula: clause " + std::to_string(j + 1) + " repeats variable " +
                      std::to_string(c[k].var + 1));
    }
  }
}

CnfFormula read_dimacs(std::istream& in) {
  CnfFormula f;
  bool header = false;
  long declared = 0;
  std::vector<int> pending;
  std::string line;
  int line_no = 0;
  auto where = [&] { return "dimacs line " + std::to_string(line_no) + ": "; };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first) || first[0] == 'c' || first[0] == '%')
      continue;
    if (first == "p") {
      std::string fmt;
      long vars = -1, clauses = -1;
      if (header || !(ss >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw Error(where() + "expected a single 'p cnf <vars> <clauses>' header");
      f.n_vars = static_cast<int>(vars);
      declared = clauses;
      header = true;
      continue;
    }
    if (!header)
      throw Error(where() + "clause before 'p cnf' header");
    ss.clear();
    ss.str(line);
    for (std::string tok; ss >> tok;) {
      long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stol(tok, &used);
        if (used != tok.size())
          throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(where() + "bad literal '" + tok + "'");
      }
      if (lit != 0) {
        if (lit > f.n_vars || -lit > f.n_vars)
          throw Error(where() + "literal " + tok + " exceeds the declared variable count");
        pending.push_back(static_cast<int>(lit));
        continue;
      }
      if (pending.size() != 3)
        throw Error(where() + "clause has " + std::to_string(pending.size()) +
                    " literals; exactly 3 are required");
      Clause c;
      for (int k = 0; k < 3; ++k)
        c[k] = {std::abs(pending[k]) - 1, pending[k] > 0};
      f.clauses.push_back(c);
      pending.clear();
    }
  }
  if (!header)
    throw Error("dimacs: missing 'p cnf' header");
  if (!pending.empty())
    throw Error("dimacs: last clause is not terminated by 0");
  if (static_cast<long>(f.clauses.size()) != declared)
    throw Error("dimacs: header declares " + std::to_string(declared) + " clauses, found " +
                std::to_string(f.clauses.size()));
  validate(f);
  return f;
}

CnfFormula read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.n_vars << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c)
      out << (l.positive ? l.var + 1 : -(l.var + 1)) << ' ';
    out << "0\n";
  }
}

bool satisfies_one_in_three(const CnfFormula& f, const Assignment& a) {
  if (static_cast<int>(a.size()) != f.n_vars)
    throw Error("assignment has " + std::to_string(a.size()) + " values for " +
                std::to_string(f.n_vars) + " variables");
  for (const Clause& c : f.clauses) {
    int true_literals = 0;
    for (const Literal& l : c)
      true_literals += a[l.var] == l.positive;
    if (true_literals != 1)
      return false;
  }
  return true;
}

std::vector<Assignment> brute_force_one_in_three(const CnfFormula& f) {
  validate(f);
  if (f.n_vars > 24)
    throw Error("brute_force_one_in_three: more than 24 variables");
  std::vector<Assignment> out;
  for (long bits = 0; bits < (1L << f.n_vars); ++bits) {
    Assignment a(f.n_vars);
    for (int i = 0; i < f.n_vars; ++i)
      a[i] = bits >> i & 1;
    if (satisfies_one_in_three(f, a))
      out.push_back(std::move(a));
  }
  return out;
}

namespace {

std::vector<Edge> gadget_edges() {
  std::vector<Edge> e{{U, Ubar}, {Ubar, T1}, {T1, U}, {U, V1}, {V1, V2}, {V2, Ubar}};
  const int chain[] = {w(2), V1, w(1), w(3), w(4), w(5), w(6), V2, w(7)};
  for (int k = 0; k + 1 < 9; ++k)
    e.emplace_back(chain[k], chain[k + 1]);
  e.insert(e.end(), {{w(1), w(2)}, {w(2), w(3)}, {w(6), w(7)}, {w(7), w(5)}});
  e.insert(e.end(), {{T1, T2}, {T2, Q}, {T3, Q}, {Q, T4}, {Q, C1}});
  for (int k = 1; k <= 7; ++k)
    e.emplace_back(c(k), c(k % 7 + 1));
  return e;
}

std::vector<std::string> gadget_labels(int i) {
  const std::string idx = "[" + std::to_string(i + 1) + "]";
  std::vector<std::string> names(Size);
  names[U] = "u";
  names[Ubar] = "ubar";
  for (int k = 1; k <= 4; ++k)
    names[T1 + k - 1] = "t" + std::to_string(k);
  names[Q] = "q";
  for (int k = 1; k <= 7; ++k) {
    names[c(k)] = "c" + std::to_string(k);
    names[w(k)] = "w" + std::to_string(k);
  }
  names[V1] = "v1";
  names[V2] = "v2";
  for (auto& s : names)
    s += idx;
  return names;
}

void expect_graph(const CnfFormula& f, const Graph& g) {
  if (!(g == build_reduction(f).graph))
    throw Error("assignment_from_witness: graph is not the reduction graph of the formula");
}

} // namespace

Graph build_gadget(int i) {
  if (i < 0)
    throw Error("build_gadget: negative variable index");
  return Graph::from_edge_list(Size, gadget_edges()).with_labels(gadget_labels(i));
}

ReductionGraph build_reduction(const CnfFormula& f) {
  validate(f);
  GadgetLayout layout{f.n_vars, static_cast<int>(f.clauses.size())};
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  const auto local = gadget_edges();
  for (int i = 0; i < f.n_vars; ++i) {
    for (auto [a, b] : local)
      edges.emplace_back(layout.vertex(i, a), layout.vertex(i, b));
    auto names = gadget_labels(i);
    labels.insert(labels.end(), names.begin(), names.end());
  }
  for (int j = 0; j < layout.n_clauses; ++j) {
    for (const Literal& l : f.clauses[j])
      edges.emplace_back(layout.clause_vertex(j), layout.vertex(l.var, l.positive ? U : Ubar));
    labels.push_back("y[" + std::to_string(j + 1) + "]");
  }
  Graph g = Graph::from_edge_list(layout.order(), edges).with_labels(std::move(labels));
  return {std::move(g), layout};
}

EocdCertificate witness_from_assignment(const CnfFormula& f, const Assignment& a) {
  validate(f);
  if (!satisfies_one_in_three(f, a))
    throw Error("witness_from_assignment: assignment is not one-in-three satisfying");
  auto [g, layout] = build_reduction(f);
  VertexSet d(layout.order()), p(layout.order());
  for (int i = 0; i < f.n_vars; ++i) {
    auto at = [&](int local) { return layout.vertex(i, local); };
    for (int x : {Q, c(1), c(4), c(5)})
      d.insert(at(x));
    for (int x : {Q, c(3), c(6)})
      p.insert(at(x));
    if (a[i]) {
      for (int x : {U, V1, w(4), w(5)})
        d.insert(at(x));
      for (int x : {U, w(3), w(7)})
        p.insert(at(x));
    } else {
      for (int x : {Ubar, V2, w(3), w(4)})
        d.insert(at(x));
      for (int x : {Ubar, w(2), w(5)})
        p.insert(at(x));
    }
  }
  if (!is_eod_set(g, d) || !is_ecd_set(g, p))
    throw std::logic_error("witness_from_assignment: built certificate is invalid");
  return EocdCertificate(std::move(d), std::move(p));
}

Assignment assignment_from_witness(const CnfFormula& f, const Graph& g, const VertexSet& d,
                                   const VertexSet& p) {
  validate(f);
  expect_graph(f, g);
  if (d.universe() != g.order() || p.universe() != g.order())
    throw Error("assignment_from_witness: certificate universe does not match the graph");
  if (auto bad = eod_defect(g, d))
    throw Error("assignment_from_witness: D is not an EOD set (vertex " +
                g.label(bad->vertex) + " covered " + std::to_string(bad->times_covered) + "x)");
  if (auto bad = ecd_defect(g, p))
    throw Error("assignment_from_witness: P is not an ECD set (vertex " +
                g.label(bad->vertex) + " covered " + std::to_string(bad->times_covered) + "x)");

  GadgetLayout layout{f.n_vars, static_cast<int>(f.clauses.size())};
  VertexSet normalized = p;
  for (int i = 0; i < f.n_vars; ++i) {
    auto at = [&](int local) { return layout.vertex(i, local); };
    bool nice = (d.contains(at(U)) && p.contains(at(U))) ||
                (d.contains(at(Ubar)) && p.contains(at(Ubar)));
    if (nice)
      continue;
    if (p.contains(at(U))) {
      for (int x : {U, w(3), w(6), w(7)})
        normalized.erase(at(x));
      for (int x : {Ubar, w(2), w(5)})
        normalized.insert(at(x));
    } else if (p.contains(at(Ubar))) {
      for (int x : {Ubar, w(5), w(1), w(2)})
        normalized.erase(at(x));
      for (int x : {U, w(3), w(7)})
        normalized.insert(at(x));
    } else {
      throw std::logic_error("assignment_from_witness: neither u nor ubar of variable " +
                             std::to_string(i + 1) + " lies in P");
    }
  }
  if (auto bad = ecd_defect(g, normalized))
    throw std::logic_error("assignment_from_witness: rewritten P is not an ECD set (vertex " +
                           g.label(bad->vertex) + " covered " +
                           std::to_string(bad->times_covered) + "x)");

  Assignment a(f.n_vars);
  for (int i = 0; i < f.n_vars; ++i) {
    int u = layout.vertex(i, U);
    a[i] = d.contains(u) && normalized.contains(u);
  }
  if (!satisfies_one_in_three(f, a))
    throw std::logic_error("assignment_from_witness: extracted assignment is not one-in-three");
  return a;
}

} // namespace eocd
