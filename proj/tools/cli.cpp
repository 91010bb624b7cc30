#include "cli.hpp"

#include "eocd/claims.hpp"
#include "eocd/domination.hpp"
#include "eocd/edge_list.hpp"
#include "eocd/empty_pd.hpp"
#include "eocd/error.hpp"
#include "eocd/families.hpp"
#include "eocd/sat_reduction.hpp"
#include "eocd/sierpinski.hpp"
#include "eocd/tree_ops.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace eocd::cli {

namespace {

constexpr int kTrue = 0, kFalse = 1, kUsage = 2;

struct Options {
  bool labels = false;
  bool json = false;
  long max_vertices = 4096;
};

class Printer {
public:
  Printer(const Graph& g, const Options& opt, std::ostream& out) : g_(g), opt_(opt), out_(out) {}

  std::string name(int v) const { return opt_.labels ? g_.label(v) : std::to_string(v); }

  std::string list(const VertexSet& s) const {
    std::string text;
    s.for_each([&](int v) { text += (text.empty() ? "" : " ") + name(v); });
    return text.empty() ? "-" : text;
  }

  nlohmann::json json_list(const VertexSet& s) const {
    auto arr = nlohmann::json::array();
    s.for_each([&](int v) {
      if (opt_.labels)
        arr.push_back(g_.label(v));
      else
        arr.push_back(v);
    });
    return arr;
  }

  nlohmann::json certificate_json(const EocdCertificate& c) const {
    return {{"D", json_list(c.d())},           {"P", json_list(c.p())},
            {"dp", json_list(c.dp())},         {"d_only", json_list(c.d_only())},
            {"p_only", json_list(c.p_only())}, {"r", json_list(c.r())}};
  }

  void certificate(const EocdCertificate& c) const {
    out_ << "D   = " << list(c.d()) << '\n'
         << "P   = " << list(c.p()) << '\n'
         << "D&P = " << list(c.dp()) << '\n'
         << "D-P = " << list(c.d_only()) << '\n'
         << "P-D = " << list(c.p_only()) << '\n'
         << "R   = " << list(c.r()) << '\n';
  }

private:
  const Graph& g_;
  const Options& opt_;
  std::ostream& out_;
};

void guard(const Graph& g, const Options& opt) {
  if (g.order() > opt.max_vertices)
    throw Error("graph has " + std::to_string(g.order()) + " vertices, above --max-vertices " +
                std::to_string(opt.max_vertices));
}

// Comma- or space-separated ids; a token that is not a number is looked up
// as a vertex label.
VertexSet parse_ids(const Graph& g, const std::string& text, const std::string& what) {
  VertexSet s(g.order());
  std::string norm = text;
  for (char& ch : norm)
    if (ch == ',')
      ch = ' ';
  std::istringstream in(norm);
  for (std::string tok; in >> tok;) {
    int v = -1;
    char* end = nullptr;
    long x = std::strtol(tok.c_str(), &end, 10);
    if (*end == '\0') {
      v = static_cast<int>(x);
    } else if (auto found = g.find_label(tok)) {
      v = *found;
    } else {
      throw Error(what + ": unknown vertex '" + tok + "'");
    }
    if (v < 0 || v >= g.order())
      throw Error(what + ": vertex " + tok + " out of range 0.." + std::to_string(g.order() - 1));
    s.insert(v);
  }
  return s;
}

void write_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    write_edge_list(out, g);
  else
    write_edge_list_file(path, g);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f)
    throw Error("cannot write " + path);
  f << text;
}

std::vector<int> int_params(const std::vector<std::string>& raw, const std::string& kind) {
  std::vector<int> out;
  for (const auto& s : raw) {
    char* end = nullptr;
    long x = std::strtol(s.c_str(), &end, 10);
    if (s.empty() || *end != '\0')
      throw Error(kind + ": parameter '" + s + "' is not an integer");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

const char* mode_name(SearchMode m) {
  switch (m) {
  case SearchMode::Any: return "any";
  case SearchMode::EmptyIntersection: return "empty-dp";
  case SearchMode::EmptyPMinusD: return "empty-pd";
  }
  return "?";
}

} // namespace

long default_max_vertices() {
  if (const char* env = std::getenv("EOCD_MAX_VERTICES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end == '\0' && v > 0)
      return v;
  }
  return 4096;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  opt.max_vertices = default_max_vertices();

  CLI::App app{"Efficient open and closed domination toolkit", "eocd"};
  app.require_subcommand(1);
  app.add_flag("--labels", opt.labels, "Print and accept vertex labels");
  app.add_flag("--json", opt.json, "Print certificates as JSON");
  app.add_option("--max-vertices", opt.max_vertices, "Refuse larger graphs for exact search")
      ->check(CLI::PositiveNumber);

  // generate
  std::string gen_kind, gen_out;
  std::vector<std::string> gen_params;
  auto* gen = app.add_subcommand("generate", "Write a family, Sierpinski or reduction graph");
  gen->add_option("kind", gen_kind,
                  "path | cycle | complete-bipartite | hypercube | sierpinski | reduction")
      ->required();
  gen->add_option("params", gen_params, "Integers (sierpinski: p n; reduction: CNF file)");
  gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

  // solve
  std::string solve_file, solve_mode = "any";
  bool want_gamma = false, want_gamma_t = false;
  auto* solve = app.add_subcommand("solve", "Search for an EOD set and an ECD set");
  solve->add_option("file", solve_file, "Edge-list file")->required();
  solve->add_option("--mode", solve_mode, "any | empty-dp | empty-pd")
      ->check(CLI::IsMember({"any", "empty-dp", "empty-pd"}));
  solve->add_flag("--gamma", want_gamma, "Also compute the domination number");
  solve->add_flag("--gamma-t", want_gamma_t, "Also compute the total domination number");

  // verify
  std::string verify_file, verify_d, verify_p;
  auto* verify = app.add_subcommand("verify", "Check a given certificate");
  verify->add_option("file", verify_file, "Edge-list file")->required();
  verify->add_option("--d", verify_d, "EOD set ids")->required();
  verify->add_option("--p", verify_p, "ECD set ids")->required();

  // recognize-empty-pd
  std::string rec_file;
  auto* rec = app.add_subcommand("recognize-empty-pd", "Decide EOCD with P contained in D");
  rec->add_option("file", rec_file, "Edge-list file")->required();

  // tree
  auto* tree = app.add_subcommand("tree", "Tree operations");
  tree->require_subcommand(1);
  std::string dec_file, dec_d, dec_p, dec_out;
  auto* dec = tree->add_subcommand("decompose", "Reduce an EOCD tree to K2");
  dec->add_option("file", dec_file, "Edge-list file")->required();
  dec->add_option("--d", dec_d, "EOD set ids (default: found by the tree recognizer)");
  dec->add_option("--p", dec_p, "ECD set ids (default: found by the tree recognizer)");
  dec->add_option("-o,--output", dec_out, "Sequence file (default stdout)");
  std::string rep_file, rep_out;
  auto* rep = tree->add_subcommand("replay", "Build a tree from an operation sequence");
  rep->add_option("seqfile", rep_file, "Sequence file")->required();
  rep->add_option("-o,--output", rep_out, "Edge-list output (default stdout)");
  int rnd_steps = 0;
  std::uint64_t rnd_seed = 0;
  std::string rnd_out, rnd_seq;
  auto* rnd = tree->add_subcommand("random", "Grow a random EOCD tree");
  rnd->add_option("--steps", rnd_steps, "Number of operations")->required()->check(CLI::NonNegativeNumber);
  rnd->add_option("--seed", rnd_seed, "Random seed")->required();
  rnd->add_option("-o,--output", rnd_out, "Edge-list output (default stdout)");
  rnd->add_option("--sequence", rnd_seq, "Also write the operation sequence here");

  // reduce
  std::string red_file, red_out;
  bool red_solve = false, red_extract = false;
  auto* red = app.add_subcommand("reduce", "Build the reduction graph of a one-in-three 3-CNF");
  red->add_option("cnf", red_file, "DIMACS file")->required();
  red->add_option("-o,--output", red_out, "Edge-list output")->required();
  red->add_flag("--solve", red_solve, "Search the graph for a certificate");
  red->add_flag("--extract", red_extract, "Print the assignment read off the certificate");

  // report
  auto* report = app.add_subcommand("report", "Reproduce the published results");
  report->require_subcommand(1);
  auto* claims_cmd = report->add_subcommand("claims", "Run every claim check");
  claims_cmd->alias("paper-claims");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    auto load = [&](const std::string& path) { return read_edge_list_file(path); };

    if (*gen) {
      Graph g;
      if (gen_kind == "sierpinski") {
        auto p = int_params(gen_params, gen_kind);
        if (p.size() != 2)
          throw Error("sierpinski: expected parameters p n");
        g = sierpinski(p[0], p[1], opt.max_vertices);
      } else if (gen_kind == "reduction") {
        if (gen_params.size() != 1)
          throw Error("reduction: expected one CNF file");
        g = build_reduction(read_dimacs_file(gen_params[0])).graph;
      } else {
        g = build_family(parse_family(gen_kind), int_params(gen_params, gen_kind));
      }
      write_graph(g, gen_out, out);
      return kTrue;
    }

    if (*solve) {
      Graph g = load(solve_file);
      guard(g, opt);
      SearchMode mode = solve_mode == "empty-dp"   ? SearchMode::EmptyIntersection
                        : solve_mode == "empty-pd" ? SearchMode::EmptyPMinusD
                                                   : SearchMode::Any;
      auto cert = find_eocd(g, mode);
      Printer pr(g, opt, out);
      nlohmann::json j;
      j["mode"] = mode_name(mode);
      j["eocd"] = cert.has_value();
      if (cert)
        j["certificate"] = pr.certificate_json(*cert);
      std::string gamma_text, gamma_t_text;
      if (want_gamma) {
        VertexSet s = minimum_dominating_set(g);
        j["gamma"] = s.size();
        j["dominating_set"] = pr.json_list(s);
        gamma_text = "gamma = " + std::to_string(s.size()) + "  {" + pr.list(s) + "}\n";
      }
      if (want_gamma_t) {
        bool isolated = false;
        for (int v = 0; v < g.order(); ++v)
          isolated = isolated || g.degree(v) == 0;
        if (isolated) {
          j["gamma_t"] = nullptr;
          gamma_t_text = "gamma_t undefined (isolated vertex)\n";
        } else {
          VertexSet s = minimum_total_dominating_set(g);
          j["gamma_t"] = s.size();
          j["total_dominating_set"] = pr.json_list(s);
          gamma_t_text = "gamma_t = " + std::to_string(s.size()) + "  {" + pr.list(s) + "}\n";
        }
      }
      if (opt.json) {
        out << j.dump(2) << '\n';
      } else {
        if (cert) {
          out << "EOCD (mode " << mode_name(mode) << ")\n";
          pr.certificate(*cert);
        } else {
          out << "no certificate (mode " << mode_name(mode) << ")\n";
        }
        out << gamma_text << gamma_t_text;
      }
      return cert ? kTrue : kFalse;
    }

    if (*verify) {
      Graph g = load(verify_file);
      VertexSet d = parse_ids(g, verify_d, "--d");
      VertexSet p = parse_ids(g, verify_p, "--p");
      Printer pr(g, opt, out);
      auto d_bad = eod_defect(g, d);
      auto p_bad = ecd_defect(g, p);
      auto describe = [&](const std::optional<CoverDefect>& bad, const char* set) {
        return "vertex " + pr.name(bad->vertex) + " is covered " +
               std::to_string(bad->times_covered) + " times by the " + set + " neighborhoods";
      };
      if (opt.json) {
        nlohmann::json j;
        j["eod"] = !d_bad;
        j["ecd"] = !p_bad;
        if (d_bad)
          j["eod_defect"] = {{"vertex", pr.name(d_bad->vertex)}, {"covered", d_bad->times_covered}};
        if (p_bad)
          j["ecd_defect"] = {{"vertex", pr.name(p_bad->vertex)}, {"covered", p_bad->times_covered}};
        if (!d_bad && !p_bad)
          j["certificate"] = pr.certificate_json(EocdCertificate(d, p));
        out << j.dump(2) << '\n';
        return d_bad || p_bad ? kFalse : kTrue;
      }
      if (d_bad)
        out << "D is not an EOD set: " << describe(d_bad, "open") << '\n';
      if (p_bad)
        out << "P is not an ECD set: " << describe(p_bad, "closed") << '\n';
      if (d_bad || p_bad)
        return kFalse;
      EocdCertificate cert(d, p);
      out << "valid EOCD certificate\n";
      pr.certificate(cert);
      auto report = classify_partition(g, cert);
      for (const auto& c : report.checks) {
        out << (c.passed ? "  ok   " : "  FAIL ") << c.name;
        if (c.witness)
          out << " (vertex " << pr.name(*c.witness) << ")";
        out << '\n';
      }
      return report.all_passed() ? kTrue : kFalse;
    }

    if (*rec) {
      Graph g = load(rec_file);
      auto cert = recognize_empty_pd(g);
      Printer pr(g, opt, out);
      if (opt.json) {
        nlohmann::json j{{"eocd_p_in_d", cert.has_value()}};
        if (cert)
          j["certificate"] = pr.certificate_json(*cert);
        out << j.dump(2) << '\n';
      } else if (cert) {
        out << "EOCD with P contained in D\n";
        pr.certificate(*cert);
      } else {
        out << "no certificate with P contained in D\n";
      }
      return cert ? kTrue : kFalse;
    }

    if (*dec) {
      Graph t = load(dec_file);
      if (!is_tree(t))
        throw Error("input graph is not a tree");
      VertexSet d(t.order()), p(t.order());
      if (dec_d.empty() != dec_p.empty())
        throw Error("give both --d and --p, or neither");
      if (dec_d.empty()) {
        auto found = is_eocd_tree(t);
        if (!found) {
          out << "not an EOCD tree\n";
          return kFalse;
        }
        d = found->first;
        p = found->second;
      } else {
        d = parse_ids(t, dec_d, "--d");
        p = parse_ids(t, dec_p, "--p");
      }
      std::ostringstream seq;
      write_sequence(seq, decompose(t, d, p));
      write_text(dec_out, seq.str(), out);
      return kTrue;
    }

    if (*rep) {
      std::ifstream in(rep_file);
      if (!in)
        throw Error("cannot open " + rep_file);
      EocdTree t = replay(read_sequence(in));
      write_graph(t.tree, rep_out, out);
      if (!rep_out.empty() && rep_out != "-") {
        Printer pr(t.tree, opt, out);
        pr.certificate(EocdCertificate(t.d, t.p));
      }
      return kTrue;
    }

    if (*rnd) {
      RandomTree r = random_eocd_tree(rnd_steps, rnd_seed);
      write_graph(r.state.tree, rnd_out, out);
      if (!rnd_seq.empty()) {
        std::ostringstream seq;
        write_sequence(seq, r.sequence);
        write_text(rnd_seq, seq.str(), out);
      }
      if (!rnd_out.empty() && rnd_out != "-") {
        Printer pr(r.state.tree, opt, out);
        pr.certificate(EocdCertificate(r.state.d, r.state.p));
      }
      return kTrue;
    }

    if (*red) {
      CnfFormula f = read_dimacs_file(red_file);
      auto built = build_reduction(f);
      write_edge_list_file(red_out, built.graph);
      out << "reduction graph: " << built.graph.order() << " vertices, "
          << built.graph.edge_count() << " edges\n";
      if (!red_solve && !red_extract)
        return kTrue;
      guard(built.graph, opt);
      auto cert = find_eocd(built.graph);
      if (!cert) {
        out << "not EOCD: the formula has no one-in-three satisfying assignment\n";
        return kFalse;
      }
      out << "EOCD\n";
      if (red_extract) {
        Assignment a = assignment_from_witness(f, built.graph, cert->d(), cert->p());
        out << "assignment:";
        for (int i = 0; i < f.n_vars; ++i)
          out << ' ' << (a[i] ? "" : "-") << i + 1;
        out << '\n';
      }
      return kTrue;
    }

    if (*claims_cmd) {
      bool all = true;
      for (int id = 1; id <= claims::claim_count(); ++id) {
        auto r = claims::run_claim(id);
        out << claims::format(r) << std::endl;
        all = all && r.passed;
      }
      out << (all ? "all claims reproduced\n" : "some claims FAILED\n");
      return all ? kTrue : kFalse;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

} // namespace eocd::cli
