#include "eocd/edge_list.hpp"

#include "eocd/error.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace eocd {

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw Error("edge list line " + std::to_string(line_no) + ": " + what);
}

bool parse_int(const std::string& token, long long& out) {
  try {
    std::size_t used = 0;
    out = std::stoll(token, &used);
    return used == token.size();
  } catch (const std::exception&) {
    return false;
  }
}

} // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  bool any_label = false;

  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream fields(strip_comment(raw));
    std::vector<std::string> tok;
    for (std::string t; fields >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;

    if (!have_header) {
      if (tok.size() != 2 || !parse_int(tok[0], n) || !parse_int(tok[1], m) || n < 0 || m < 0)
        fail(line_no, "expected header 'n m', got '" + raw + "'");
      have_header = true;
      labels.assign(n, std::string());
      continue;
    }

    if (tok[0] == "L") {
      long long v = 0;
      if (tok.size() != 3 || !parse_int(tok[1], v))
        fail(line_no, "expected 'L v name', got '" + raw + "'");
      if (v < 0 || v >= n)
        fail(line_no, "label for vertex " + tok[1] + " outside 0.." + std::to_string(n - 1));
      labels[v] = tok[2];
      any_label = true;
      continue;
    }

    if (any_label)
      fail(line_no, "edge after label section");
    long long u = 0, v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], u) || !parse_int(tok[1], v))
      fail(line_no, "expected edge 'u v', got '" + raw + "'");
    if (u < 0 || v < 0 || u >= n || v >= n)
      fail(line_no, "edge (" + tok[0] + "," + tok[1] + ") has an endpoint outside 0.." +
                        std::to_string(n - 1));
    if (u == v)
      fail(line_no, "self-loop (" + tok[0] + "," + tok[1] + ")");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (!have_header)
    throw Error("edge list: missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m)
    throw Error("edge list: header announces " + std::to_string(m) + " edges, found " +
                std::to_string(edges.size()));

  Graph g = Graph::from_edge_list(static_cast<int>(n), edges);
  if (any_label) {
    for (int v = 0; v < n; ++v)
      if (labels[v].empty())
        labels[v] = std::to_string(v);
    g = g.with_labels(std::move(labels));
  }
  return g;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges)
    out << u << ' ' << v << '\n';
  if (g.has_labels())
    for (int v = 0; v < g.order(); ++v)
      out << "L " << v << ' ' << g.label(v) << '\n';
}

void write_edge_list_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write '" + path + "'");
  write_edge_list(out, g);
}

} // namespace eocd
