#include "eocd/families.hpp"

#include "eocd/error.hpp"

namespace eocd {

namespace {

void check_params(Family f, const std::vector<int>& params) {
  if (static_cast<int>(params.size()) != family_arity(f))
    throw Error(to_string(f) + ": expected " + std::to_string(family_arity(f)) + " parameter(s)");
  switch (f) {
  case Family::Path:
    if (params[0] < 1)
      throw Error("path: n must be at least 1");
    break;
  case Family::Cycle:
    if (params[0] < 3)
      throw Error("cycle: n must be at least 3");
    break;
  case Family::CompleteBipartite:
    if (params[0] < 1 || params[1] < 1)
      throw Error("complete-bipartite: r and t must be at least 1");
    break;
  case Family::Hypercube:
    if (params[0] < 1)
      throw Error("hypercube: n must be at least 1");
    if (params[0] > 20)
      throw Error("hypercube: n > 20 is too large");
    break;
  }
}

} // namespace

Graph path(int n) { return build_family(Family::Path, {n}); }
Graph cycle(int n) { return build_family(Family::Cycle, {n}); }
Graph complete_bipartite(int r, int t) { return build_family(Family::CompleteBipartite, {r, t}); }
Graph hypercube(int n) { return build_family(Family::Hypercube, {n}); }

Family parse_family(const std::string& name) {
  if (name == "path")
    return Family::Path;
  if (name == "cycle")
    return Family::Cycle;
  if (name == "complete-bipartite" || name == "kbip")
    return Family::CompleteBipartite;
  if (name == "hypercube")
    return Family::Hypercube;
  throw Error("unknown family '" + name + "'");
}

std::string to_string(Family f) {
  switch (f) {
  case Family::Path: return "path";
  case Family::Cycle: return "cycle";
  case Family::CompleteBipartite: return "complete-bipartite";
  case Family::Hypercube: return "hypercube";
  }
  return "?";
}

int family_arity(Family f) { return f == Family::CompleteBipartite ? 2 : 1; }

Graph build_family(Family f, const std::vector<int>& params) {
  check_params(f, params);
  std::vector<Edge> edges;
  int n = 0;
  switch (f) {
  case Family::Path:
    n = params[0];
    for (int i = 0; i + 1 < n; ++i)
      edges.emplace_back(i, i + 1);
    break;
  case Family::Cycle:
    n = params[0];
    for (int i = 0; i < n; ++i)
      edges.emplace_back(i, (i + 1) % n);
    break;
  case Family::CompleteBipartite: {
    int r = params[0], t = params[1];
    n = r + t;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < t; ++b)
        edges.emplace_back(a, r + b);
    break;
  }
  case Family::Hypercube: {
    int dim = params[0];
    n = 1 << dim;
    for (int v = 0; v < n; ++v)
      for (int bit = 0; bit < dim; ++bit)
        if (!(v >> bit & 1))
          edges.emplace_back(v, v | 1 << bit);
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v)
      for (int bit = dim - 1; bit >= 0; --bit)
        labels[v] += (v >> bit & 1) ? '1' : '0';
    return Graph::from_edge_list(n, edges).with_labels(std::move(labels));
  }
  }
  return Graph::from_edge_list(n, edges);
}

bool predicted_eocd(Family f, const std::vector<int>& params) {
  check_params(f, params);
  switch (f) {
  case Family::Path: return params[0] % 4 != 1;
  case Family::Cycle: return params[0] % 12 == 0;
  case Family::CompleteBipartite: return params[0] == 1 || params[1] == 1;
  case Family::Hypercube: return params[0] == 1;
  }
  return false;
}

} // namespace eocd
