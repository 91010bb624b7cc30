#include "eocd/transforms.hpp"

#include "eocd/domination.hpp"
#include "eocd/error.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace eocd {

CodedGraph eod_to_ecd(const Graph& g, const VertexSet& d) {
  if (d.universe() != g.order() || !is_eod_set(g, d))
    throw Error("eod_to_ecd: input set is not an EOD set");

  std::vector<Edge> matching;
  d.for_each([&](int v) {
    for (int y : g.neighbors(v))
      if (y > v && d.contains(y))
        matching.emplace_back(v, y);
  });
  auto contracted = contract_edges(g, matching);

  VertexSet code(contracted.graph.order());
  for (auto [u, v] : matching)
    code.insert(contracted.vertex_map[u]);
  if (!is_ecd_set(contracted.graph, code))
    throw std::logic_error("eod_to_ecd: contracted code is not an ECD set");
  return {std::move(contracted.graph), std::move(code)};
}

CodedGraph ecd_to_eod(const Graph& g, const VertexSet& p, const SplitPlan& plan) {
  if (p.universe() != g.order() || !is_ecd_set(g, p))
    throw Error("ecd_to_eod: input set is not an ECD set");
  for (const auto& [v, split] : plan)
    if (!p.contains(v))
      throw Error("ecd_to_eod: plan names vertex " + std::to_string(v) + " outside the code");

  const int n = g.order();
  std::vector<int> code = p.members();
  std::vector<int> b_half(n, -1);
  for (std::size_t i = 0; i < code.size(); ++i)
    b_half[code[i]] = n + static_cast<int>(i);

  std::vector<Edge> edges;
  std::vector<char> to_b(n, 0);
  for (int v : code) {
    std::vector<int> nb(g.neighbors(v).begin(), g.neighbors(v).end());
    std::fill(to_b.begin(), to_b.end(), 0);
    auto it = plan.find(v);
    if (it != plan.end()) {
      std::vector<int> a = it->second.a, b = it->second.b;
      std::vector<int> joined = a;
      joined.insert(joined.end(), b.begin(), b.end());
      std::sort(joined.begin(), joined.end());
      if (std::adjacent_find(joined.begin(), joined.end()) != joined.end() || joined != nb)
        throw Error("ecd_to_eod: split of vertex " + std::to_string(v) +
                    " is not a partition of its neighborhood");
      for (int y : b)
        to_b[y] = 1;
    }
    edges.emplace_back(v, b_half[v]);
    for (int y : nb)
      edges.emplace_back(to_b[y] ? b_half[v] : v, y);
  }
  for (auto [u, v] : g.edges())
    if (!p.contains(u) && !p.contains(v))
      edges.emplace_back(u, v);

  const int total = n + static_cast<int>(code.size());
  Graph out = Graph::from_edge_list(total, edges);
  if (g.has_labels()) {
    std::vector<std::string> labels = g.labels();
    labels.resize(total);
    for (int v : code) {
      labels[b_half[v]] = g.label(v) + "_B";
      labels[v] = g.label(v) + "_A";
    }
    out = out.with_labels(std::move(labels));
  }

  VertexSet d(total);
  for (int v : code) {
    d.insert(v);
    d.insert(b_half[v]);
  }
  if (!is_eod_set(out, d))
    throw std::logic_error("ecd_to_eod: split code is not an EOD set");
  return {std::move(out), std::move(d)};
}

} // namespace eocd
