#include "eocd/graph.hpp"

#include "eocd/error.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace eocd {

namespace {

std::string pair_text(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0)
    throw Error("graph: negative vertex count");
  Graph g;
  g.adjacency_.resize(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error("graph: edge " + pair_text(u, v) + " has an endpoint outside 0.." +
                  std::to_string(n - 1));
    if (u == v)
      throw Error("graph: self-loop " + pair_text(u, v));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  int twice = 0;
  for (auto& adj : g.adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    twice += static_cast<int>(adj.size());
  }
  g.edge_count_ = twice / 2;
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& adj : adjacency_)
    best = std::max(best, static_cast<int>(adj.size()));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= order() || v < 0 || v >= order())
    return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u)
    for (int v : adjacency_[u])
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::string Graph::label(int v) const {
  if (v >= 0 && v < static_cast<int>(labels_.size()))
    return labels_[v];
  return std::to_string(v);
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && static_cast<int>(labels.size()) != order())
    throw Error("graph: expected " + std::to_string(order()) + " labels, got " +
                std::to_string(labels.size()));
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

std::optional<int> Graph::find_label(const std::string& name) const {
  for (int v = 0; v < static_cast<int>(labels_.size()); ++v)
    if (labels_[v] == name)
      return v;
  return std::nullopt;
}

VertexSet open_neighborhood(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error("open_neighborhood: vertex " + std::to_string(v) + " out of range");
  return VertexSet::from(g.order(), g.neighbors(v));
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet s = open_neighborhood(g, v);
  s.insert(v);
  return s;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw Error("bfs_distances: source " + std::to_string(source) + " out of range");
  std::vector<int> dist(g.order(), kUnreachable);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    VertexSet comp(g.order());
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      comp.insert(x);
      for (int y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.edge_count() == g.order() - 1 && is_connected(g);
}

Contraction contract_edges(const Graph& g, std::span<const Edge> matching) {
  const int n = g.order();
  std::vector<int> partner(n, -1);
  for (auto [u, v] : matching) {
    if (!g.has_edge(u, v))
      throw Error("contract_edges: " + pair_text(u, v) + " is not an edge");
    if (partner[u] != -1 || partner[v] != -1)
      throw Error("contract_edges: " + pair_text(u, v) + " shares an endpoint with another edge");
    partner[u] = v;
    partner[v] = u;
  }
  for (auto [u, v] : matching) {
    auto nu = g.neighbors(u);
    auto nv = g.neighbors(v);
    std::vector<int> common;
    std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
    if (!common.empty())
      throw Error("contract_edges: " + pair_text(u, v) + " lies in a triangle with " +
                  std::to_string(common.front()));
  }

  std::vector<int> map(n, -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (map[v] != -1)
      continue;
    map[v] = next;
    if (partner[v] != -1)
      map[partner[v]] = next;
    ++next;
  }

  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (map[u] != map[v])
      edges.emplace_back(map[u], map[v]);
  Graph out = Graph::from_edge_list(next, edges);

  if (g.has_labels()) {
    std::vector<std::string> labels(next);
    for (int v = 0; v < n; ++v) {
      auto& l = labels[map[v]];
      l = l.empty() ? g.label(v) : l + "+" + g.label(v);
    }
    out = out.with_labels(std::move(labels));
  }
  return {std::move(out), std::move(map)};
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw Error("induced_subgraph: vertex set universe does not match the graph");
  std::vector<int> original = s.members();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(original.size()); ++i)
    index[original[i]] = i;
  std::vector<Edge> edges;
  for (int i = 0; i < static_cast<int>(original.size()); ++i)
    for (int y : g.neighbors(original[i]))
      if (index[y] > i)
        edges.emplace_back(i, index[y]);
  Graph out = Graph::from_edge_list(static_cast<int>(original.size()), edges);
  if (g.has_labels()) {
    std::vector<std::string> labels;
    for (int v : original)
      labels.push_back(g.label(v));
    out = out.with_labels(std::move(labels));
  }
  return {std::move(out), std::move(original)};
}

Graph permute(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n)
    throw Error("permute: permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      throw Error("permute: not a permutation");
    hit[p] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    edges.emplace_back(perm[u], perm[v]);
  Graph out = Graph::from_edge_list(n, edges);
  if (g.has_labels()) {
    std::vector<std::string> labels(n);
    for (int v = 0; v < n; ++v)
      labels[perm[v]] = g.label(v);
    out = out.with_labels(std::move(labels));
  }
  return out;
}

} // namespace eocd
