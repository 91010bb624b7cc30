#pragma once

#include "eocd/vertex_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace eocd {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable once built;
/// every transform returns a new graph together with a vertex map.
class Graph {
public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops and out-of-range endpoints throw
  /// eocd::Error naming the offending pair.
  static Graph from_edge_list(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adjacency_.at(v).size()); }
  int max_degree() const;

  /// Sorted neighbor ids.
  std::span<const int> neighbors(int v) const { return adjacency_.at(v); }
  bool has_edge(int u, int v) const;

  /// All edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// Display name of v; falls back to the decimal id when unlabeled.
  std::string label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Copy of this graph carrying the given labels (one per vertex).
  Graph with_labels(std::vector<std::string> labels) const;
  std::optional<int> find_label(const std::string& name) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
  int edge_count_ = 0;
};

inline constexpr int kUnreachable = -1;

VertexSet open_neighborhood(const Graph& g, int v);
VertexSet closed_neighborhood(const Graph& g, int v);

/// Hop distances from source; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, int source);

/// Components ordered by their minimum member.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

struct Contraction {
  Graph graph;
  std::vector<int> vertex_map; // old vertex -> new vertex
};

/// Contracts every edge of a matching. Edges lying in a triangle are
/// rejected since contracting them would create a parallel edge. New ids
/// follow the order of the smallest old member of each merged class.
Contraction contract_edges(const Graph& g, std::span<const Edge> matching);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> original; // new vertex -> old vertex
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// Relabels vertex ids through a permutation (new id = perm[old id]).
Graph permute(const Graph& g, std::span<const int> perm);

} // namespace eocd
