#pragma once

#include "eocd/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

// Test-corpus generators.
namespace eocd::corpus {

/// Every labeled simple graph on n vertices (n <= 7), in edge-mask order.
std::vector<Graph> all_labeled_graphs(int n);

/// Isomorphism-invariant key for graphs on at most 11 vertices: colour
/// refinement followed by the minimum adjacency mask over all orderings
/// that respect the refined colour classes.
std::string canonical_key(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n
/// vertices (n <= 8), obtained by extending the (n-1)-vertex classes by a
/// vertex with every possible neighborhood.
std::vector<Graph> nonisomorphic_graphs(int n);

/// AHU encoding rooted at the center(s); equal iff the trees are isomorphic.
std::string tree_key(const Graph& t);

/// One representative per isomorphism class of trees on exactly n vertices.
std::vector<Graph> nonisomorphic_trees(int n);

/// G(n, p) with a fixed seed.
Graph random_graph(int n, double p, std::uint64_t seed);

/// Graph admitting an EOD set D and an ECD set P with P ⊆ D: `supports`
/// vertices, each with one private leaf and 0..max_extra further
/// neighbors, plus random edges among those extra neighbors (sparser
/// across groups).
/// Supports stay at distance at least three from each other.
Graph random_empty_pd_positive(int supports, int max_extra, double p, std::uint64_t seed);

/// `stars` disjoint copies of K_{1,leaves}.
Graph star_forest(int stars, int leaves);

/// K_{1,3} with its edges subdivided by a, b and c vertices.
Graph subdivided_claw(int a, int b, int c);

/// P_22 on v1..v22 (ids 0..21) plus u,w,x,y (ids 22..25) with edges
/// v5-u, u-w, v18-x, x-y.
Graph p22_plus();

} // namespace eocd::corpus
