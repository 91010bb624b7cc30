#pragma once

#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <map>
#include <vector>

namespace eocd {

/// How the neighbors of one code vertex are shared between its two halves.
struct Split {
  std::vector<int> a;
  std::vector<int> b;
};

/// Split per code vertex. Code vertices missing from the plan default to
/// A = all neighbors, B = ∅.
using SplitPlan = std::map<int, Split>;

struct CodedGraph {
  Graph graph;
  VertexSet code;
};

/// Contracts the perfect matching induced by an EOD set. The merged
/// vertices form an ECD set of the result.
CodedGraph eod_to_ecd(const Graph& g, const VertexSet& d);

/// Replaces every code vertex v by adjacent halves v_A (keeps id v) and
/// v_B (appended in increasing order of v), wired to A and B respectively.
/// The halves form an EOD set of the result.
CodedGraph ecd_to_eod(const Graph& g, const VertexSet& p, const SplitPlan& plan = {});

} // namespace eocd
