#pragma once

#include "eocd/domination.hpp"
#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

// Brute-force reference implementations. They share nothing with the
// solvers beyond the Graph type: sets are bitmasks and coverage is counted
// directly from adjacency masks.
namespace eocd::oracle {

inline constexpr int kMaxOrder = 24;

using Mask = std::uint32_t;

/// Adjacency rows as bitmasks; throws if the graph has more than kMaxOrder vertices.
std::vector<Mask> adjacency_masks(const Graph& g);

bool is_ecd_mask(const std::vector<Mask>& adj, Mask s);
bool is_eod_mask(const std::vector<Mask>& adj, Mask s);

/// All ECD / EOD sets, ascending by mask value.
std::vector<Mask> ecd_sets(const Graph& g);
std::vector<Mask> eod_sets(const Graph& g);

/// Pair search over the enumerated sets under the requested relation.
std::optional<std::pair<Mask, Mask>> eocd_pair(const Graph& g, SearchMode mode);

int gamma(const Graph& g);
/// -1 when the graph has an isolated vertex.
int gamma_t(const Graph& g);

Mask to_mask(const VertexSet& s);
VertexSet to_set(int universe, Mask m);

} // namespace eocd::oracle
