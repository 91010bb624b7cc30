#pragma once

#include "eocd/domination.hpp"
#include "eocd/graph.hpp"

#include <optional>

namespace eocd {

/// Decides in O(nm) time whether g is an EOCD graph with P ⊆ D.
///
/// K2 components are set aside (each contributes D = both ends, P = the
/// smaller end). On the rest, P is the set of support vertices and D adds
/// the smallest leaf of each support; the pair is accepted iff the
/// closed neighborhoods of P cover V and no two P-vertices are within
/// distance two of each other (checked by BFS from every P-vertex).
std::optional<EocdCertificate> recognize_empty_pd(const Graph& g);

} // namespace eocd
