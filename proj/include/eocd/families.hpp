#pragma once

#include "eocd/graph.hpp"

#include <string>
#include <vector>

namespace eocd {

/// Path 0-1-...-(n-1); n >= 1.
Graph path(int n);
/// Cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle(int n);
/// K_{r,t}: side A = 0..r-1, side B = r..r+t-1.
Graph complete_bipartite(int r, int t);
/// Q_n: vertex id is the binary value of its n-bit label (labels attached).
Graph hypercube(int n);

enum class Family { Path, Cycle, CompleteBipartite, Hypercube };

/// Accepts "path", "cycle", "complete-bipartite" (or "kbip"), "hypercube".
Family parse_family(const std::string& name);
std::string to_string(Family f);
int family_arity(Family f);

Graph build_family(Family f, const std::vector<int>& params);

/// Closed-form EOCD membership for the family instance.
bool predicted_eocd(Family f, const std::vector<int>& params);

} // namespace eocd
