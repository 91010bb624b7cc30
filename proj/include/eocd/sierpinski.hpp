#pragma once

#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include <string>
#include <vector>

namespace eocd {

inline constexpr long kSierpinskiDefaultCap = 4096;

/// S_p^n. Vertex id is the base-p value of s_n...s_1 (s_n most
/// significant); labels are the digit strings, dot-separated when p > 10.
/// Built by the direct adjacency rule and by the recursive definition, and
/// the two edge sets are compared. n = 0 gives K1.
Graph sierpinski(int p, int n, long max_vertices = kSierpinskiDefaultCap);

/// Same graph from each construction alone (exposed for tests).
Graph sierpinski_direct(int p, int n, long max_vertices = kSierpinskiDefaultCap);
Graph sierpinski_recursive(int p, int n, long max_vertices = kSierpinskiDefaultCap);

std::string sierpinski_label(int p, int n, int id);
std::vector<int> sierpinski_digits(int p, int n, int id); // s_n first

/// Id of the extreme vertex i^n.
int sierpinski_extreme(int p, int n, int i);

/// Vertices whose last two digits are (2i, 2i+1) or (2i+1, 2i).
/// Requires p even, p >= 4, n >= 2; the result is checked to be an EOD set.
VertexSet sierpinski_eod_set(int p, int n, long max_vertices = kSierpinskiDefaultCap);

/// Parity rule for p >= 3, n >= 2.
bool sierpinski_is_eocd(int p, int n);

/// p^(n-1) for even p >= 4, n >= 2.
long sierpinski_gamma_t(int p, int n);

} // namespace eocd
