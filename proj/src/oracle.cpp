#include "eocd/oracle.hpp"

#include "eocd/error.hpp"

#include <bit>

namespace eocd::oracle {

std::vector<Mask> adjacency_masks(const Graph& g) {
  if (g.order() > kMaxOrder)
    throw Error("oracle: graph has more than " + std::to_string(kMaxOrder) + " vertices");
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

namespace {

Mask full_mask(int n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Adds `row` to the running coverage, failing on any overlap.
bool exact_union(const std::vector<Mask>& rows, Mask s, Mask universe) {
  Mask seen = 0;
  for (int v = 0; s; ++v, s >>= 1) {
    if (!(s & 1))
      continue;
    if (seen & rows[v])
      return false;
    seen |= rows[v];
  }
  return seen == universe;
}

template <class Pred>
std::vector<Mask> enumerate(int n, Pred pred) {
  std::vector<Mask> out;
  for (Mask s = 0; s <= full_mask(n); ++s) {
    if (pred(s))
      out.push_back(s);
    if (s == full_mask(n))
      break;
  }
  return out;
}

int smallest(int n, auto pred) {
  int best = -1;
  for (Mask s = 0;; ++s) {
    int size = std::popcount(s);
    if ((best == -1 || size < best) && pred(s))
      best = size;
    if (s == full_mask(n))
      break;
  }
  return best;
}

} // namespace

bool is_ecd_mask(const std::vector<Mask>& adj, Mask s) {
  const int n = static_cast<int>(adj.size());
  std::vector<Mask> closed(adj);
  for (int v = 0; v < n; ++v)
    closed[v] |= Mask{1} << v;
  return exact_union(closed, s, full_mask(n));
}

bool is_eod_mask(const std::vector<Mask>& adj, Mask s) {
  return exact_union(adj, s, full_mask(static_cast<int>(adj.size())));
}

std::vector<Mask> ecd_sets(const Graph& g) {
  auto adj = adjacency_masks(g);
  return enumerate(g.order(), [&](Mask s) { return is_ecd_mask(adj, s); });
}

std::vector<Mask> eod_sets(const Graph& g) {
  auto adj = adjacency_masks(g);
  return enumerate(g.order(), [&](Mask s) { return is_eod_mask(adj, s); });
}

std::optional<std::pair<Mask, Mask>> eocd_pair(const Graph& g, SearchMode mode) {
  auto ds = eod_sets(g);
  auto ps = ecd_sets(g);
  for (Mask d : ds)
    for (Mask p : ps) {
      bool ok = mode == SearchMode::Any || (mode == SearchMode::EmptyIntersection && !(d & p)) ||
                (mode == SearchMode::EmptyPMinusD && !(p & ~d));
      if (ok)
        return std::make_pair(d, p);
    }
  return std::nullopt;
}

int gamma(const Graph& g) {
  auto adj = adjacency_masks(g);
  const int n = g.order();
  return smallest(n, [&](Mask s) {
    Mask dominated = s;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1)
        dominated |= adj[v];
    return dominated == full_mask(n);
  });
}

int gamma_t(const Graph& g) {
  auto adj = adjacency_masks(g);
  const int n = g.order();
  for (Mask row : adj)
    if (!row)
      return -1;
  return smallest(n, [&](Mask s) {
    Mask dominated = 0;
    for (int v = 0; v < n; ++v)
      if (s >> v & 1)
        dominated |= adj[v];
    return dominated == full_mask(n);
  });
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  s.for_each([&](int v) { m |= Mask{1} << v; });
  return m;
}

VertexSet to_set(int universe, Mask m) {
  VertexSet s(universe);
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1)
      s.insert(v);
  return s;
}

} // namespace eocd::oracle
