#include "eocd/corpus.hpp"

#include "eocd/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

namespace eocd::corpus {

std::vector<Graph> all_labeled_graphs(int n) {
  if (n < 0 || n > 7)
    throw Error("all_labeled_graphs: n must be in 0..7");
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      slots.emplace_back(u, v);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<Edge> e;
    for (std::size_t k = 0; k < slots.size(); ++k)
      if (mask >> k & 1)
        e.push_back(slots[k]);
    out.push_back(Graph::from_edge_list(n, e));
  }
  return out;
}

namespace {

std::vector<int> refine_colours(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v)
    colour[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (int y : g.neighbors(v))
        sig[v].second.push_back(colour[y]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v)
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    bool stable = std::set<int>(next.begin(), next.end()).size() ==
                  std::set<int>(colour.begin(), colour.end()).size();
    colour = std::move(next);
    if (stable)
      break;
  }
  return colour;
}

} // namespace

std::string canonical_key(const Graph& g) {
  const int n = g.order();
  if (n > 11)
    throw Error("canonical_key: more than 11 vertices");
  auto colour = refine_colours(g);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::pair(colour[a], a) < std::pair(colour[b], b); });

  // Class boundaries in `order`; permute within each class independently.
  std::vector<std::pair<int, int>> classes;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && colour[order[j]] == colour[order[i]])
      ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto score = [&] {
    std::uint64_t m = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(order[i], order[j]))
          m |= std::uint64_t{1} << bit;
    best = std::min(best, m);
  };
  // Odometer over the per-class permutations.
  auto step = [&](auto&& self, std::size_t k) -> void {
    if (k == classes.size()) {
      score();
      return;
    }
    auto [lo, hi] = classes[k];
    std::sort(order.begin() + lo, order.begin() + hi);
    do
      self(self, k + 1);
    while (std::next_permutation(order.begin() + lo, order.begin() + hi));
  };
  step(step, 0);

  std::string key = std::to_string(n) + ":";
  for (auto [lo, hi] : classes)
    key += std::to_string(colour[order[lo]]) + "x" + std::to_string(hi - lo) + ",";
  return key + ":" + std::to_string(best);
}

std::vector<Graph> nonisomorphic_graphs(int n) {
  if (n < 0 || n > 8)
    throw Error("nonisomorphic_graphs: n must be in 0..8");
  if (n == 0)
    return {Graph::from_edge_list(0, {})};
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const Graph& base : nonisomorphic_graphs(n - 1)) {
    auto edges = base.edges();
    for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
      auto e = edges;
      for (int v = 0; v < n - 1; ++v)
        if (nb >> v & 1)
          e.emplace_back(v, n - 1);
      Graph g = Graph::from_edge_list(n, e);
      if (seen.insert(canonical_key(g)).second)
        out.push_back(std::move(g));
    }
  }
  return out;
}

namespace {

std::string rooted_code(const Graph& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int y : t.neighbors(v))
    if (y != parent)
      kids.push_back(rooted_code(t, y, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids)
    s += k;
  return s + ")";
}

} // namespace

std::string tree_key(const Graph& t) {
  if (!is_tree(t))
    throw Error("tree_key: not a tree");
  const int n = t.order();
  // Centers by repeated leaf stripping.
  std::vector<int> deg(n);
  std::vector<int> layer;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1)
      layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    std::vector<int> next;
    remaining -= static_cast<int>(layer.size());
    for (int v : layer)
      for (int y : t.neighbors(v))
        if (--deg[y] == 1)
          next.push_back(y);
    layer = std::move(next);
  }
  std::string best;
  for (int c : layer) {
    auto code = rooted_code(t, c, -1);
    if (best.empty() || code < best)
      best = code;
  }
  return best;
}

std::vector<Graph> nonisomorphic_trees(int n) {
  if (n < 1)
    throw Error("nonisomorphic_trees: n must be positive");
  if (n == 1)
    return {Graph::from_edge_list(1, {})};
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  for (const Graph& base : nonisomorphic_trees(n - 1))
    for (int v = 0; v < n - 1; ++v) {
      auto e = base.edges();
      e.emplace_back(v, n - 1);
      Graph t = Graph::from_edge_list(n, e);
      if (seen.insert(tree_key(t)).second)
        out.push_back(std::move(t));
    }
  return out;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        e.emplace_back(u, v);
  return Graph::from_edge_list(n, e);
}

Graph random_empty_pd_positive(int supports, int max_extra, double p, std::uint64_t seed) {
  if (supports < 1 || max_extra < 0)
    throw Error("random_empty_pd_positive: need at least one support");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  std::vector<std::pair<int, int>> extras; // (vertex, group)
  int next = 0;
  for (int s = 0; s < supports; ++s) {
    int support = next++;
    int leaf = next++;
    e.emplace_back(support, leaf);
    int extra = static_cast<int>(rng() % (max_extra + 1));
    std::vector<int> group;
    for (int k = 0; k < extra; ++k) {
      group.push_back(next);
      extras.emplace_back(next, s);
      e.emplace_back(support, next++);
    }
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b)
        if (coin(rng))
          e.emplace_back(group[a], group[b]);
  }
  std::bernoulli_distribution across(p / 4);
  for (std::size_t a = 0; a < extras.size(); ++a)
    for (std::size_t b = a + 1; b < extras.size(); ++b)
      if (extras[a].second != extras[b].second && across(rng))
        e.emplace_back(extras[a].first, extras[b].first);
  // Shuffle ids so supports are not always the even vertices.
  std::vector<int> perm(next);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return permute(Graph::from_edge_list(next, e), perm);
}

Graph star_forest(int stars, int leaves) {
  if (stars < 0 || leaves < 1)
    throw Error("star_forest: bad parameters");
  std::vector<Edge> e;
  for (int s = 0; s < stars; ++s) {
    int centre = s * (leaves + 1);
    for (int l = 1; l <= leaves; ++l)
      e.emplace_back(centre, centre + l);
  }
  return Graph::from_edge_list(stars * (leaves + 1), e);
}

Graph subdivided_claw(int a, int b, int c) {
  std::vector<Edge> e;
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int k = 0; k <= len; ++k) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, e);
}

Graph p22_plus() {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < 22; ++i)
    e.emplace_back(i, i + 1);
  const int u = 22, w = 23, x = 24, y = 25;
  e.insert(e.end(), {{4, u}, {u, w}, {17, x}, {x, y}});
  return Graph::from_edge_list(26, e);
}

} // namespace eocd::corpus
