#include "eocd/tree_ops.hpp"

#include "eocd/domination.hpp"
#include "eocd/error.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eocd {

namespace {

std::string ids_text(const std::vector<int>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(ids[i]);
  }
  return s;
}

void require_valid_state(const EocdTree& s, const std::string& who) {
  if (!is_tree(s.tree))
    throw Error(who + ": graph is not a tree");
  if (s.d.universe() != s.tree.order() || s.p.universe() != s.tree.order())
    throw Error(who + ": certificate universe does not match the tree");
  if (auto bad = eod_defect(s.tree, s.d))
    throw Error(who + ": D is not an EOD set (vertex " + std::to_string(bad->vertex) + ")");
  if (auto bad = ecd_defect(s.tree, s.p))
    throw Error(who + ": P is not an ECD set (vertex " + std::to_string(bad->vertex) + ")");
}

VertexSet grow(const VertexSet& s, int universe) {
  VertexSet out(universe);
  s.for_each([&](int v) { out.insert(v); });
  return out;
}

} // namespace

EocdTree k2_tree() {
  std::vector<Edge> e{{0, 1}};
  return {Graph::from_edge_list(2, e), VertexSet::of(2, {0, 1}), VertexSet::of(2, {0})};
}

int vertices_added(TreeOp op) {
  switch (op) {
  case TreeOp::O1: return 1;
  case TreeOp::O2: return 3;
  case TreeOp::O3: return 5;
  case TreeOp::O4: return 1;
  case TreeOp::O5: return 1;
  }
  throw Error("unknown tree operation");
}

static std::size_t attach_count(TreeOp op) {
  switch (op) {
  case TreeOp::O1:
  case TreeOp::O2:
  case TreeOp::O3: return 1;
  case TreeOp::O4: return 3;
  case TreeOp::O5: return 6;
  }
  return 0;
}

std::string to_string(TreeOp op) { return "O" + std::to_string(static_cast<int>(op)); }

EocdTree apply_step(const EocdTree& state, const TreeOpStep& step) {
  const std::string op = to_string(step.op);
  require_valid_state(state, op);
  const Graph& t = state.tree;
  const int n = t.order();
  const int added = vertices_added(step.op);

  if (step.attach.size() != attach_count(step.op))
    throw Error(op + ": expected " + std::to_string(attach_count(step.op)) + " attachment vertices");
  for (int a : step.attach)
    if (a < 0 || a >= n)
      throw Error(op + ": attachment vertex " + std::to_string(a) + " not in the tree");
  if (static_cast<int>(step.added.size()) != added)
    throw Error(op + ": expected " + std::to_string(added) + " new vertices");
  for (int i = 0; i < added; ++i)
    if (step.added[i] != n + i)
      throw Error(op + ": new vertex ids must be " + std::to_string(n) + ".." +
                  std::to_string(n + added - 1));

  auto in_d = [&](int v) { return state.d.contains(v); };
  auto in_p = [&](int v) { return state.p.contains(v); };
  auto fail = [&](const std::string& clause) { throw Error(op + ": precondition failed: " + clause); };

  std::vector<Edge> edges = t.edges();
  VertexSet d = grow(state.d, n + added);
  VertexSet p = grow(state.p, n + added);
  const auto& a = step.attach;
  const auto& nv = step.added;

  switch (step.op) {
  case TreeOp::O1: {
    int u = a[0];
    if (!(in_d(u) && in_p(u)))
      fail("u ∈ D'∩P'");
    edges.emplace_back(u, nv[0]);
    break;
  }
  case TreeOp::O2: {
    int w = a[0];
    if (in_d(w))
      fail("w ∉ D'");
    int x = nv[0], u = nv[1], v = nv[2];
    edges.insert(edges.end(), {{w, x}, {x, u}, {u, v}});
    d.insert(u);
    d.insert(v);
    p.insert(in_p(w) ? v : u);
    break;
  }
  case TreeOp::O3: {
    int tv = a[0];
    if (!(in_d(tv) && !in_p(tv)))
      fail("t ∈ D'−P'");
    int z = nv[0], w = nv[1], x = nv[2], u = nv[3], v = nv[4];
    edges.insert(edges.end(), {{tv, z}, {z, w}, {w, x}, {x, u}, {u, v}});
    d.insert(u);
    d.insert(x);
    p.insert(v);
    p.insert(w);
    break;
  }
  case TreeOp::O4: {
    int v = a[0], u = a[1], x = a[2];
    if (!t.has_edge(v, u) || !t.has_edge(u, x))
      fail("v-u-x is a path");
    if (t.degree(v) != 1)
      fail("deg(v) = 1");
    if (t.degree(u) != 2)
      fail("deg(u) = 2");
    if (!(in_d(u) && in_d(x)))
      fail("u, x ∈ D'");
    if (!in_p(u))
      fail("u ∈ P'");
    edges.emplace_back(nv[0], x);
    p.erase(u);
    p.insert(v);
    p.insert(nv[0]);
    break;
  }
  case TreeOp::O5: {
    int u = a[0], x = a[1], w = a[2], z = a[3], w2 = a[4], x2 = a[5];
    if (!t.has_edge(u, x) || !t.has_edge(x, w) || !t.has_edge(w, z) || !t.has_edge(z, w2) ||
        !t.has_edge(w2, x2))
      fail("u-x-w-z-w'-x' is a path");
    if (t.degree(u) != 1 || t.degree(x2) != 1)
      fail("deg(u) = deg(x') = 1");
    if (t.degree(x) != 2 || t.degree(w) != 2 || t.degree(w2) != 2)
      fail("deg(x) = deg(w) = deg(w') = 2");
    if (!(in_d(u) && in_d(x) && in_d(w2) && in_d(x2)))
      fail("u, x, w', x' ∈ D'");
    if (!(in_p(x) && in_p(w2)))
      fail("x, w' ∈ P'");
    edges.emplace_back(u, nv[0]);
    p.erase(x);
    p.erase(w2);
    p.insert(nv[0]);
    p.insert(x2);
    p.insert(w);
    break;
  }
  }

  Graph grown = Graph::from_edge_list(n + added, edges);
  if (t.has_labels()) {
    auto labels = t.labels();
    for (int i = 0; i < added; ++i)
      labels.push_back(std::to_string(n + i));
    grown = grown.with_labels(std::move(labels));
  }
  EocdTree out{std::move(grown), std::move(d), std::move(p)};
  if (!is_tree(out.tree) || !is_eod_set(out.tree, out.d) || !is_ecd_set(out.tree, out.p))
    throw std::logic_error(op + ": result certificate is invalid");
  return out;
}

EocdTree replay(const TreeOpSequence& seq) {
  EocdTree state = k2_tree();
  for (const auto& step : seq.steps)
    state = apply_step(state, step);
  if (seq.relabel.empty())
    return state;
  const int n = state.tree.order();
  if (static_cast<int>(seq.relabel.size()) != n)
    throw Error("replay: relabel has " + std::to_string(seq.relabel.size()) +
                " entries for a tree on " + std::to_string(n) + " vertices");
  EocdTree out{permute(state.tree, seq.relabel), VertexSet(n), VertexSet(n)};
  state.d.for_each([&](int v) { out.d.insert(seq.relabel[v]); });
  state.p.for_each([&](int v) { out.p.insert(seq.relabel[v]); });
  return out;
}

// ---------------------------------------------------------------------------
// Recognition: one leaf-up dynamic program per set type.

namespace {

// feasible[v][a][b]: the subtree of v admits a choice with v's membership a
// and its parent's membership b such that every vertex of the subtree is
// covered exactly once (closed neighborhoods if `closed`, else open).
std::optional<VertexSet> tree_perfect_set(const Graph& t, bool closed) {
  const int n = t.order();
  std::vector<int> order, parent(n, -1);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int y : t.neighbors(order[i]))
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = order[i];
        order.push_back(y);
      }

  std::vector<std::vector<int>> children(n);
  for (int v : order)
    if (parent[v] >= 0)
      children[parent[v]].push_back(v);

  std::vector<std::array<std::array<char, 2>, 2>> ok(n);
  std::vector<std::array<std::array<int, 2>, 2>> pick(n);

  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        ok[v][a][b] = 0;
        pick[v][a][b] = -1;
        int need = 1 - (closed ? a : 0) - b;
        if (need < 0)
          continue;
        int forced = -1, missing = 0;
        for (int c : children[v])
          if (!ok[c][0][a]) {
            ++missing;
            forced = c;
          }
        if (need == 0) {
          ok[v][a][b] = missing == 0;
          continue;
        }
        if (missing > 1)
          continue;
        if (missing == 1) {
          if (ok[forced][1][a]) {
            ok[v][a][b] = 1;
            pick[v][a][b] = forced;
          }
          continue;
        }
        for (int c : children[v])
          if (ok[c][1][a]) {
            ok[v][a][b] = 1;
            pick[v][a][b] = c;
            break;
          }
      }
  }

  int root_a = ok[0][1][0] ? 1 : (ok[0][0][0] ? 0 : -1);
  if (root_a < 0)
    return std::nullopt;

  VertexSet s(n);
  std::vector<std::array<int, 3>> stack{{0, root_a, 0}};
  while (!stack.empty()) {
    auto [v, a, b] = stack.back();
    stack.pop_back();
    if (a)
      s.insert(v);
    for (int c : children[v])
      stack.push_back({c, c == pick[v][a][b] ? 1 : 0, a});
  }
  return s;
}

} // namespace

std::optional<std::pair<VertexSet, VertexSet>> is_eocd_tree(const Graph& t) {
  if (!is_tree(t))
    throw Error("is_eocd_tree: input is not a tree");
  auto d = tree_perfect_set(t, false);
  if (!d)
    return std::nullopt;
  auto p = tree_perfect_set(t, true);
  if (!p)
    return std::nullopt;
  if (!is_eod_set(t, *d) || !is_ecd_set(t, *p))
    throw std::logic_error("is_eocd_tree: dynamic program produced an invalid set");
  return std::make_pair(std::move(*d), std::move(*p));
}

// ---------------------------------------------------------------------------
// Decomposition.

namespace {

struct Reduction {
  TreeOp op;
  std::vector<int> attach;
  std::vector<int> removed; // in the order the forward step adds them
  std::vector<int> d_remove;
  std::vector<int> p_remove;
  std::vector<int> p_add;
};

class Peeler {
public:
  Peeler(const Graph& t, const VertexSet& d, const VertexSet& p)
      : n_(t.order()), alive_(n_, 1), in_d_(n_), in_p_(n_), adj_(n_) {
    for (int v = 0; v < n_; ++v) {
      adj_[v].assign(t.neighbors(v).begin(), t.neighbors(v).end());
      in_d_[v] = d.contains(v);
      in_p_[v] = p.contains(v);
    }
    alive_count_ = n_;
  }

  int alive_count() const { return alive_count_; }

  Reduction next() {
    root_tree();
    int v = -1;
    for (int x = 0; x < n_; ++x)
      if (alive_[x] && children_[x].empty() && (v == -1 || depth_[x] > depth_[v]))
        v = x;
    return reduce_leaf(v);
  }

  void apply(const Reduction& r) {
    for (int x : r.removed) {
      alive_[x] = 0;
      --alive_count_;
      for (int y : adj_[x])
        std::erase(adj_[y], x);
      adj_[x].clear();
    }
    for (int x : r.d_remove)
      in_d_[x] = 0;
    for (int x : r.p_remove)
      in_p_[x] = 0;
    for (int x : r.p_add)
      in_p_[x] = 1;
    validate(to_string(r.op));
  }

  std::pair<int, int> base() const {
    std::vector<int> left;
    for (int x = 0; x < n_; ++x)
      if (alive_[x])
        left.push_back(x);
    int a = left.at(0), b = left.at(1);
    if (!in_d_[a] || !in_d_[b] || in_p_[a] == in_p_[b])
      throw std::logic_error("decompose: final K2 certificate is not D = both, P = one end");
    return in_p_[a] ? std::make_pair(a, b) : std::make_pair(b, a);
  }

private:
  bool D(int x) const { return in_d_[x]; }
  bool P(int x) const { return in_p_[x]; }
  int deg(int x) const { return static_cast<int>(adj_[x].size()); }
  bool is_leaf(int x) const { return deg(x) == 1; }

  static void require(bool cond, const char* what) {
    if (!cond)
      throw std::logic_error(std::string("decompose: unexpected configuration: ") + what);
  }

  // Root: smallest live vertex of degree at least two.
  void root_tree() {
    root_ = -1;
    for (int x = 0; x < n_ && root_ == -1; ++x)
      if (alive_[x] && deg(x) >= 2)
        root_ = x;
    require(root_ != -1, "tree with more than two vertices has no inner vertex");
    parent_.assign(n_, -1);
    depth_.assign(n_, -1);
    children_.assign(n_, {});
    std::deque<int> queue{root_};
    depth_[root_] = 0;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      for (int y : adj_[x])
        if (depth_[y] == -1) {
          depth_[y] = depth_[x] + 1;
          parent_[y] = x;
          children_[x].push_back(y);
          queue.push_back(y);
        }
    }
  }

  std::vector<int> kids_except(int x, int skip) const {
    std::vector<int> out;
    for (int c : children_[x])
      if (c != skip)
        out.push_back(c);
    return out;
  }

  Reduction reduce_leaf(int v) {
    if (!D(v) && !P(v))
      return leaf_outside(v);
    if (D(v) && !P(v))
      return leaf_in_d_only(v);
    if (D(v) && P(v))
      return leaf_in_both(v);
    return leaf_in_p_only(v);
  }

  // Leaf outside D∪P hanging from u ∈ D∩P: inverse of O1.
  Reduction leaf_outside(int v) {
    int u = parent_[v];
    require(is_leaf(v) && !D(v) && !P(v), "O1 leaf must lie outside D∪P");
    require(D(u) && P(u), "O1 support must lie in D∩P");
    return {TreeOp::O1, {u}, {v}, {}, {}, {}};
  }

  // v ∈ D−P, support u ∈ D∩P.
  Reduction leaf_in_d_only(int v) {
    int u = parent_[v];
    require(D(u) && P(u), "support of a D−P leaf must lie in D∩P");
    auto others = kids_except(u, v);
    if (!others.empty())
      return leaf_outside(others.front());
    require(u != root_ && deg(u) == 2, "support of a D−P leaf has degree two");
    int x = parent_[u];
    require(!D(x) && !P(x), "x outside D∪P");
    require(x != root_ && deg(x) == 2, "x has degree two");
    int w = parent_[x];
    require(!D(w) && !P(w), "w outside D∪P");
    return {TreeOp::O2, {w}, {x, u, v}, {u, v}, {u}, {}};
  }

  // v ∈ D∩P.
  Reduction leaf_in_both(int v) {
    int u = parent_[v];
    require(u != root_ && deg(u) == 2, "support of a D∩P leaf has degree two");
    require(D(u) && !P(u), "support of a D∩P leaf lies in D−P");
    int x = parent_[u];
    require(!D(x) && !P(x), "x outside D∪P");
    require(x != root_ && deg(x) == 2, "x has degree two");
    int w = parent_[x];
    require(P(w) && !D(w), "w lies in P−D");
    return {TreeOp::O2, {w}, {x, u, v}, {u, v}, {v}, {}};
  }

  // v ∈ P−D.
  Reduction leaf_in_p_only(int v) {
    int u = parent_[v];
    require(u != root_ && deg(u) == 2, "support of a P−D leaf has degree two");
    require(D(u) && !P(u), "support of a P−D leaf lies in D−P");
    int x = parent_[u];
    require(D(x) && !P(x), "x lies in D−P");

    // A leaf y below x closes the path v-u-x-y: inverse of O4.
    for (int y : kids_except(x, u)) {
      if (is_leaf(y)) {
        require(P(y) && !D(y), "leaf sibling of u lies in P−D");
        return {TreeOp::O4, {v, u, x}, {y}, {}, {v, y}, {u}};
      }
    }
    require(children_[x].size() == 1 && x != root_, "x has degree two");
    int w = parent_[x];
    require(P(w) && !D(w), "w lies in P−D");

    // Another branch below w ends in a D∩P leaf.
    auto siblings = kids_except(w, x);
    if (!siblings.empty()) {
      int x1 = siblings.front();
      require(children_[x1].size() == 1, "sibling branch x' has one child");
      int u1 = children_[x1].front();
      require(children_[u1].size() == 1, "sibling branch u' has one child");
      return leaf_in_both(children_[u1].front());
    }
    require(w != root_, "w is not the root");
    int z = parent_[w];
    require(!D(z) && !P(z), "z outside D∪P");

    auto branches = kids_except(z, w);
    if (branches.empty()) {
      require(z != root_, "z is not the root");
      int t = parent_[z];
      require(D(t) && !P(t), "t lies in D−P");
      return {TreeOp::O3, {t}, {z, w, x, u, v}, {u, x}, {v, w}, {}};
    }

    int w1 = branches.front();
    require(!P(w1), "w' ∉ P");
    std::vector<int> p_kids;
    for (int c : children_[w1])
      if (P(c))
        p_kids.push_back(c);
    require(p_kids.size() == 1, "w' has exactly one child in P");
    int x1 = p_kids.front();

    if (!D(w1)) {
      require(D(x1), "x' ∈ D when w' ∉ D");
      std::vector<int> d_kids;
      for (int c : children_[x1])
        if (D(c))
          d_kids.push_back(c);
      require(d_kids.size() == 1, "x' has exactly one child in D");
      int u1 = d_kids.front();
      auto extra = kids_except(x1, u1);
      if (!extra.empty())
        return leaf_outside(extra.front());
      if (children_[w1].size() == 1)
        return {TreeOp::O2, {z}, {w1, x1, u1}, {x1, u1}, {x1}, {}};
      int x2 = kids_except(w1, x1).front();
      require(!D(x2) && !P(x2), "x'' outside D∪P");
      require(children_[x2].size() == 1, "x'' has one child");
      int u2 = children_[x2].front();
      require(D(u2) && P(u2), "u'' ∈ D∩P");
      int v2 = -1;
      for (int c : children_[u2])
        if (D(c))
          v2 = c;
      require(v2 != -1, "u'' has a child in D");
      return leaf_in_d_only(v2);
    }

    if (D(x1)) {
      if (!children_[x1].empty())
        return leaf_outside(children_[x1].front());
      require(children_[w1].size() == 1, "w' has degree two");
      // After removing v: u is a leaf and u-x-w-z-w'-x' matches O5.
      return {TreeOp::O5, {u, x, w, z, w1, x1}, {v}, {}, {x1, w, v}, {x, w1}};
    }

    require(children_[x1].empty(), "x' ∉ D is a leaf");
    std::vector<int> d_kids;
    for (int c : children_[w1])
      if (D(c))
        d_kids.push_back(c);
    require(d_kids.size() == 1, "w' has exactly one child in D");
    int x2 = d_kids.front();
    require(children_[x2].size() == 1, "x'' has degree two");
    int u2 = children_[x2].front();
    require(is_leaf(u2) && P(u2), "u'' is a leaf in P");
    return {TreeOp::O4, {u2, x2, w1}, {x1}, {}, {x1, u2}, {x2}};
  }

  void validate(const std::string& op) const {
    int edges = 0;
    std::vector<int> d_count(n_, 0), p_count(n_, 0);
    for (int x = 0; x < n_; ++x) {
      if (!alive_[x])
        continue;
      edges += deg(x);
      if (in_p_[x])
        ++p_count[x];
      for (int y : adj_[x]) {
        if (in_d_[x])
          ++d_count[y];
        if (in_p_[x])
          ++p_count[y];
      }
    }
    for (int x = 0; x < n_; ++x)
      if (alive_[x] && (d_count[x] != 1 || p_count[x] != 1))
        throw std::logic_error("decompose: removal for " + op + " left vertex " + std::to_string(x) +
                               " covered " + std::to_string(d_count[x]) + "x by D and " +
                               std::to_string(p_count[x]) + "x by P");
    if (edges / 2 != alive_count_ - 1)
      throw std::logic_error("decompose: removal for " + op + " disconnected the tree");
  }

  int n_;
  std::vector<char> alive_, in_d_, in_p_;
  std::vector<std::vector<int>> adj_;
  int alive_count_ = 0;
  int root_ = -1;
  std::vector<int> parent_, depth_;
  std::vector<std::vector<int>> children_;
};

} // namespace

TreeOpSequence decompose(const Graph& t, const VertexSet& d, const VertexSet& p) {
  require_valid_state(EocdTree{t, d, p}, "decompose");
  Peeler peeler(t, d, p);
  std::vector<Reduction> peeled;
  while (peeler.alive_count() > 2) {
    Reduction r = peeler.next();
    peeler.apply(r);
    peeled.push_back(std::move(r));
  }
  auto [a, b] = peeler.base();

  std::vector<int> construction(t.order(), -1);
  TreeOpSequence seq;
  seq.relabel = {a, b};
  construction[a] = 0;
  construction[b] = 1;
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    TreeOpStep step;
    step.op = it->op;
    for (int x : it->attach) {
      if (construction[x] < 0)
        throw std::logic_error("decompose: attachment vertex built after its step");
      step.attach.push_back(construction[x]);
    }
    for (int x : it->removed) {
      construction[x] = static_cast<int>(seq.relabel.size());
      step.added.push_back(construction[x]);
      seq.relabel.push_back(x);
    }
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Random growth.

std::vector<TreeOpStep> feasible_steps(const EocdTree& state) {
  const Graph& t = state.tree;
  const int n = t.order();
  auto D = [&](int v) { return state.d.contains(v); };
  auto P = [&](int v) { return state.p.contains(v); };
  auto other = [&](int x, int not_this) {
    for (int y : t.neighbors(x))
      if (y != not_this)
        return y;
    return -1;
  };
  auto fresh = [&](TreeOp op) {
    std::vector<int> ids(vertices_added(op));
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
      ids[i] = n + i;
    return ids;
  };

  std::vector<TreeOpStep> out;
  for (int u = 0; u < n; ++u)
    if (D(u) && P(u))
      out.push_back({TreeOp::O1, {u}, fresh(TreeOp::O1)});
  for (int w = 0; w < n; ++w)
    if (!D(w))
      out.push_back({TreeOp::O2, {w}, fresh(TreeOp::O2)});
  for (int tv = 0; tv < n; ++tv)
    if (D(tv) && !P(tv))
      out.push_back({TreeOp::O3, {tv}, fresh(TreeOp::O3)});
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) != 1)
      continue;
    int u = t.neighbors(v)[0];
    if (t.degree(u) != 2 || !D(u) || !P(u))
      continue;
    int x = other(u, v);
    if (D(x))
      out.push_back({TreeOp::O4, {v, u, x}, fresh(TreeOp::O4)});
  }
  for (int u = 0; u < n; ++u) {
    if (t.degree(u) != 1 || !D(u))
      continue;
    int x = t.neighbors(u)[0];
    if (t.degree(x) != 2 || !D(x) || !P(x))
      continue;
    int w = other(x, u);
    if (t.degree(w) != 2)
      continue;
    int z = other(w, x);
    for (int w2 : t.neighbors(z)) {
      if (w2 == w || t.degree(w2) != 2 || !D(w2) || !P(w2))
        continue;
      int x2 = other(w2, z);
      if (t.degree(x2) == 1 && D(x2))
        out.push_back({TreeOp::O5, {u, x, w, z, w2, x2}, fresh(TreeOp::O5)});
    }
  }
  return out;
}

RandomTree random_eocd_tree(int steps, std::uint64_t seed) {
  if (steps < 0)
    throw Error("random_eocd_tree: negative step count");
  std::mt19937_64 rng(seed);
  RandomTree out{k2_tree(), {}};
  for (int i = 0; i < steps; ++i) {
    auto options = feasible_steps(out.state);
    std::map<TreeOp, std::vector<const TreeOpStep*>> by_op;
    for (const auto& s : options)
      by_op[s.op].push_back(&s);
    if (by_op.empty())
      throw std::logic_error("random_eocd_tree: no feasible operation");
    auto kind = std::next(by_op.begin(), static_cast<long>(rng() % by_op.size()));
    const auto& pool = kind->second;
    const TreeOpStep& step = *pool[rng() % pool.size()];
    out.state = apply_step(out.state, step);
    out.sequence.steps.push_back(step);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization.

void write_sequence(std::ostream& out, const TreeOpSequence& seq) {
  if (!seq.relabel.empty())
    out << "relabel=" << ids_text(seq.relabel) << '\n';
  for (const auto& s : seq.steps)
    out << to_string(s.op) << " attach=" << ids_text(s.attach) << " new=" << ids_text(s.added)
        << '\n';
}

TreeOpSequence read_sequence(std::istream& in) {
  auto parse_ids = [](const std::string& text, int line_no) {
    std::vector<int> ids;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size() || v < 0)
          throw std::invalid_argument(item);
        ids.push_back(v);
      } catch (const std::exception&) {
        throw Error("sequence line " + std::to_string(line_no) + ": bad vertex id '" + item + "'");
      }
    }
    return ids;
  };

  TreeOpSequence seq;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;)
      tok.push_back(t);
    if (tok.empty())
      continue;
    if (tok[0].rfind("relabel=", 0) == 0 && tok.size() == 1) {
      seq.relabel = parse_ids(tok[0].substr(8), line_no);
      continue;
    }
    if (tok.size() != 3 || tok[0].size() != 2 || tok[0][0] != 'O' || tok[0][1] < '1' ||
        tok[0][1] > '5' || tok[1].rfind("attach=", 0) != 0 || tok[2].rfind("new=", 0) != 0)
      throw Error("sequence line " + std::to_string(line_no) + ": expected 'Oi attach=<ids> new=<ids>'");
    TreeOpStep step;
    step.op = static_cast<TreeOp>(tok[0][1] - '0');
    step.attach = parse_ids(tok[1].substr(7), line_no);
    step.added = parse_ids(tok[2].substr(4), line_no);
    seq.steps.push_back(std::move(step));
  }
  return seq;
}

} // namespace eocd
