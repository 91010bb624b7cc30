#include "eocd/sierpinski.hpp"

#include "eocd/domination.hpp"
#include "eocd/error.hpp"

#include <stdexcept>

namespace eocd {

namespace {

long checked_order(int p, int n, long cap) {
  if (p < 1)
    throw Error("sierpinski: p must be at least 1");
  if (n < 0)
    throw Error("sierpinski: n must be non-negative");
  long order = 1;
  for (int i = 0; i < n; ++i) {
    order *= p;
    if (order > cap)
      throw Error("sierpinski: p^n exceeds the vertex cap of " + std::to_string(cap));
  }
  return order;
}

std::vector<std::string> all_labels(int p, int n, int order) {
  std::vector<std::string> labels(order);
  for (int v = 0; v < order; ++v)
    labels[v] = sierpinski_label(p, n, v);
  return labels;
}

} // namespace

std::vector<int> sierpinski_digits(int p, int n, int id) {
  std::vector<int> digits(n);
  for (int d = n - 1; d >= 0; --d) {
    digits[d] = id % p;
    id /= p;
  }
  return digits;
}

std::string sierpinski_label(int p, int n, int id) {
  if (n == 0)
    return "-";
  std::string s;
  for (int digit : sierpinski_digits(p, n, id)) {
    if (p > 10 && !s.empty())
      s += '.';
    s += std::to_string(digit);
  }
  return s;
}

int sierpinski_extreme(int p, int n, int i) {
  if (i < 0 || i >= p)
    throw Error("sierpinski_extreme: digit out of range");
  int id = 0;
  for (int d = 0; d < n; ++d)
    id = id * p + i;
  return id;
}

// s ~ t iff for some position δ: digits above δ agree, s_δ != t_δ, and
// below δ s is constant t_δ while t is constant s_δ. Starting from s, the
// partner for a given δ is therefore determined once s's lower digits are
// all equal to some j != s_δ.
Graph sierpinski_direct(int p, int n, long max_vertices) {
  const int order = static_cast<int>(checked_order(p, n, max_vertices));
  std::vector<Edge> edges;
  for (int s = 0; s < order; ++s) {
    auto sd = sierpinski_digits(p, n, s); // sd[0] = s_n
    for (int pos = n - 1; pos >= 0; --pos) {
      // Position pos in sd is δ = n - pos; the lower digits are sd[pos+1..].
      std::vector<int> js;
      if (pos == n - 1) {
        for (int j = 0; j < p; ++j)
          js.push_back(j);
      } else {
        bool constant = true;
        for (int k = pos + 2; k < n; ++k)
          constant = constant && sd[k] == sd[pos + 1];
        if (constant)
          js.push_back(sd[pos + 1]);
      }
      for (int j : js) {
        if (j == sd[pos])
          continue;
        auto td = sd;
        td[pos] = j;
        for (int k = pos + 1; k < n; ++k)
          td[k] = sd[pos];
        int t = 0;
        for (int digit : td)
          t = t * p + digit;
        if (s < t)
          edges.emplace_back(s, t);
      }
    }
  }
  return Graph::from_edge_list(order, edges).with_labels(all_labels(p, n, order));
}

Graph sierpinski_recursive(int p, int n, long max_vertices) {
  const int order = static_cast<int>(checked_order(p, n, max_vertices));
  std::vector<Edge> edges; // edges of S_p^k, built up from k = 1
  int block = 1;           // p^(k-1)
  if (n >= 1) {
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        edges.emplace_back(i, j);
  }
  for (int k = 2; k <= n && p > 1; ++k) {
    block *= p;
    std::vector<Edge> next;
    for (int i = 0; i < p; ++i)
      for (auto [s, t] : edges)
        next.emplace_back(i * block + s, i * block + t);
    // {i j^(k-1), j i^(k-1)}
    int ones = (block - 1) / (p - 1); // 11...1 in base p, k-1 digits
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        next.emplace_back(i * block + j * ones, j * block + i * ones);
    edges = std::move(next);
  }
  return Graph::from_edge_list(order, edges).with_labels(all_labels(p, n, order));
}

Graph sierpinski(int p, int n, long max_vertices) {
  Graph direct = sierpinski_direct(p, n, max_vertices);
  Graph recursive = sierpinski_recursive(p, n, max_vertices);
  if (!(direct == recursive))
    throw std::logic_error("sierpinski: direct and recursive constructions disagree for p=" +
                           std::to_string(p) + ", n=" + std::to_string(n));
  return direct;
}

VertexSet sierpinski_eod_set(int p, int n, long max_vertices) {
  if (p < 4 || p % 2 != 0 || n < 2)
    throw Error("sierpinski_eod_set: requires even p >= 4 and n >= 2");
  Graph g = sierpinski(p, n, max_vertices);
  VertexSet d(g.order());
  for (int v = 0; v < g.order(); ++v) {
    int last = v % p, second = v / p % p;
    if (second / 2 == last / 2 && second != last)
      d.insert(v);
  }
  if (!is_eod_set(g, d))
    throw std::logic_error("sierpinski_eod_set: constructed set is not an EOD set");
  return d;
}

bool sierpinski_is_eocd(int p, int n) {
  if (p < 3 || n < 2)
    throw Error("sierpinski_is_eocd: requires p >= 3 and n >= 2");
  return p % 2 == 0;
}

long sierpinski_gamma_t(int p, int n) {
  if (p < 4 || p % 2 != 0 || n < 2)
    throw Error("sierpinski_gamma_t: requires even p >= 4 and n >= 2");
  long r = 1;
  for (int i = 1; i < n; ++i)
    r *= p;
  return r;
}

} // namespace eocd
