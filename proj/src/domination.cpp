#include "eocd/domination.hpp"

#include "eocd/error.hpp"
#include "eocd/exact_cover.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace eocd {

EocdCertificate::EocdCertificate(VertexSet d, VertexSet p)
    : d_(std::move(d)), p_(std::move(p)) {
  if (d_.universe() != p_.universe())
    throw Error("certificate: D and P have different universes");
  dp_ = d_ & p_;
  d_only_ = d_ - p_;
  p_only_ = p_ - d_;
  r_ = VertexSet::full(d_.universe()) - (d_ | p_);
}

namespace {

void require_universe(const Graph& g, const VertexSet& s, const char* who) {
  if (s.universe() != g.order())
    throw Error(std::string(who) + ": vertex set universe " + std::to_string(s.universe()) +
                " does not match graph order " + std::to_string(g.order()));
}

std::optional<CoverDefect> cover_defect(const Graph& g, const VertexSet& s, bool closed) {
  std::vector<int> count(g.order(), 0);
  s.for_each([&](int v) {
    if (closed)
      ++count[v];
    for (int y : g.neighbors(v))
      ++count[y];
  });
  for (int v = 0; v < g.order(); ++v)
    if (count[v] != 1)
      return CoverDefect{v, count[v]};
  return std::nullopt;
}

// Rows are added in vertex order so the first solution is deterministic.
std::vector<VertexSet> neighborhood_covers(const Graph& g, bool closed, std::size_t limit) {
  const int n = g.order();
  ExactCover ec(n);
  std::vector<int> row_vertex;
  for (int v = 0; v < n; ++v) {
    std::vector<int> cols(g.neighbors(v).begin(), g.neighbors(v).end());
    if (closed)
      cols.push_back(v);
    if (cols.empty())
      continue;
    ec.add_row(cols);
    row_vertex.push_back(v);
  }
  std::vector<VertexSet> out;
  if (limit == 0)
    return out;
  ec.search([&](std::span<const int> rows) {
    VertexSet s(n);
    for (int r : rows)
      s.insert(row_vertex[r]);
    out.push_back(std::move(s));
    return out.size() < limit;
  });
  return out;
}

std::optional<EocdCertificate> joint_search(const Graph& g, SearchMode mode) {
  const int n = g.order();
  // Columns: [0,n) D-universe, [n,2n) P-universe, [2n,3n) one-row-per-vertex.
  ExactCover ec(2 * n, n);
  struct RowInfo {
    int vertex;
    bool in_d, in_p;
  };
  std::vector<RowInfo> info;
  for (int v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    std::vector<int> open_cols(nb.begin(), nb.end());
    std::vector<int> closed_cols;
    for (int y : nb)
      closed_cols.push_back(n + y);
    closed_cols.push_back(n + v);

    if (!open_cols.empty()) {
      std::vector<int> row = open_cols;
      row.push_back(2 * n + v);
      ec.add_row(row);
      info.push_back({v, true, false});
    }
    if (mode == SearchMode::EmptyIntersection) {
      std::vector<int> row = closed_cols;
      row.push_back(2 * n + v);
      ec.add_row(row);
      info.push_back({v, false, true});
    } else if (!open_cols.empty()) {
      std::vector<int> row = open_cols;
      row.insert(row.end(), closed_cols.begin(), closed_cols.end());
      row.push_back(2 * n + v);
      ec.add_row(row);
      info.push_back({v, true, true});
    }
  }
  std::vector<int> rows;
  if (!ec.first(rows))
    return std::nullopt;
  VertexSet d(n), p(n);
  for (int r : rows) {
    if (info[r].in_d)
      d.insert(info[r].vertex);
    if (info[r].in_p)
      p.insert(info[r].vertex);
  }
  return EocdCertificate(std::move(d), std::move(p));
}

// Branch-and-bound for (total) domination at a fixed budget, wrapped in
// iterative deepening from a counting lower bound to the greedy size.
class DominationSearch {
public:
  DominationSearch(const Graph& g, bool total) : g_(g), total_(total), all_(VertexSet::full(g.order())) {
    for (int v = 0; v < g.order(); ++v) {
      VertexSet c = open_neighborhood(g, v);
      if (!total)
        c.insert(v);
      cover_.push_back(std::move(c));
    }
  }

  VertexSet solve() {
    const int n = g_.order();
    if (n == 0)
      return VertexSet(0);
    VertexSet greedy = greedy_set();
    int max_cover = 0;
    for (const auto& c : cover_)
      max_cover = std::max(max_cover, c.size());
    int lower = (n + max_cover - 1) / max_cover;
    if (total_)
      lower = std::max(lower, 2);
    for (int k = lower; k < greedy.size(); ++k) {
      chosen_.clear();
      if (dfs(VertexSet(n), k))
        return VertexSet::from(n, chosen_);
    }
    return greedy;
  }

private:
  VertexSet greedy_set() const {
    const int n = g_.order();
    VertexSet dominated(n), chosen(n);
    while (dominated != all_) {
      int best = -1, best_gain = -1;
      for (int v = 0; v < n; ++v) {
        int gain = (cover_[v] - dominated).size();
        if (gain > best_gain) {
          best = v;
          best_gain = gain;
        }
      }
      chosen.insert(best);
      dominated |= cover_[best];
    }
    return chosen;
  }

  bool dfs(const VertexSet& dominated, int budget) {
    if (dominated == all_)
      return true;
    if (budget == 0)
      return false;
    const VertexSet open = all_ - dominated;
    const int remaining = open.size();

    std::vector<int> gains(g_.order());
    for (int v = 0; v < g_.order(); ++v)
      gains[v] = (cover_[v] & open).size();
    std::vector<int> sorted = gains;
    std::partial_sort(sorted.begin(), sorted.begin() + std::min<int>(budget, sorted.size()),
                      sorted.end(), std::greater<>());
    int reach = 0;
    for (int i = 0; i < budget && i < static_cast<int>(sorted.size()); ++i)
      reach += sorted[i];
    if (reach < remaining)
      return false;

    // Branch on the undominated vertex with the fewest candidates.
    int target = -1, fewest = 0;
    open.for_each([&](int u) {
      int k = g_.degree(u) + (total_ ? 0 : 1);
      if (target == -1 || k < fewest) {
        target = u;
        fewest = k;
      }
    });
    std::vector<int> cands(g_.neighbors(target).begin(), g_.neighbors(target).end());
    if (!total_)
      cands.push_back(target);
    std::sort(cands.begin(), cands.end());

    // Drop candidates whose fresh coverage is contained in another's.
    std::vector<VertexSet> fresh;
    for (int c : cands)
      fresh.push_back(cover_[c] & open);
    std::vector<int> keep;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      bool dominated_by_other = false;
      for (std::size_t j = 0; j < cands.size() && !dominated_by_other; ++j) {
        if (i == j || !fresh[i].is_subset_of(fresh[j]))
          continue;
        dominated_by_other = fresh[i] != fresh[j] || j < i;
      }
      if (!dominated_by_other)
        keep.push_back(static_cast<int>(i));
    }
    std::stable_sort(keep.begin(), keep.end(), [&](int a, int b) {
      return gains[cands[a]] > gains[cands[b]];
    });

    for (int i : keep) {
      chosen_.push_back(cands[i]);
      if (dfs(dominated | cover_[cands[i]], budget - 1))
        return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  bool total_;
  VertexSet all_;
  std::vector<VertexSet> cover_;
  std::vector<int> chosen_;
};

} // namespace

std::optional<CoverDefect> ecd_defect(const Graph& g, const VertexSet& p) {
  require_universe(g, p, "ecd check");
  return cover_defect(g, p, true);
}

std::optional<CoverDefect> eod_defect(const Graph& g, const VertexSet& d) {
  require_universe(g, d, "eod check");
  return cover_defect(g, d, false);
}

bool is_ecd_set(const Graph& g, const VertexSet& p) { return !ecd_defect(g, p); }

bool is_eod_set(const Graph& g, const VertexSet& d) { return !eod_defect(g, d); }

std::optional<VertexSet> find_ecd(const Graph& g) {
  auto all = neighborhood_covers(g, true, 1);
  if (all.empty())
    return std::nullopt;
  return all.front();
}

std::optional<VertexSet> find_eod(const Graph& g) {
  auto all = neighborhood_covers(g, false, 1);
  if (all.empty())
    return std::nullopt;
  return all.front();
}

std::vector<VertexSet> all_ecd_sets(const Graph& g, std::size_t limit) {
  return neighborhood_covers(g, true, limit);
}

std::vector<VertexSet> all_eod_sets(const Graph& g, std::size_t limit) {
  return neighborhood_covers(g, false, limit);
}

std::optional<EocdCertificate> find_eocd(const Graph& g, SearchMode mode) {
  if (mode != SearchMode::Any)
    return joint_search(g, mode);
  auto d = find_eod(g);
  if (!d)
    return std::nullopt;
  auto p = find_ecd(g);
  if (!p)
    return std::nullopt;
  return EocdCertificate(std::move(*d), std::move(*p));
}

VertexSet minimum_dominating_set(const Graph& g) { return DominationSearch(g, false).solve(); }

VertexSet minimum_total_dominating_set(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw Error("gamma_t: vertex " + std::to_string(v) + " is isolated");
  return DominationSearch(g, true).solve();
}

int gamma(const Graph& g) { return minimum_dominating_set(g).size(); }

int gamma_t(const Graph& g) { return minimum_total_dominating_set(g).size(); }

bool StructureReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

StructureReport classify_partition(const Graph& g, const EocdCertificate& cert) {
  require_universe(g, cert.d(), "classify_partition");
  if (auto bad = eod_defect(g, cert.d()))
    throw Error("classify_partition: D is not an EOD set (vertex " + std::to_string(bad->vertex) +
                " covered " + std::to_string(bad->times_covered) + " times)");
  if (auto bad = ecd_defect(g, cert.p()))
    throw Error("classify_partition: P is not an ECD set (vertex " + std::to_string(bad->vertex) +
                " covered " + std::to_string(bad->times_covered) + " times)");

  const int n = g.order();
  struct Counts {
    int dp = 0, d_only = 0, p_only = 0;
  };
  auto counts = [&](int v) {
    Counts c;
    for (int y : g.neighbors(v)) {
      c.dp += cert.dp().contains(y);
      c.d_only += cert.d_only().contains(y);
      c.p_only += cert.p_only().contains(y);
    }
    return c;
  };
  auto check_all = [&](const std::string& name, const VertexSet& group, auto&& ok) {
    StructureCheck check{name, true, std::nullopt};
    group.for_each([&](int v) {
      if (check.passed && !ok(counts(v))) {
        check.passed = false;
        check.witness = v;
      }
    });
    return check;
  };
  auto either_route = [](const Counts& c) {
    return (c.p_only == 1 && c.d_only == 1 && c.dp == 0) ||
           (c.dp == 1 && c.p_only == 0 && c.d_only == 0);
  };
  auto partner = [&](int v) {
    for (int y : g.neighbors(v))
      if (cert.d_only().contains(y))
        return y;
    return -1;
  };

  StructureReport report;
  report.checks.push_back(check_all("D∩P: one neighbor in D−P, none in P−D", cert.dp(),
                                    [](const Counts& c) { return c.d_only == 1 && c.p_only == 0; }));
  report.checks.push_back(check_all("P−D: one neighbor in D−P, none in D∩P", cert.p_only(),
                                    [](const Counts& c) { return c.d_only == 1 && c.dp == 0; }));
  report.checks.push_back(check_all("D−P: (one P−D and one D−P neighbor) or one D∩P neighbor",
                                    cert.d_only(), either_route));
  report.checks.push_back(check_all("R: (one P−D and one D−P neighbor) or one D∩P neighbor",
                                    cert.r(), either_route));

  auto with_partners = [&](const VertexSet& base) {
    VertexSet s = base;
    base.for_each([&](int v) {
      int y = partner(v);
      if (y >= 0)
        s.insert(y);
    });
    return s;
  };

  {
    StructureCheck check{"D∩P with partners induces a matching", true, std::nullopt};
    auto sub = induced_subgraph(g, with_partners(cert.dp()));
    for (int i = 0; i < sub.graph.order() && check.passed; ++i)
      if (sub.graph.degree(i) != 1) {
        check.passed = false;
        check.witness = sub.original[i];
      }
    report.checks.push_back(check);
  }

  {
    StructureCheck check{"P−D with partners induces k·P4, 2k = |P−D|", true, std::nullopt};
    auto sub = induced_subgraph(g, with_partners(cert.p_only()));
    int copies = 0;
    for (const auto& comp : connected_components(sub.graph)) {
      auto members = comp.members();
      int leaves = 0, inner = 0;
      for (int i : members) {
        leaves += sub.graph.degree(i) == 1;
        inner += sub.graph.degree(i) == 2;
      }
      bool is_p4 = members.size() == 4 && leaves == 2 && inner == 2;
      if (!is_p4 && check.passed) {
        check.passed = false;
        check.witness = sub.original[members.front()];
      }
      copies += is_p4;
    }
    if (check.passed && 2 * copies != cert.p_only().size()) {
      check.passed = false;
      check.witness = cert.p_only().empty() ? std::nullopt : std::optional<int>(cert.p_only().members().front());
    }
    report.p4_copies = copies;
    report.checks.push_back(check);
  }

  report.checks.push_back(
      StructureCheck{"D−P is non-empty", n == 0 || !cert.d_only().empty(), std::nullopt});
  return report;
}

bool check_empty_dp_characterization(const Graph& g, const VertexSet& a) {
  require_universe(g, a, "check_empty_dp_characterization");
  auto sub = induced_subgraph(g, a);
  for (const auto& comp : connected_components(sub.graph)) {
    int leaves = 0, inner = 0;
    comp.for_each([&](int i) {
      leaves += sub.graph.degree(i) == 1;
      inner += sub.graph.degree(i) == 2;
    });
    if (comp.size() != 4 || leaves != 2 || inner != 2)
      return false;
  }
  std::vector<int> inner_degree(g.order(), -1);
  for (int i = 0; i < sub.graph.order(); ++i)
    inner_degree[sub.original[i]] = sub.graph.degree(i);
  for (int v = 0; v < g.order(); ++v) {
    if (a.contains(v))
      continue;
    int ones = 0, twos = 0;
    for (int y : g.neighbors(v)) {
      ones += inner_degree[y] == 1;
      twos += inner_degree[y] == 2;
    }
    if (ones != 1 || twos != 1)
      return false;
  }
  return true;
}

bool check_empty_pd_characterization(const Graph& g, const VertexSet& d) {
  require_universe(g, d, "check_empty_pd_characterization");
  const int n = g.order();
  VertexSet p_side(n);
  for (int v : d.members()) {
    int mate = -1, matched = 0;
    for (int y : g.neighbors(v))
      if (d.contains(y)) {
        mate = y;
        ++matched;
      }
    if (matched != 1)
      return false;
    if (v > mate)
      continue;
    bool v_leaf = g.degree(v) == 1, mate_leaf = g.degree(mate) == 1;
    if (!v_leaf && !mate_leaf)
      return false;
    p_side.insert(v_leaf && !mate_leaf ? mate : v);
  }
  for (int v = 0; v < n; ++v) {
    if (d.contains(v))
      continue;
    int hits = 0;
    for (int y : g.neighbors(v))
      hits += p_side.contains(y);
    if (hits != 1)
      return false;
  }
  return true;
}

} // namespace eocd
