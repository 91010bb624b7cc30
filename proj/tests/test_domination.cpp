#include <doctest.h>

#include "eocd/corpus.hpp"
#include "eocd/domination.hpp"
#include "eocd/error.hpp"
#include "eocd/families.hpp"
#include "eocd/oracle.hpp"
#include "eocd/sierpinski.hpp"

using namespace eocd;

namespace {

Graph petersen() {
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                      {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}};
  return Graph::from_edge_list(10, e);
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

bool d_is_matching(const Graph& g, const VertexSet& d) {
  bool ok = true;
  d.for_each([&](int v) {
    int partners = 0;
    for (int y : g.neighbors(v))
      partners += d.contains(y);
    ok = ok && partners == 1;
  });
  return ok;
}

} // namespace

TEST_CASE("set validators") {
  CHECK(is_ecd_set(path(4), VertexSet::of(4, {0, 3})));
  CHECK(is_ecd_set(path(2), VertexSet::of(2, {0})));
  CHECK_FALSE(is_ecd_set(cycle(4), VertexSet::of(4, {0})));
  auto bad = ecd_defect(cycle(4), VertexSet::of(4, {0}));
  REQUIRE(bad);
  CHECK(bad->vertex == 2);
  CHECK(bad->times_covered == 0);

  CHECK(is_eod_set(path(4), VertexSet::of(4, {1, 2})));
  CHECK(is_eod_set(path(2), VertexSet::of(2, {0, 1})));
  CHECK_FALSE(is_eod_set(path(5), VertexSet::of(5, {1, 2})));
  auto hole = eod_defect(path(5), VertexSet::of(5, {1, 2}));
  REQUIRE(hole);
  CHECK(hole->vertex == 4);

  auto twice = eod_defect(path(3), VertexSet::of(3, {0, 1, 2}));
  REQUIRE(twice);
  CHECK(twice->vertex == 1);
  CHECK(twice->times_covered == 2);

  CHECK_FALSE(is_eod_set(Graph::from_edge_list(1, {}), VertexSet::of(1, {0})));
  CHECK_THROWS_AS(is_ecd_set(path(4), VertexSet(3)), Error);
}

TEST_CASE("exact-cover searches: small cases") {
  // First solutions in search order, checked against the subset oracle.
  CHECK(find_ecd(path(5))->members() == std::vector<int>{0, 3});
  CHECK(find_ecd(path(2))->members() == std::vector<int>{0});
  CHECK_FALSE(find_ecd(cycle(4)));
  CHECK(oracle::ecd_sets(cycle(4)).empty());

  CHECK_FALSE(find_eod(path(5)));
  CHECK(oracle::eod_sets(path(5)).empty());
  CHECK(find_eod(path(2))->members() == std::vector<int>{0, 1});
  auto d12 = find_eod(cycle(12));
  REQUIRE(d12);
  CHECK(d12->members() == std::vector<int>{0, 1, 4, 5, 8, 9});

  // Solution counts from brute-force enumeration.
  CHECK(all_ecd_sets(cycle(12)).size() == 3);
  CHECK(all_eod_sets(cycle(12)).size() == 4);
  CHECK(all_eod_sets(cycle(4)).size() == 4);
  CHECK(all_ecd_sets(path(5)).size() == 2);
  CHECK(all_ecd_sets(hypercube(3)).size() == 4);
  CHECK(all_eod_sets(hypercube(3)).empty());
  CHECK(all_eod_sets(star(3)).size() == 3);
  CHECK_FALSE(find_ecd(petersen()));
  CHECK_FALSE(find_eod(petersen()));
  CHECK(all_ecd_sets(cycle(12), 2).size() == 2);
}

TEST_CASE("find_eocd modes") {
  CHECK_FALSE(find_eocd(path(5)));
  auto k2 = find_eocd(path(2));
  REQUIRE(k2);
  CHECK(k2->d() == VertexSet::of(2, {0, 1}));
  CHECK(k2->p() == VertexSet::of(2, {0}));
  auto c12 = find_eocd(cycle(12));
  REQUIRE(c12);
  CHECK(is_eod_set(cycle(12), c12->d()));
  CHECK(is_ecd_set(cycle(12), c12->p()));

  // C12: every EOD set meets every perfect code.
  CHECK_FALSE(find_eocd(cycle(12), SearchMode::EmptyIntersection));
  CHECK_FALSE(oracle::eocd_pair(cycle(12), SearchMode::EmptyIntersection));
  CHECK_FALSE(find_eocd(cycle(12), SearchMode::EmptyPMinusD));

  auto p4 = find_eocd(path(4), SearchMode::EmptyIntersection);
  REQUIRE(p4);
  CHECK(p4->dp().empty());
  CHECK_FALSE(find_eocd(path(4), SearchMode::EmptyPMinusD));

  auto p6 = find_eocd(path(6), SearchMode::EmptyPMinusD);
  REQUIRE(p6);
  CHECK(p6->p().is_subset_of(p6->d()));
  CHECK_FALSE(find_eocd(path(6), SearchMode::EmptyIntersection));
}

TEST_CASE("partition components") {
  EocdCertificate c(VertexSet::of(5, {0, 1, 2}), VertexSet::of(5, {2, 3}));
  CHECK(c.dp().members() == std::vector<int>{2});
  CHECK(c.d_only().members() == std::vector<int>{0, 1});
  CHECK(c.p_only().members() == std::vector<int>{3});
  CHECK(c.r().members() == std::vector<int>{4});
}

TEST_CASE("domination numbers") {
  CHECK(gamma(path(4)) == 2);
  CHECK(gamma(path(2)) == 1);
  CHECK(gamma(cycle(12)) == 4);
  CHECK(gamma_t(path(4)) == 2);
  CHECK(gamma_t(path(2)) == 2);
  CHECK(gamma_t(sierpinski(4, 2)) == 4);
  CHECK(gamma(petersen()) == 3);
  CHECK(gamma_t(petersen()) == 4);
  CHECK(gamma(Graph::from_edge_list(0, {})) == 0);
  CHECK_THROWS_AS(gamma_t(Graph::from_edge_list(3, std::vector<Edge>{{0, 1}})), Error);

  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Graph g = corpus::random_graph(4 + static_cast<int>(seed % 11), 0.25 + 0.05 * (seed % 5), seed);
    VertexSet s = minimum_dominating_set(g);
    CHECK(s.size() == oracle::gamma(g));
    int want_t = oracle::gamma_t(g);
    if (want_t < 0)
      continue;
    VertexSet t = minimum_total_dominating_set(g);
    CHECK(t.size() == want_t);
    VertexSet covered(g.order());
    t.for_each([&](int v) { covered |= open_neighborhood(g, v); });
    CHECK(covered == VertexSet::full(g.order()));
  }
}

TEST_CASE("perfect codes are minimum dominating sets; EOD sets are minimum total dominating sets") {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      if (auto p = find_ecd(g))
        CHECK(p->size() == gamma(g));
      if (auto d = find_eod(g)) {
        CHECK(d->size() == gamma_t(g));
        CHECK(d_is_matching(g, *d));
      }
    }
}

TEST_CASE("search counts over non-isomorphic graphs match brute force") {
  // Per order n = 1..7: graphs with an ECD set, an EOD set, both, both
  // with D∩P empty, both with P inside D (values from subset enumeration).
  const int expected[7][5] = {{1, 0, 0, 0, 0},     {2, 1, 1, 0, 1},     {4, 1, 1, 0, 1},
                              {10, 5, 4, 1, 3},    {27, 11, 7, 2, 5},   {102, 55, 29, 12, 16},
                              {508, 279, 105, 56, 45}};
  for (int n = 1; n <= 7; ++n) {
    int got[5] = {0, 0, 0, 0, 0};
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      got[0] += find_ecd(g).has_value();
      got[1] += find_eod(g).has_value();
      got[2] += find_eocd(g).has_value();
      auto dp = find_eocd(g, SearchMode::EmptyIntersection);
      auto pd = find_eocd(g, SearchMode::EmptyPMinusD);
      got[3] += dp.has_value();
      got[4] += pd.has_value();
      if (n <= 6) {
        CHECK(dp.has_value() == oracle::eocd_pair(g, SearchMode::EmptyIntersection).has_value());
        CHECK(pd.has_value() == oracle::eocd_pair(g, SearchMode::EmptyPMinusD).has_value());
      }
    }
    for (int k = 0; k < 5; ++k)
      CHECK(got[k] == expected[n - 1][k]);
  }
}

TEST_CASE("classify_partition on small examples") {
  auto k2 = classify_partition(path(2), EocdCertificate(VertexSet::of(2, {0, 1}), VertexSet::of(2, {0})));
  CHECK(k2.all_passed());
  CHECK(k2.p4_copies == 0);

  EocdCertificate p4(VertexSet::of(4, {1, 2}), VertexSet::of(4, {0, 3}));
  CHECK(p4.dp().empty());
  CHECK(p4.p_only().members() == std::vector<int>{0, 3});
  auto r = classify_partition(path(4), p4);
  CHECK(r.all_passed());
  CHECK(r.p4_copies == 1);

  CHECK_THROWS_AS(classify_partition(path(4), EocdCertificate(VertexSet::of(4, {0, 1}),
                                                              VertexSet::of(4, {0, 3}))),
                  Error);
}

TEST_CASE("every certificate found has the expected structure") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : corpus::nonisomorphic_graphs(n))
      for (auto mode : {SearchMode::Any, SearchMode::EmptyIntersection, SearchMode::EmptyPMinusD}) {
        auto c = find_eocd(g, mode);
        if (!c)
          continue;
        CHECK_FALSE(c->d_only().empty());
        auto report = classify_partition(g, *c);
        CHECK(report.all_passed());
        CHECK(2 * report.p4_copies == c->p_only().size());
        if (mode == SearchMode::EmptyIntersection) {
          CHECK(c->dp().empty());
          CHECK(check_empty_dp_characterization(g, c->p_only() | c->d_only()));
        }
        if (mode == SearchMode::EmptyPMinusD) {
          CHECK(c->p_only().empty());
          CHECK(check_empty_pd_characterization(g, c->d()));
        }
      }
}

TEST_CASE("characterizations: examples") {
  CHECK(check_empty_dp_characterization(path(4), VertexSet::full(4)));
  CHECK_FALSE(check_empty_dp_characterization(path(4), VertexSet::of(4, {0, 1})));
  CHECK(check_empty_pd_characterization(star(3), VertexSet::of(4, {0, 1})));
  CHECK_FALSE(check_empty_pd_characterization(path(4), VertexSet::of(4, {1, 2})));
  CHECK(check_empty_pd_characterization(path(2), VertexSet::of(2, {0, 1})));

  // C12 has no certificate with D∩P empty, so use a P4 plus a vertex
  // joined to one of its leaves and one of its inner vertices.
  std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {4, 0}, {4, 2}};
  Graph g = Graph::from_edge_list(5, e);
  CHECK(check_empty_dp_characterization(g, VertexSet::of(5, {0, 1, 2, 3})));
  CHECK(find_eocd(g, SearchMode::EmptyIntersection).has_value());
}

TEST_CASE("characterizations decide the constrained modes") {
  // Existence of a set passing each structural test matches the brute-force
  // certificate search, on every graph with up to six vertices.
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      bool some_a = false, some_d = false;
      for (oracle::Mask m = 0; m < (1u << n); ++m) {
        VertexSet s = oracle::to_set(n, m);
        some_a = some_a || check_empty_dp_characterization(g, s);
        some_d = some_d || check_empty_pd_characterization(g, s);
      }
      CHECK(some_a == oracle::eocd_pair(g, SearchMode::EmptyIntersection).has_value());
      CHECK(some_d == oracle::eocd_pair(g, SearchMode::EmptyPMinusD).has_value());
    }
}

TEST_CASE("extremal relations on small graphs") {
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      if (find_eocd(g, SearchMode::EmptyIntersection))
        CHECK(gamma_t(g) == gamma(g));
      if (find_eocd(g, SearchMode::EmptyPMinusD))
        CHECK(gamma_t(g) == 2 * gamma(g));
    }
}
