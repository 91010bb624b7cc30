#include <doctest.h>

#include "eocd/corpus.hpp"
#include "eocd/domination.hpp"
#include "eocd/error.hpp"
#include "eocd/families.hpp"
#include "eocd/transforms.hpp"

#include <algorithm>
#include <random>

using namespace eocd;

TEST_CASE("eod_to_ecd examples") {
  auto p4 = eod_to_ecd(path(4), VertexSet::of(4, {1, 2}));
  CHECK(p4.graph == path(3));
  CHECK(p4.code.members() == std::vector<int>{1});

  auto k2 = eod_to_ecd(path(2), VertexSet::of(2, {0, 1}));
  CHECK(k2.graph.order() == 1);
  CHECK(k2.code.members() == std::vector<int>{0});

  auto c12 = eod_to_ecd(cycle(12), VertexSet::of(12, {0, 1, 4, 5, 8, 9}));
  CHECK(c12.graph == cycle(9));
  CHECK(c12.code.size() == 3);
  CHECK(is_ecd_set(c12.graph, c12.code));

  CHECK_THROWS_AS(eod_to_ecd(path(5), VertexSet::of(5, {1, 2})), Error);
}

TEST_CASE("ecd_to_eod examples") {
  SplitPlan plan{{1, Split{{0}, {2}}}};
  auto p4 = ecd_to_eod(path(3), VertexSet::of(3, {1}), plan);
  CHECK(p4.graph.order() == 4);
  CHECK(is_tree(p4.graph));
  CHECK(p4.graph.max_degree() == 2);
  CHECK(p4.code.members() == std::vector<int>{1, 3});
  CHECK(p4.graph.degree(1) == 2);
  CHECK(p4.graph.degree(3) == 2);

  auto k1 = ecd_to_eod(Graph::from_edge_list(1, {}), VertexSet::of(1, {0}));
  CHECK(k1.graph == path(2));
  CHECK(k1.code == VertexSet::of(2, {0, 1}));

  SplitPlan claw{{0, Split{{1}, {2, 3}}}};
  auto six = ecd_to_eod(complete_bipartite(1, 3), VertexSet::of(4, {0}), claw);
  CHECK(six.graph.order() == 5);
  CHECK(is_tree(six.graph));
  CHECK(is_eod_set(six.graph, six.code));

  CHECK_THROWS_AS(ecd_to_eod(cycle(4), VertexSet::of(4, {0})), Error);
  SplitPlan overlap{{1, Split{{0, 2}, {2}}}};
  CHECK_THROWS_AS(ecd_to_eod(path(3), VertexSet::of(3, {1}), overlap), Error);
  SplitPlan missing{{1, Split{{0}, {}}}};
  CHECK_THROWS_AS(ecd_to_eod(path(3), VertexSet::of(3, {1}), missing), Error);
  SplitPlan outside{{0, Split{{1}, {}}}};
  CHECK_THROWS_AS(ecd_to_eod(path(3), VertexSet::of(3, {1}), outside), Error);
}

TEST_CASE("split halves carry labels") {
  Graph g = path(3).with_labels({"a", "b", "c"});
  auto out = ecd_to_eod(g, VertexSet::of(3, {1}), SplitPlan{{1, Split{{0}, {2}}}});
  CHECK(out.graph.label(1) == "b_A");
  CHECK(out.graph.label(3) == "b_B");
  CHECK(out.graph.label(0) == "a");
}

TEST_CASE("round trip and random plans keep the sets valid") {
  std::mt19937_64 rng(11);
  int trips = 0;
  for (int n = 2; n <= 7; ++n)
    for (const Graph& g : corpus::nonisomorphic_graphs(n)) {
      for (const VertexSet& d : all_eod_sets(g, 3)) {
        auto coded = eod_to_ecd(g, d);
        CHECK(is_ecd_set(coded.graph, coded.code));
        CHECK(coded.code.size() * 2 == d.size());

        // Undo: split each merged vertex along its two pre-images.
        std::vector<Edge> matching;
        d.for_each([&](int v) {
          for (int y : g.neighbors(v))
            if (y > v && d.contains(y))
              matching.emplace_back(v, y);
        });
        Contraction c = contract_edges(g, matching);
        SplitPlan plan;
        for (auto [u, v] : matching) {
          Split s;
          for (int y : g.neighbors(u))
            if (y != v)
              s.a.push_back(c.vertex_map[y]);
          for (int y : g.neighbors(v))
            if (y != u)
              s.b.push_back(c.vertex_map[y]);
          std::sort(s.a.begin(), s.a.end());
          std::sort(s.b.begin(), s.b.end());
          plan[c.vertex_map[u]] = s;
        }
        auto back = ecd_to_eod(coded.graph, coded.code, plan);
        CHECK(back.graph.order() == g.order());
        CHECK(back.graph.edge_count() == g.edge_count());
        CHECK(is_eod_set(back.graph, back.code));
        ++trips;
      }
      for (const VertexSet& p : all_ecd_sets(g, 2)) {
        SplitPlan plan;
        p.for_each([&](int v) {
          Split s;
          for (int y : g.neighbors(v))
            (rng() % 2 ? s.a : s.b).push_back(y);
          plan[v] = s;
        });
        auto out = ecd_to_eod(g, p, plan);
        CHECK(out.graph.order() == g.order() + p.size());
        CHECK(is_eod_set(out.graph, out.code));
      }
    }
  CHECK(trips > 100);
}
