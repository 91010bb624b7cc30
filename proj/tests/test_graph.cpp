#include <doctest.h>

#include "eocd/edge_list.hpp"
#include "eocd/error.hpp"
#include "eocd/families.hpp"
#include "eocd/graph.hpp"
#include "eocd/vertex_set.hpp"

#include "eocd/corpus.hpp"

#include <random>
#include <sstream>

using namespace eocd;

namespace {

Graph k2k2() {
  std::vector<Edge> e{{0, 1}, {2, 3}};
  return Graph::from_edge_list(4, e);
}

} // namespace

TEST_CASE("from_edge_list builds, deduplicates and rejects bad input") {
  std::vector<Edge> k2{{0, 1}};
  Graph g = Graph::from_edge_list(2, k2);
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(1) == 1);

  std::vector<Edge> dup{{0, 1}, {1, 0}, {1, 2}};
  Graph p3 = Graph::from_edge_list(3, dup);
  CHECK(p3.edge_count() == 2);
  CHECK(p3 == path(3));

  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edge_list(2, loop), Error);
  std::vector<Edge> out{{0, 5}};
  CHECK_THROWS_WITH_AS(Graph::from_edge_list(3, out), doctest::Contains("(0,5)"), Error);
}

TEST_CASE("neighborhoods") {
  Graph p4 = path(4), c4 = cycle(4);
  CHECK(open_neighborhood(p4, 1).members() == std::vector<int>{0, 2});
  CHECK(open_neighborhood(path(2), 0).members() == std::vector<int>{1});
  CHECK(open_neighborhood(c4, 0).members() == std::vector<int>{1, 3});
  CHECK(closed_neighborhood(p4, 0).members() == std::vector<int>{0, 1});
  CHECK(closed_neighborhood(path(2), 1).members() == std::vector<int>{0, 1});
  CHECK(closed_neighborhood(c4, 2).members() == std::vector<int>{1, 2, 3});
}

TEST_CASE("bfs distances") {
  CHECK(bfs_distances(path(4), 0) == std::vector<int>{0, 1, 2, 3});
  auto d = bfs_distances(k2k2(), 0);
  CHECK(d[2] == kUnreachable);
  CHECK(d[3] == kUnreachable);
  CHECK(bfs_distances(cycle(12), 0)[6] == 6);
}

TEST_CASE("components and trees") {
  CHECK(connected_components(path(4)).size() == 1);
  auto comps = connected_components(k2k2());
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].members() == std::vector<int>{0, 1});
  CHECK(comps[1].members() == std::vector<int>{2, 3});
  CHECK(connected_components(Graph::from_edge_list(3, {})).size() == 3);

  CHECK(is_tree(path(4)));
  CHECK_FALSE(is_tree(cycle(12)));
  CHECK_FALSE(is_tree(k2k2()));
}

TEST_CASE("contract_edges") {
  std::vector<Edge> mid{{1, 2}};
  auto c = contract_edges(path(4), mid);
  CHECK(c.graph.order() == 3);
  CHECK(c.graph.degree(c.vertex_map[1]) == 2);
  CHECK(c.vertex_map[1] == c.vertex_map[2]);

  std::vector<Edge> whole{{0, 1}};
  CHECK(contract_edges(path(2), whole).graph.order() == 1);

  std::vector<Edge> two{{0, 1}, {6, 7}};
  auto c10 = contract_edges(cycle(12), two);
  CHECK(c10.graph.order() == 10);
  CHECK(c10.graph.edge_count() == 10);
  CHECK(is_connected(c10.graph));
  for (int v = 0; v < 10; ++v)
    CHECK(c10.graph.degree(v) == 2);

  std::vector<Edge> tri{{0, 1}};
  CHECK_THROWS_AS(contract_edges(cycle(3), tri), Error);
  std::vector<Edge> not_matching{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(contract_edges(path(4), not_matching), Error);
  std::vector<Edge> non_edge{{0, 2}};
  CHECK_THROWS_AS(contract_edges(path(4), non_edge), Error);
}

TEST_CASE("induced_subgraph") {
  auto a = induced_subgraph(path(4), VertexSet::of(4, {1, 2}));
  CHECK(a.graph == path(2));
  CHECK(a.original == std::vector<int>{1, 2});
  CHECK(induced_subgraph(path(4), VertexSet::of(4, {0, 3})).graph.edge_count() == 0);

  auto m = induced_subgraph(cycle(12), VertexSet::of(12, {0, 1, 4, 5, 8, 9}));
  CHECK(m.graph.edge_count() == 3);
  for (int v = 0; v < 6; ++v)
    CHECK(m.graph.degree(v) == 1);
}

TEST_CASE("permute relabels consistently") {
  std::vector<int> perm{3, 2, 1, 0};
  Graph p = permute(path(4), perm);
  CHECK(p == path(4));
  std::vector<int> rot{1, 2, 3, 0};
  Graph r = permute(path(4), rot);
  CHECK(r.has_edge(1, 2));
  CHECK(r.has_edge(3, 0));
  CHECK_FALSE(r.has_edge(0, 1));
}

TEST_CASE("graph invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = corpus::random_graph(5 + static_cast<int>(seed % 10), 0.3, seed);
    int degree_sum = 0;
    for (int v = 0; v < g.order(); ++v) {
      degree_sum += g.degree(v);
      auto open = open_neighborhood(g, v);
      auto closed = closed_neighborhood(g, v);
      CHECK_FALSE(open.contains(v));
      CHECK(open == closed - VertexSet::of(g.order(), {v}));
      for (int y : g.neighbors(v))
        CHECK(g.has_edge(y, v));
    }
    CHECK(degree_sum == 2 * g.edge_count());

    // Triangle inequality on every triple.
    std::vector<std::vector<int>> dist;
    for (int v = 0; v < g.order(); ++v)
      dist.push_back(bfs_distances(g, v));
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        for (int c = 0; c < g.order(); ++c)
          if (dist[a][b] != kUnreachable && dist[b][c] != kUnreachable)
            CHECK(dist[a][c] <= dist[a][b] + dist[b][c]);

    // Contracting a triangle-free matching removes one vertex per edge.
    std::vector<Edge> matching;
    std::vector<char> used(g.order(), 0);
    for (auto [u, v] : g.edges()) {
      if (used[u] || used[v])
        continue;
      bool in_triangle = false;
      for (int y : g.neighbors(u))
        in_triangle = in_triangle || g.has_edge(y, v);
      if (in_triangle)
        continue;
      matching.emplace_back(u, v);
      used[u] = used[v] = 1;
    }
    auto c = contract_edges(g, matching);
    CHECK(c.graph.order() == g.order() - static_cast<int>(matching.size()));
    for (auto [u, v] : g.edges())
      if (c.vertex_map[u] != c.vertex_map[v])
        CHECK(c.graph.has_edge(c.vertex_map[u], c.vertex_map[v]));
  }
}

TEST_CASE("vertex sets") {
  VertexSet a = VertexSet::of(130, {0, 64, 129});
  CHECK(a.size() == 3);
  CHECK(a.contains(129));
  CHECK_FALSE(a.contains(130));
  VertexSet b = VertexSet::of(130, {64, 100});
  CHECK((a & b).members() == std::vector<int>{64});
  CHECK((a | b).size() == 4);
  CHECK((a - b).members() == std::vector<int>{0, 129});
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(a));
  CHECK_THROWS_AS(a.insert(130), Error);
  CHECK_THROWS_AS(a |= VertexSet(5), Error);
  CHECK(VertexSet::full(70).size() == 70);
}

TEST_CASE("edge-list round trip with labels") {
  Graph g = hypercube(3);
  std::stringstream buf;
  write_edge_list(buf, g);
  Graph back = read_edge_list(buf);
  CHECK(back == g);
  CHECK(back.labels() == g.labels());
  CHECK(back.label(5) == "101");
}

TEST_CASE("edge-list reader reports the offending line") {
  std::istringstream bad_count("# c\n3 2\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(bad_count), Error);
  std::istringstream bad_vertex("3 1\n0 7\n");
  CHECK_THROWS_WITH_AS(read_edge_list(bad_vertex), doctest::Contains("line 2"), Error);
  std::istringstream junk("2 1\n0 x\n");
  CHECK_THROWS_AS(read_edge_list(junk), Error);
  std::istringstream ok("# path\n3 2\n0 1 # first\n1 2\nL 1 mid\n");
  Graph g = read_edge_list(ok);
  CHECK(g.label(1) == "mid");
  CHECK(g.label(0) == "0");
}
