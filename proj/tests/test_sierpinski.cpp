#include <doctest.h>

#include "eocd/domination.hpp"
#include "eocd/error.hpp"
#include "eocd/families.hpp"
#include "eocd/sierpinski.hpp"

using namespace eocd;

TEST_CASE("small Sierpinski graphs") {
  for (int p = 1; p <= 6; ++p) {
    Graph s = sierpinski(p, 1);
    CHECK(s.order() == p);
    CHECK(s.edge_count() == p * (p - 1) / 2);
  }
  for (int n = 1; n <= 6; ++n) {
    Graph s = sierpinski(2, n);
    CHECK(s.order() == (1 << n));
    CHECK(s.max_degree() <= 2);
    CHECK(is_tree(s));
  }
  Graph s32 = sierpinski(3, 2);
  CHECK(s32.order() == 9);
  CHECK(s32.edge_count() == 12);
  auto a = s32.find_label("01"), b = s32.find_label("10");
  REQUIRE(a);
  REQUIRE(b);
  CHECK(s32.has_edge(*a, *b));
  CHECK(sierpinski(4, 0).order() == 1);
  CHECK(sierpinski(1, 3).order() == 1);
  CHECK(sierpinski(11, 1).label(10) == "10");
  CHECK(sierpinski(11, 2).label(12) == "1.1");
}

TEST_CASE("direct and recursive constructions agree") {
  for (int p = 1; p <= 6; ++p)
    for (int n = 0; n <= 3; ++n) {
      Graph d = sierpinski_direct(p, n), r = sierpinski_recursive(p, n);
      CHECK(d == r);
      long order = 1;
      for (int i = 0; i < n; ++i)
        order *= p;
      CHECK(d.order() == order);
      CHECK(d.edge_count() == p * (order - 1) / 2);
    }
}

TEST_CASE("cap and bad parameters") {
  CHECK_THROWS_AS(sierpinski(0, 2), Error);
  CHECK_THROWS_AS(sierpinski(4, 7), Error); // 16384 > 4096
  CHECK(sierpinski(4, 6).order() == 4096);
  CHECK_THROWS_AS(sierpinski(3, 3, 20), Error);
}

TEST_CASE("explicit EOD sets") {
  Graph g = sierpinski(4, 2);
  VertexSet d = sierpinski_eod_set(4, 2);
  std::vector<std::string> names;
  d.for_each([&](int v) { names.push_back(g.label(v)); });
  CHECK(names == std::vector<std::string>{"01", "10", "23", "32"});
  CHECK(sierpinski_eod_set(4, 3).size() == 16);
  VertexSet d62 = sierpinski_eod_set(6, 2);
  CHECK(d62.size() == 6);
  CHECK(is_eod_set(sierpinski(6, 2), d62));
  CHECK(sierpinski_eod_set(8, 3).size() == 64);
  CHECK_THROWS_AS(sierpinski_eod_set(5, 2), Error);
  CHECK_THROWS_AS(sierpinski_eod_set(4, 1), Error);
  CHECK_THROWS_AS(sierpinski_eod_set(2, 3), Error);
}

TEST_CASE("parity rule and total domination") {
  CHECK_FALSE(sierpinski_is_eocd(3, 2));
  CHECK(sierpinski_is_eocd(4, 2));
  CHECK(sierpinski_is_eocd(6, 3));
  CHECK_THROWS_AS(sierpinski_is_eocd(2, 3), Error);
  CHECK_THROWS_AS(sierpinski_is_eocd(4, 1), Error);
  CHECK(sierpinski_gamma_t(4, 2) == 4);
  CHECK(sierpinski_gamma_t(6, 2) == 6);
  CHECK(sierpinski_gamma_t(4, 3) == 16);
  CHECK_THROWS_AS(sierpinski_gamma_t(5, 2), Error);
}

TEST_CASE("searches agree with the parity rule") {
  for (auto [p, n] : {std::pair{4, 2}, {6, 2}, {4, 3}}) {
    Graph g = sierpinski(p, n);
    CHECK(is_eod_set(g, sierpinski_eod_set(p, n)));
    CHECK(find_ecd(g).has_value());
    for (const VertexSet& d : all_eod_sets(g, 50))
      for (int i = 0; i < p; ++i)
        CHECK_FALSE(d.contains(sierpinski_extreme(p, n, i)));
  }
  for (auto [p, n] : {std::pair{3, 2}, {5, 2}, {3, 3}})
    CHECK_FALSE(find_eod(sierpinski(p, n)).has_value());
  CHECK(gamma_t(sierpinski(4, 2)) == 4);
  CHECK(gamma_t(sierpinski(6, 2)) == 6);
}
