#include <doctest.h>

#include "eocd/exact_cover.hpp"

#include <random>
#include <set>
#include <vector>

using namespace eocd;

namespace {

std::vector<std::vector<int>> all_solutions(ExactCover& x) {
  std::vector<std::vector<int>> out;
  x.search([&](std::span<const int> rows) {
    out.emplace_back(rows.begin(), rows.end());
    return true;
  });
  return out;
}

} // namespace

TEST_CASE("classic seven-column instance has one cover") {
  ExactCover x(7);
  const std::vector<std::vector<int>> rows{{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}};
  for (const auto& r : rows)
    x.add_row(r);
  auto sols = all_solutions(x);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == std::vector<int>{0, 3, 4});
}

TEST_CASE("secondary columns are covered at most once") {
  ExactCover x(2, 1);
  const std::vector<std::vector<int>> rows{{0, 2}, {1, 2}, {0}, {1}};
  for (const auto& r : rows)
    x.add_row(r);
  auto sols = all_solutions(x);
  std::set<std::vector<int>> got(sols.begin(), sols.end());
  CHECK(got == std::set<std::vector<int>>{{0, 3}, {1, 2}, {2, 3}});
}

TEST_CASE("no primary columns gives the empty solution") {
  ExactCover x(0);
  CHECK(all_solutions(x) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("uncoverable column yields nothing") {
  ExactCover x(3);
  std::vector<int> r{0, 1};
  x.add_row(r);
  std::vector<int> rows;
  CHECK_FALSE(x.first(rows));
  CHECK(x.search([](std::span<const int>) { return true; }) == 0);
}

TEST_CASE("visitor can stop the enumeration") {
  ExactCover x(2);
  const std::vector<std::vector<int>> rows{{0}, {1}, {0, 1}, {0, 0, 1}};
  for (const auto& r : rows)
    x.add_row(r);
  CHECK(all_solutions(x).size() == 3);
  int seen = 0;
  x.search([&](std::span<const int>) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("dancing links agree with brute force on random instances") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int primary = 1 + static_cast<int>(rng() % 7);
    const int secondary = static_cast<int>(rng() % 3);
    const int nrows = 1 + static_cast<int>(rng() % 10);
    std::vector<unsigned> masks;
    ExactCover x(primary, secondary);
    for (int r = 0; r < nrows; ++r) {
      std::vector<int> cols;
      unsigned m = 0;
      for (int c = 0; c < primary + secondary; ++c)
        if (rng() % 3 == 0) {
          cols.push_back(c);
          m |= 1u << c;
        }
      masks.push_back(m);
      x.add_row(cols);
    }
    // A row touching no primary column can never be part of a cover.
    std::set<std::vector<int>> expected;
    const unsigned need = (1u << primary) - 1;
    for (unsigned pick = 0; pick < (1u << nrows); ++pick) {
      unsigned seen = 0;
      bool ok = true;
      std::vector<int> chosen;
      for (int r = 0; r < nrows && ok; ++r)
        if (pick >> r & 1) {
          ok = !(seen & masks[r]) && (masks[r] & need);
          seen |= masks[r];
          chosen.push_back(r);
        }
      if (ok && (seen & need) == need)
        expected.insert(chosen);
    }
    auto sols = all_solutions(x);
    std::set<std::vector<int>> got(sols.begin(), sols.end());
    CHECK(got.size() == sols.size());
    CHECK(got == expected);
  }
}
