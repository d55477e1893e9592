#include "doctest.h"

#include "muforge/arena.hpp"

#include "oracles.hpp"

using namespace muforge;

TEST_SUITE("solver") {

TEST_CASE("self loops are decided by their parity") {
  Arena a;
  int even = a.add(0, 2);
  a.add_edge(even, even);
  int odd = a.add(1, 1);
  a.add_edge(odd, odd);
  auto sol = solve_parity(a);
  CHECK(sol.even_wins(even));
  CHECK_FALSE(sol.even_wins(odd));
  CHECK(sol.winOdd.count(odd) == 1);
}

TEST_CASE("dead ends go to the player of their priority, owner notwithstanding") {
  Arena a;
  int p0 = a.add(0, 1); // even-owned, odd priority
  int p1 = a.add(1, 2); // odd-owned, even priority
  auto sol = solve_parity(a);
  CHECK(sol.winOdd == std::set<int>{p0});
  CHECK(sol.winEven == std::set<int>{p1});
}

TEST_CASE("choice beats a bad option") {
  // even picks between an odd trap and an even loop
  Arena a;
  int start = a.add(0, 0);
  int trap = a.add(1, 1);
  int good = a.add(1, 2);
  a.add_edge(start, trap);
  a.add_edge(start, good);
  a.add_edge(trap, trap);
  a.add_edge(good, good);
  auto sol = solve_parity(a);
  CHECK(sol.even_wins(start));
  REQUIRE(sol.strategyEven.count(start) == 1);
  CHECK(sol.strategyEven.at(start) == good);
}

TEST_CASE("max parity decides mixed cycles") {
  // a 2-cycle with priorities 1 and 2: the max is even
  Arena a;
  int u = a.add(1, 1);
  int v = a.add(1, 2);
  a.add_edge(u, v);
  a.add_edge(v, u);
  auto sol = solve_parity(a);
  CHECK(sol.even_wins(u));
  CHECK(sol.even_wins(v));
}

TEST_CASE("regions partition the arena") {
  std::mt19937 rng(3);
  for (int i = 0; i < 150; ++i) {
    Arena a = oracles::random_arena(rng);
    auto sol = solve_parity(a);
    CHECK(sol.winEven.size() + sol.winOdd.size() == a.positions.size());
    for (int v : sol.winEven) CHECK(sol.winOdd.count(v) == 0);
  }
}

TEST_CASE("strategies stay inside the winning region") {
  std::mt19937 rng(5);
  for (int i = 0; i < 150; ++i) {
    Arena a = oracles::random_arena(rng);
    auto sol = solve_parity(a);
    for (const auto& [v, move] : sol.strategyEven) {
      CHECK(a.positions[static_cast<std::size_t>(v)].owner == 0);
      if (sol.even_wins(v)) CHECK(sol.even_wins(move));
    }
    for (const auto& [v, move] : sol.strategyOdd) {
      CHECK(a.positions[static_cast<std::size_t>(v)].owner == 1);
      if (sol.winOdd.count(v)) CHECK(sol.winOdd.count(move) == 1);
    }
  }
}

TEST_CASE("zielonka matches strategy enumeration") {
  std::mt19937 rng(99);
  for (int i = 0; i < 200; ++i) {
    Arena a = oracles::random_arena(rng, 8, 5);
    auto sol = solve_parity(a);
    auto brute = oracles::brute_even_region(a);
    CAPTURE(i);
    CHECK(sol.winEven == brute);
  }
}

} // TEST_SUITE
