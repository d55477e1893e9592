#include "doctest.h"

#include "muforge/corpus.hpp"
#include "muforge/parse.hpp"
#include "muforge/print.hpp"
#include "muforge/priority.hpp"

#include "oracles.hpp"

using namespace muforge;

TEST_SUITE("priority") {

TEST_CASE("alpha needs two priorities, beta needs four") {
  auto a = minimal_priority_assignment(gen_alpha());
  CHECK(a.codomain() == std::set<int>{0, 1});
  CHECK(a.at("X0") == 1);
  CHECK(a.at("Y0") == 0);

  auto b = minimal_priority_assignment(gen_beta());
  CHECK(b.codomain() == std::set<int>{0, 1, 2, 3});
  CHECK(b.at("X0") == 3);
  CHECK(b.at("Y0") == 2);
  CHECK(b.at("X1") == 1);
  CHECK(b.at("Y1") == 0);
}

TEST_CASE("mu variables get odd values, nu variables even ones") {
  auto f = parse_formula("mu X. nu Y. ->{X & a | Y}");
  auto omega = minimal_priority_assignment(f);
  CHECK(omega.at("X") % 2 == 1);
  CHECK(omega.at("Y") % 2 == 0);
}

TEST_CASE("unused levels are compacted away") {
  // the inner mu does not mention the outer binders, so everything fits in {0,1}
  auto f = parse_formula("nu X. ->{X} & mu Y. a | ->{Y}");
  auto omega = minimal_priority_assignment(f);
  CHECK(omega.codomain() == std::set<int>{0, 1});
}

TEST_CASE("codomain is contiguous from zero") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto f = oracles::random_formula(rng, 5, 7);
    auto omega = minimal_priority_assignment(f);
    std::set<int> want;
    for (int v = 0; v <= omega.codomainMax; ++v) want.insert(v);
    CAPTURE(print_formula(f));
    CHECK(omega.codomain() == want);
  }
}

TEST_CASE("greedy matches the exhaustive minimum") {
  std::mt19937 rng(42);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    auto f = oracles::random_formula(rng, 4, 6);
    auto engine = minimal_priority_assignment(f);
    auto brute = oracles::brute_minimal_assignment(f, 6);
    REQUIRE(brute.has_value());
    ++compared;
    CAPTURE(print_formula(f));
    CHECK(engine.codomainMax == brute->codomainMax);
    CHECK(oracles::assignment_valid(f, engine));
  }
  CHECK(compared >= 300);
}

TEST_CASE("alternation freedom matches the binder nesting") {
  auto [shaped, plain] = gen_simple_pair();
  CHECK_FALSE(is_alternation_free(shaped));
  CHECK(is_alternation_free(plain));
  CHECK_FALSE(is_alternation_free(gen_alpha()));
  CHECK_FALSE(is_alternation_free(gen_beta()));
  CHECK(is_alternation_free(parse_formula("mu X. a | ->{X}")));

  // alternation-free formulas fit in {0,1}
  std::mt19937 rng(13);
  for (int i = 0; i < 200; ++i) {
    auto f = oracles::random_formula(rng, 4, 6);
    if (!is_alternation_free(f)) continue;
    CHECK(minimal_priority_assignment(f).codomainMax <= 1);
  }
}

TEST_CASE("at rejects unknown variables") {
  auto omega = minimal_priority_assignment(gen_alpha());
  CHECK_THROWS(omega.at("nope"));
}

} // TEST_SUITE
