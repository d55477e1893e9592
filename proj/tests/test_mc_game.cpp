#include "doctest.h"

#include "muforge/corpus.hpp"
#include "muforge/kripke.hpp"
#include "muforge/mc_game.hpp"
#include "muforge/parse.hpp"
#include "muforge/priority.hpp"

#include "oracles.hpp"

using namespace muforge;

namespace {

Kripke single(std::set<std::string> props, bool selfLoop) {
  Kripke m;
  m.add_state("s0", std::move(props));
  if (selfLoop) m.add_edge(0, 0);
  m.init = 0;
  return m;
}

Kripke chain(int n, std::set<std::string> props = {}) {
  Kripke m;
  for (int i = 0; i < n; ++i) m.add_state("s" + std::to_string(i), props);
  for (int i = 0; i + 1 < n; ++i) m.add_edge(i, i + 1);
  m.init = 0;
  return m;
}

} // namespace

TEST_SUITE("mc_game") {

TEST_CASE("literals on a single state") {
  Kripke m = single({"p"}, false);
  CHECK(models(m, prop("p")));
  CHECK_FALSE(models(m, nprop("p")));
  CHECK_FALSE(models(m, prop("q")));
  CHECK(models(m, nprop("q")));
  CHECK(models(m, top()));
  CHECK_FALSE(models(m, bottom()));
}

TEST_CASE("the game starts at the initial state and the whole formula") {
  Kripke m = single({"p"}, true);
  auto f = parse_formula("p & ->{tt}");
  std::vector<McKey> keys;
  Arena a = build_mc_game(m, f, minimal_priority_assignment(f), &keys);
  REQUIRE_FALSE(keys.empty());
  CHECK(keys[0].state == m.init);
  CHECK(keys[0].tag == McTag::Plain);
  CHECK(equal(keys[0].formula, f));
  CHECK(a.positions.size() == keys.size());
}

TEST_CASE("terminal literals carry the satisfaction parity") {
  Kripke m = single({"p"}, false);
  auto f = prop("p");
  std::vector<McKey> keys;
  Arena a = build_mc_game(m, f, minimal_priority_assignment(f), &keys);
  REQUIRE(a.positions.size() == 1);
  CHECK(a.positions[0].succs.empty());
  CHECK(a.positions[0].priority % 2 == 0);
}

TEST_CASE("modalities demand both directions") {
  // ->{a, b}: every successor covers a member, every member is witnessed
  auto f = parse_formula("->{a, b}");
  Kripke both;
  both.add_state("s0");
  both.add_state("sa", {"a"});
  both.add_state("sb", {"b"});
  both.init = 0;
  both.add_edge(0, 1);
  both.add_edge(0, 2);
  CHECK(models(both, f));

  Kripke onlyA = both;
  onlyA.states[0].succs = {1};
  CHECK_FALSE(models(onlyA, f)); // b has no witness

  Kripke stray = both;
  stray.add_state("sx", {"c"});
  stray.add_edge(0, 3);
  CHECK_FALSE(models(stray, f)); // sx satisfies no member

  Kripke deadEnd = single({}, false);
  CHECK_FALSE(models(deadEnd, f));
  CHECK(models(deadEnd, modal({})));      // ->{} is exactly "no successors"
  CHECK_FALSE(models(single({}, true), modal({})));
}

TEST_CASE("diamond and box behave classically") {
  Kripke m = single({"p"}, true);
  CHECK(models(m, dia(prop("p"))));
  CHECK(models(m, box(prop("p"))));
  Kripke dead = single({"p"}, false);
  CHECK_FALSE(models(dead, dia(prop("p"))));
  CHECK(models(dead, box(bottom()))); // vacuous on a dead end
}

TEST_CASE("fixpoints unfold with the right winner") {
  // "a holds forever on some path"
  auto always = parse_formula("nu X. a & ->{X, tt}");
  CHECK(models(single({"a"}, true), always));
  CHECK_FALSE(models(single({"a"}, false), always));
  // "every path is infinite until a shows up"
  auto reach = parse_formula("mu X. a | ->{X}");
  Kripke m = chain(3);
  m.states[2].props = {"a"};
  CHECK(models(m, reach));
  CHECK_FALSE(models(chain(3), reach));
}

TEST_CASE("finite-path conjunct separates chains from loops") {
  auto f = gen_finite(top());
  CHECK(models(chain(3), f));
  CHECK_FALSE(models(single({}, true), f));
}

TEST_CASE("the simple pair says infinitely often a on all paths") {
  auto [shaped, plain] = gen_simple_pair();
  for (auto f : {shaped, plain}) {
    CHECK(models(single({"a"}, true), f));
    CHECK_FALSE(models(single({}, true), f));
    CHECK_FALSE(models(single({"a"}, false), f)); // paths must be infinite
    // alternating a / not-a keeps a infinitely often
    Kripke alt;
    alt.add_state("s0", {"a"});
    alt.add_state("s1");
    alt.init = 0;
    alt.add_edge(0, 1);
    alt.add_edge(1, 0);
    CHECK(models(alt, f));
  }
}

TEST_CASE("equivalent corpus formulas agree on random structures") {
  std::mt19937 rng(21);
  auto [shaped, plain] = gen_simple_pair();
  auto alpha = gen_alpha();
  auto beta = gen_beta();
  for (int i = 0; i < 60; ++i) {
    Kripke m = oracles::random_kripke(rng);
    CAPTURE(print_kripke(m));
    CHECK(models(m, alpha) == models(m, beta));
    CHECK(models(m, shaped) == models(m, plain));
  }
}

} // TEST_SUITE
