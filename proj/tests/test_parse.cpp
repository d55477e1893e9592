#include "doctest.h"

#include "muforge/diagnostics.hpp"
#include "muforge/formula.hpp"
#include "muforge/kripke.hpp"
#include "muforge/parse.hpp"
#include "muforge/print.hpp"
#include "muforge/twb.hpp"

#include "oracles.hpp"

using namespace muforge;

TEST_SUITE("parse") {

TEST_CASE("precedence and associativity") {
  // & binds tighter than |, both associate to the right
  CHECK(equal(parse_formula("a | b & c"), disj(prop("a"), conj(prop("b"), prop("c")))));
  CHECK(equal(parse_formula("a | b | c"), disj(prop("a"), disj(prop("b"), prop("c")))));
  CHECK(equal(parse_formula("a & b & c"), conj(prop("a"), conj(prop("b"), prop("c")))));
  CHECK(equal(parse_formula("(a | b) & c"), conj(disj(prop("a"), prop("b")), prop("c"))));
}

TEST_CASE("binder bodies extend maximally right") {
  auto f = parse_formula("mu X. a | ->{X}");
  REQUIRE(f->kind == FormulaKind::Mu);
  CHECK(f->body()->kind == FormulaKind::Or);
  auto g = parse_formula("(mu X. ->{X}) | a");
  CHECK(g->kind == FormulaKind::Or);
}

TEST_CASE("atoms, constants and modalities") {
  CHECK(parse_formula("tt")->kind == FormulaKind::Top);
  CHECK(parse_formula("ff")->kind == FormulaKind::Bottom);
  CHECK(equal(parse_formula("~a"), nprop("a")));
  CHECK(equal(parse_formula("->{}"), modal({})));
  CHECK(equal(parse_formula("->{a, b}"), modal({prop("a"), prop("b")})));
  CHECK(equal(parse_formula("  a # trailing comment\n"), prop("a")));
  CHECK(equal(parse_formula("# leading\n a"), prop("a")));
}

TEST_CASE("malformed input is rejected with a position") {
  auto expectError = [](const char* text, std::size_t line, std::size_t col) {
    try {
      parse_formula(text);
      FAIL_CHECK("expected ParseError for ", text);
    } catch (const ParseError& e) {
      CHECK(e.line == line);
      CHECK(e.col == col);
    }
  };
  expectError("a &", 1, 4);     // dangling operator
  expectError("~X", 1, 2);      // negation only on propositions
  expectError("~(a)", 1, 2);    // ditto
  expectError("mu x. a", 1, 4); // binder wants an uppercase variable
  expectError("->{a", 1, 5);    // unclosed member set
  expectError("a b", 1, 3);     // trailing junk
  expectError("\n  &", 2, 3);   // position tracks lines
}

TEST_CASE("parser enforces alpha-unique binders") {
  auto f = parse_formula("mu X. ->{mu X. ->{X} | a} & ->{X}");
  CHECK(validate(f).empty());
  std::string text = print_formula(f);
  CHECK(text.find("X1") != std::string::npos);
}

TEST_CASE("unguarded or free variables fail to parse") {
  CHECK_THROWS_AS(parse_formula("mu X. X | a"), ValidationError);
  CHECK_THROWS_AS(parse_formula("X"), ValidationError);
}

TEST_CASE("print is a parser inverse and idempotent") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto f = oracles::random_formula(rng);
    std::string once = print_formula(f);
    CAPTURE(once);
    auto back = parse_formula(once);
    CHECK(equal(back, f));
    CHECK(print_formula(back) == once);
  }
}

TEST_CASE("binders are parenthesized except in tail position") {
  auto f = disj(mu("X", modal({var("X")})), prop("a"));
  std::string text = print_formula(f);
  CHECK(text == "(mu X. ->{X}) | a");
  auto g = disj(prop("a"), mu("X", modal({var("X")})));
  CHECK(print_formula(g) == "a | mu X. ->{X}");
}

TEST_CASE("kripke text round trips") {
  const char* text =
      "# two states\n"
      "state s0 a b\n"
      "state s1\n"
      "init s0\n"
      "edge s0 s1\n"
      "edge s1 s1\n";
  Kripke m = parse_kripke(text);
  CHECK(m.states.size() == 2);
  CHECK(m.init == 0);
  CHECK(m.states[0].props == std::set<std::string>{"a", "b"});
  CHECK(m.states[1].succs == std::vector<int>{1});
  Kripke again = parse_kripke(print_kripke(m));
  CHECK(print_kripke(again) == print_kripke(m));

  CHECK_THROWS(parse_kripke("state s0\n")); // init is mandatory
  CHECK_THROWS(parse_kripke("state s0\ninit s0\nedge s0 s9\n"));
}

TEST_CASE("tree text round trips and validates back edges") {
  const char* text =
      "root 0\n"
      "node 0 kind=or prio=2 children=1\n"
      "node 1 kind=modal lits=a,~b children=2\n"
      "node 2 kind=or prio=1 back=0\n";
  Twb t = parse_twb(text);
  CHECK(t.nodes.size() == 3);
  CHECK(t.nodes[1].kind == NodeKind::Modal);
  CHECK(t.nodes[1].lits == std::vector<std::string>{"a", "~b"});
  CHECK(t.nodes[2].back == 0);
  CHECK(t.nodes[2].parent == 1);
  Twb again = parse_twb(print_twb(t));
  CHECK(print_twb(again) == print_twb(t));

  // "choice" is accepted as a synonym for "or"
  Twb syn = parse_twb("root 0\nnode 0 kind=choice children=1\nnode 1 kind=leaf\n");
  CHECK(syn.nodes[0].kind == NodeKind::Choice);

  // back edges must point at strict ancestors
  CHECK_THROWS_AS(parse_twb("root 0\n"
                            "node 0 kind=or children=1,2\n"
                            "node 1 kind=leaf back=2\n"
                            "node 2 kind=leaf\n"),
                  ValidationError);
}

} // TEST_SUITE
