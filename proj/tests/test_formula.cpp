#include "doctest.h"

#include "muforge/diagnostics.hpp"
#include "muforge/formula.hpp"
#include "muforge/print.hpp"

#include "oracles.hpp"

using namespace muforge;

TEST_SUITE("formula") {

TEST_CASE("folds collapse empty and singleton inputs") {
  CHECK(equal(fold_or({}), bottom()));
  CHECK(equal(fold_and({}), top()));
  CHECK(equal(fold_or({prop("a")}), prop("a")));
  CHECK(equal(fold_and({prop("a")}), prop("a")));
  CHECK(fold_or({prop("a"), prop("b")})->kind == FormulaKind::Or);
  // fold_or keeps order, disj_of canonicalizes
  CHECK_FALSE(equal(fold_or({prop("b"), prop("a")}), fold_or({prop("a"), prop("b")})));
  CHECK(equal(disj_of({prop("b"), prop("a"), prop("a")}), disj_of({prop("a"), prop("b")})));
}

TEST_CASE("modal member sets are sorted and deduplicated") {
  auto m1 = modal({prop("b"), prop("a"), prop("a")});
  auto m2 = modal({prop("a"), prop("b")});
  CHECK(equal(m1, m2));
  CHECK(m1->hashValue == m2->hashValue);
  CHECK(m1->family.size() == 2);
}

TEST_CASE("diamond and box expand to the set modality") {
  auto f = prop("a");
  CHECK(equal(dia(f), modal({f, top()})));
  CHECK(equal(box(f), disj(modal({f}), modal({}))));
}

TEST_CASE("structural order and hash separate distinct formulas") {
  auto a = mu("X", disj(prop("a"), modal({var("X")})));
  auto b = nu("X", disj(prop("a"), modal({var("X")})));
  CHECK(equal(a, a));
  CHECK_FALSE(equal(a, b));
  CHECK(compare(*a, *a) == 0);
  CHECK(compare(*a, *b) != 0);
  FormulaLess less;
  CHECK(less(a, b) != less(b, a));
}

TEST_CASE("free variables and closedness") {
  auto f = mu("X", disj(conj(prop("a"), modal({var("X")})), var("Y")));
  auto fv = free_vars(f);
  CHECK(fv == std::set<std::string>{"Y"});
  CHECK_FALSE(is_closed(f));
  CHECK(is_closed(mu("Y", modal({f}))));
}

TEST_CASE("validate flags free variables and unguarded occurrences") {
  CHECK(validate(mu("X", disj(prop("a"), modal({var("X")})))).empty());

  auto open = disj(prop("a"), var("Z"));
  auto d1 = validate(open);
  REQUIRE_FALSE(d1.empty());
  CHECK(d1.front().message.find("Z") != std::string::npos);
  CHECK_FALSE(d1.front().path.empty());

  // bound occurrence with no modality in between
  auto unguarded = mu("X", disj(prop("a"), var("X")));
  CHECK_FALSE(validate(unguarded).empty());
  CHECK_THROWS_AS(validate_or_throw(unguarded), ValidationError);

  // duplicate binder names
  auto dup = mu("X", modal({nu("X", modal({var("X")}))}));
  CHECK_FALSE(validate(dup).empty());
}

TEST_CASE("rename_binders_unique keeps first names and suffixes clashes") {
  auto dup = mu("X", modal({nu("X", modal({var("X")}))}));
  auto fixed = rename_binders_unique(dup);
  CHECK(validate(fixed).empty());
  std::string text = print_formula(fixed);
  CHECK(text.find("X1") != std::string::npos);
  // outer binder keeps its name
  CHECK(text.rfind("mu X.", 0) == 0);
}

TEST_CASE("formula index answers binder queries") {
  auto f = mu("X", modal({nu("Y", conj(modal({var("Y")}), modal({var("X")})))}));
  FormulaIndex ix(f);
  CHECK(ix.binders() == std::vector<std::string>{"X", "Y"});
  CHECK(ix.is_mu("X"));
  CHECK_FALSE(ix.is_mu("Y"));
  CHECK(ix.has_binder("Y"));
  CHECK_FALSE(ix.has_binder("Z"));
  CHECK(ix.binder("Y")->kind == FormulaKind::Nu);
  // X occurs free inside Y's body, not the other way around
  CHECK(ix.free_in_body("X", "Y"));
  CHECK_FALSE(ix.free_in_body("Y", "X"));
  CHECK(ix.free_in_body("Y", "Y"));
}

TEST_CASE("random formulas are well formed") {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    auto f = oracles::random_formula(rng);
    CAPTURE(print_formula(f));
    CHECK(validate(f).empty());
    CHECK(is_closed(f));
  }
}

} // TEST_SUITE
