#include "muforge/corpus.hpp"

#include <string>

#include "muforge/diagnostics.hpp"

namespace muforge {

namespace {

std::string level_prop(int level, int which) {
  // level 0 uses a, b; level i > 0 uses the next three letters
  int base = level == 0 ? 0 : 2 + 3 * (level - 1);
  return std::string(1, static_cast<char>('a' + base + which));
}

} // namespace

FormulaRef gen_alpha_n(int n) {
  if (n < 1 || n > 4)
    throw ValidationError("level count must be between 1 and 4, got " + std::to_string(n));

  FormulaRef f;
  for (int i = n; i >= 0; --i) {
    std::string xi = "X" + std::to_string(i);
    std::string yi = "Y" + std::to_string(i);
    FormulaRef clause = disj(conj(prop(level_prop(i, 0)), modal({var(xi)})),
                             conj(prop(level_prop(i, 1)), modal({var(yi)})));
    if (i > 0) clause = disj(clause, prop(level_prop(i, 2)));
    f = f ? conj(clause, f) : clause;
    f = mu(xi, nu(yi, f));
  }
  return f;
}

FormulaRef gen_alpha() { return gen_alpha_n(1); }

FormulaRef gen_beta() {
  auto loop = [](const char* p, const char* q, const char* x) {
    return fold_and({prop(p), prop(q), modal({var(x)})});
  };
  FormulaRef body = fold_or({loop("a", "c", "X0"), loop("a", "d", "X0"), loop("a", "e", "X0"),
                             loop("b", "e", "Y0"), loop("b", "c", "X1"), loop("b", "d", "Y1")});
  return mu("X0", nu("Y0", mu("X1", nu("Y1", body))));
}

std::pair<FormulaRef, FormulaRef> gen_simple_pair() {
  FormulaRef shaped = nu(
      "X", mu("Y", disj(conj(prop("a"), modal({var("X")})), conj(nprop("a"), modal({var("Y")})))));
  FormulaRef plain = nu(
      "Y", conj(modal({var("Y")}), mu("X", disj(conj(nprop("a"), modal({var("X")})), prop("a")))));
  return {shaped, plain};
}

FormulaRef gen_finite(const FormulaRef& psi) {
  FormulaRef stop = mu("X", disj(modal({var("X")}), modal({})));
  return rename_binders_unique(conj(stop, psi));
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    auto [shaped, plain] = gen_simple_pair();
    return std::vector<CorpusEntry>{
        {"alpha", gen_alpha()},
        {"beta", gen_beta()},
        {"simple", plain},
        {"simple-djf", shaped},
        {"finite-alpha", gen_finite(gen_alpha())},
    };
  }();
  return entries;
}

} // namespace muforge
