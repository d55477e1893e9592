#include "muforge/print.hpp"

namespace muforge {

namespace {

// prec: 0 at disjunction level, 1 conjunction, 2 operand.  tail is true when
// everything to the right of this subterm belongs to it, so an unwrapped
// binder reparses identically.
void pr(const FormulaRef& f, int prec, bool tail, std::string& out) {
  switch (f->kind) {
  case FormulaKind::Top:
    out += "tt";
    return;
  case FormulaKind::Bottom:
    out += "ff";
    return;
  case FormulaKind::Prop:
    out += f->name;
    return;
  case FormulaKind::NegProp:
    out += '~';
    out += f->name;
    return;
  case FormulaKind::Var:
    out += f->name;
    return;
  case FormulaKind::Or:
    if (prec > 0) {
      out += '(';
      pr(f, 0, true, out);
      out += ')';
      return;
    }
    pr(f->lhs, 1, false, out);
    out += " | ";
    pr(f->rhs, 0, tail, out);
    return;
  case FormulaKind::And:
    if (prec > 1) {
      out += '(';
      pr(f, 0, true, out);
      out += ')';
      return;
    }
    pr(f->lhs, 2, false, out);
    out += " & ";
    pr(f->rhs, 1, tail, out);
    return;
  case FormulaKind::Modal:
    out += "->{";
    for (std::size_t i = 0; i < f->family.size(); ++i) {
      if (i) out += ", ";
      pr(f->family[i], 0, true, out);
    }
    out += '}';
    return;
  case FormulaKind::Mu:
  case FormulaKind::Nu:
    if (!tail) {
      out += '(';
      pr(f, 0, true, out);
      out += ')';
      return;
    }
    out += f->kind == FormulaKind::Mu ? "mu " : "nu ";
    out += f->name;
    out += ". ";
    pr(f->body(), 0, true, out);
    return;
  }
}

} // namespace

std::string print_formula(const FormulaRef& f) {
  std::string out;
  pr(f, 0, true, out);
  return out;
}

} // namespace muforge
