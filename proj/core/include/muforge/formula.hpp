#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace muforge {

// Positive-form syntax: negation only on atomic propositions, one set-valued
// modality ->B ("every successor satisfies a member of B, and every member of
// B is satisfied by some successor").  Diamond and box are sugar, see
// dia()/box().
enum class FormulaKind : std::uint8_t {
  Top,
  Bottom,
  Prop,
  NegProp,
  Var,
  And,
  Or,
  Modal,
  Mu,
  Nu,
};

class Formula;
using FormulaRef = std::shared_ptr<const Formula>;

// Immutable node with a cached structural hash.  Modal keeps its member set
// sorted and deduplicated, so structurally equal sets compare equal.
class Formula {
public:
  FormulaKind kind;
  std::string name;               // Prop/NegProp/Var and binder variable
  FormulaRef lhs, rhs;            // And/Or children; lhs doubles as binder body
  std::vector<FormulaRef> family; // Modal member set (sorted, unique)
  std::size_t hashValue = 0;

  const FormulaRef& body() const { return lhs; }
};

FormulaRef top();
FormulaRef bottom();
FormulaRef prop(std::string name);
FormulaRef nprop(std::string name);
FormulaRef var(std::string name);
FormulaRef conj(FormulaRef a, FormulaRef b);
FormulaRef disj(FormulaRef a, FormulaRef b);
FormulaRef modal(std::vector<FormulaRef> members);
FormulaRef mu(std::string name, FormulaRef body);
FormulaRef nu(std::string name, FormulaRef body);

// <>f == ->{f, tt};  []f == ->{f} | ->{}
FormulaRef dia(FormulaRef f);
FormulaRef box(FormulaRef f);

// Right folds.  fold_or keeps the given order; disj_of first sorts and
// deduplicates, which is the canonical form for member-set disjunctions.
// Empty input folds to ff (or), tt (and); singletons fold to the member.
FormulaRef fold_or(const std::vector<FormulaRef>& fs);
FormulaRef fold_and(const std::vector<FormulaRef>& fs);
FormulaRef disj_of(std::vector<FormulaRef> fs);

// Total structural order: kind, then name, then children.
int compare(const Formula& a, const Formula& b);
bool equal(const FormulaRef& a, const FormulaRef& b);

struct FormulaLess {
  bool operator()(const FormulaRef& a, const FormulaRef& b) const;
};
struct FormulaHash {
  std::size_t operator()(const FormulaRef& f) const { return f->hashValue; }
};
struct FormulaEq {
  bool operator()(const FormulaRef& a, const FormulaRef& b) const { return equal(a, b); }
};

std::set<std::string> free_vars(const FormulaRef& f);
bool is_closed(const FormulaRef& f);

// Gives every binder a distinct variable name.  The first occurrence of a
// name keeps it; later clashes get the smallest unused "<name><n>" suffix.
FormulaRef rename_binders_unique(const FormulaRef& f);

// One finding per offending occurrence.  path addresses the node from the
// root, e.g. "root/body/left".
struct Diagnostic {
  std::string message;
  std::string path;
};

// Checks: closed, all binder names distinct, every bound occurrence separated
// from its binder by at least one modality.  Empty result means well-formed.
std::vector<Diagnostic> validate(const FormulaRef& f);

// Throws ValidationError with the first diagnostic.
void validate_or_throw(const FormulaRef& f);

// Binder lookup table for a validated formula.
class FormulaIndex {
public:
  explicit FormulaIndex(FormulaRef root);

  const FormulaRef& root() const { return root_; }
  // Binder names in pre-order (outermost first).
  const std::vector<std::string>& binders() const { return binders_; }
  bool has_binder(const std::string& x) const { return binderNode_.count(x) != 0; }
  bool is_mu(const std::string& x) const;
  const FormulaRef& binder(const std::string& x) const;
  const FormulaRef& body(const std::string& x) const;
  // True when x occurs free in body(y).
  bool free_in_body(const std::string& x, const std::string& y) const;

private:
  FormulaRef root_;
  std::vector<std::string> binders_;
  std::map<std::string, FormulaRef> binderNode_;
  std::map<std::string, std::set<std::string>> freeInBody_;
};

} // namespace muforge
