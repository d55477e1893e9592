#pragma once

#include <map>
#include <set>
#include <string>

#include "muforge/formula.hpp"

namespace muforge {

// Maps each binder variable to a priority.  mu variables get odd values, nu
// variables even ones.  0 is always part of the reported co-domain whether or
// not a variable uses it; the values 1..codomainMax are all used.
struct PriorityAssignment {
  std::map<std::string, int> entries;
  int codomainMax = 0;

  std::set<int> codomain() const;
  int at(const std::string& x) const;
};

// Innermost-first greedy: a binder gets the least value of its parity that
// dominates every inner binder whose body still mentions it, then unused
// levels are compacted away.  The co-domain size is the alternation depth.
PriorityAssignment minimal_priority_assignment(const FormulaRef& f);

// True when no mu variable is free in a nu binder's body and no nu variable
// is free in a mu binder's body (equivalently: the formula admits both a
// {0,1} assignment and an even-only one).
bool is_alternation_free(const FormulaRef& f);

} // namespace muforge
