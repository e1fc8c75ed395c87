#pragma once

#include <string>
#include <vector>

#include "ptl/formula.hpp"

namespace ptl {

// One clause of the normal form: a conjunction of typicality antecedents
// implying a propositional part or one of the typicality consequents,
//
//   *t1 & ... & *tk  ->  phi | *c1 | ... | *cm
//
// with every t, c and phi propositional. No antecedents means the
// left-hand side is trivially true; phi is F when the clause has no
// propositional literals.
struct NormalFormSentence {
  std::vector<Formula> antecedents;
  Formula propositional_part;
  std::vector<Formula> consequents;

  Formula to_formula() const;
  std::string to_string() const;

  bool operator==(const NormalFormSentence& other) const;
};

// Rewrites a formula with typicality depth <= 1 into an equivalent set
// (conjunction) of normal form sentences: treat each *b subformula as an
// opaque literal, convert to CNF, and split each clause by literal kind.
// The result is deduplicated and sorted, so equal inputs give identical
// output. Throws NestedTypicalityError when the operator is nested.
std::vector<NormalFormSentence> to_normal_form(const Formula& f);

// Conjunction of the clause formulas; T for an empty set.
Formula normal_form_formula(const std::vector<NormalFormSentence>& sentences);

}  // namespace ptl
