#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ptl {

enum class FormulaKind { Atom, Not, And, Or, Implies, Iff, Top, Bot, Typ };

// Immutable formula tree over the typicality language: the usual
// propositional connectives plus a unary typicality operator (concrete
// syntax `*`). Nodes are shared, so copies are cheap and subtrees can be
// reused freely. Equality is structural.
class Formula {
 public:
  FormulaKind kind() const { return node_->kind; }

  // Atom only.
  const std::string& atom_name() const;
  // Not / Typ only.
  Formula child() const;
  // Binary connectives only.
  Formula lhs() const;
  Formula rhs() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Maximum nesting level of the typicality operator; 0 for a purely
  // propositional formula. Cached at construction.
  int typicality_depth() const { return node_->typ_depth; }
  bool is_propositional() const { return node_->typ_depth == 0; }

  std::set<std::string> atoms() const;
  void collect_atoms(std::set<std::string>& out) const;

 private:
  struct Node;
  using NodePtr = std::shared_ptr<const Node>;

  struct Node {
    FormulaKind kind;
    std::string name;  // Atom only
    NodePtr a, b;
    int typ_depth = 0;
  };

  explicit Formula(NodePtr node) : node_(std::move(node)) {}
  static NodePtr make(FormulaKind kind, std::string name, NodePtr a, NodePtr b);

  NodePtr node_;

  friend Formula atom(const std::string&);
  friend Formula top();
  friend Formula bot();
  friend Formula neg(Formula);
  friend Formula conj(Formula, Formula);
  friend Formula disj(Formula, Formula);
  friend Formula implies(Formula, Formula);
  friend Formula iff(Formula, Formula);
  friend Formula typ(Formula);
};

// Factories. atom() validates the lexical class [a-z][a-z0-9_]* and throws
// std::invalid_argument otherwise.
Formula atom(const std::string& name);
Formula top();
Formula bot();
Formula neg(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula typ(Formula f);

// Left fold; empty input gives the neutral element (T for conj, F for disj).
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

// ASCII rendering that reparses to a structurally equal formula. The default
// style wraps every binary connective in parentheses; the full style wraps
// unary applications too.
enum class RenderStyle { Default, FullParens };
std::string render(const Formula& f, RenderStyle style = RenderStyle::Default);

using KnowledgeBase = std::vector<Formula>;

std::set<std::string> kb_atoms(const KnowledgeBase& kb);

// True when every member has the shape *a -> b with a, b propositional.
bool is_conditional_kb(const KnowledgeBase& kb);

// True when every member is propositional (no typicality operator at all).
bool is_propositional_kb(const KnowledgeBase& kb);

}  // namespace ptl
