#include "ptl/formula.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptl {

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

Formula::NodePtr Formula::make(FormulaKind kind, std::string name, NodePtr a, NodePtr b) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->a = std::move(a);
  node->b = std::move(b);
  int da = node->a ? node->a->typ_depth : 0;
  int db = node->b ? node->b->typ_depth : 0;
  node->typ_depth = std::max(da, db) + (kind == FormulaKind::Typ ? 1 : 0);
  return node;
}

const std::string& Formula::atom_name() const {
  if (node_->kind != FormulaKind::Atom) throw std::logic_error("atom_name on non-atom");
  return node_->name;
}

Formula Formula::child() const {
  if (node_->kind != FormulaKind::Not && node_->kind != FormulaKind::Typ)
    throw std::logic_error("child on non-unary formula");
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  if (!node_->b) throw std::logic_error("lhs on non-binary formula");
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  if (!node_->b) throw std::logic_error("rhs on non-binary formula");
  return Formula(node_->b);
}

bool Formula::operator==(const Formula& other) const {
  const Node* x = node_.get();
  const Node* y = other.node_.get();
  if (x == y) return true;
  if (x->kind != y->kind) return false;
  switch (x->kind) {
    case FormulaKind::Atom:
      return x->name == y->name;
    case FormulaKind::Top:
    case FormulaKind::Bot:
      return true;
    case FormulaKind::Not:
    case FormulaKind::Typ:
      return Formula(x->a) == Formula(y->a);
    default:
      return Formula(x->a) == Formula(y->a) && Formula(x->b) == Formula(y->b);
  }
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

void Formula::collect_atoms(std::set<std::string>& out) const {
  switch (kind()) {
    case FormulaKind::Atom:
      out.insert(node_->name);
      break;
    case FormulaKind::Top:
    case FormulaKind::Bot:
      break;
    case FormulaKind::Not:
    case FormulaKind::Typ:
      child().collect_atoms(out);
      break;
    default:
      lhs().collect_atoms(out);
      rhs().collect_atoms(out);
  }
}

Formula atom(const std::string& name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("invalid atom name: '" + name + "'");
  return Formula(Formula::make(FormulaKind::Atom, name, nullptr, nullptr));
}

Formula top() {
  static const Formula f(Formula::make(FormulaKind::Top, "", nullptr, nullptr));
  return f;
}

Formula bot() {
  static const Formula f(Formula::make(FormulaKind::Bot, "", nullptr, nullptr));
  return f;
}

Formula neg(Formula f) {
  return Formula(Formula::make(FormulaKind::Not, "", std::move(f.node_), nullptr));
}

Formula conj(Formula a, Formula b) {
  return Formula(Formula::make(FormulaKind::And, "", std::move(a.node_), std::move(b.node_)));
}

Formula disj(Formula a, Formula b) {
  return Formula(Formula::make(FormulaKind::Or, "", std::move(a.node_), std::move(b.node_)));
}

Formula implies(Formula a, Formula b) {
  return Formula(Formula::make(FormulaKind::Implies, "", std::move(a.node_), std::move(b.node_)));
}

Formula iff(Formula a, Formula b) {
  return Formula(Formula::make(FormulaKind::Iff, "", std::move(a.node_), std::move(b.node_)));
}

Formula typ(Formula f) {
  return Formula(Formula::make(FormulaKind::Typ, "", std::move(f.node_), nullptr));
}

Formula conj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return top();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = conj(acc, fs[i]);
  return acc;
}

Formula disj_all(const std::vector<Formula>& fs) {
  if (fs.empty()) return bot();
  Formula acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = disj(acc, fs[i]);
  return acc;
}

namespace {

void render_rec(const Formula& f, RenderStyle style, std::string& out) {
  bool full = style == RenderStyle::FullParens;
  switch (f.kind()) {
    case FormulaKind::Atom:
      out += f.atom_name();
      return;
    case FormulaKind::Top:
      out += 'T';
      return;
    case FormulaKind::Bot:
      out += 'F';
      return;
    case FormulaKind::Not:
    case FormulaKind::Typ:
      if (full) out += '(';
      out += f.kind() == FormulaKind::Not ? '!' : '*';
      render_rec(f.child(), style, out);
      if (full) out += ')';
      return;
    default: {
      const char* op = nullptr;
      switch (f.kind()) {
        case FormulaKind::And: op = " & "; break;
        case FormulaKind::Or: op = " | "; break;
        case FormulaKind::Implies: op = " -> "; break;
        default: op = " <-> "; break;
      }
      out += '(';
      render_rec(f.lhs(), style, out);
      out += op;
      render_rec(f.rhs(), style, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string render(const Formula& f, RenderStyle style) {
  std::string out;
  render_rec(f, style, out);
  return out;
}

std::set<std::string> kb_atoms(const KnowledgeBase& kb) {
  std::set<std::string> out;
  for (const Formula& f : kb) f.collect_atoms(out);
  return out;
}

bool is_conditional_kb(const KnowledgeBase& kb) {
  for (const Formula& f : kb) {
    if (f.kind() != FormulaKind::Implies) return false;
    Formula a = f.lhs();
    if (a.kind() != FormulaKind::Typ || !a.child().is_propositional()) return false;
    if (!f.rhs().is_propositional()) return false;
  }
  return true;
}

bool is_propositional_kb(const KnowledgeBase& kb) {
  return std::all_of(kb.begin(), kb.end(),
                     [](const Formula& f) { return f.is_propositional(); });
}

}  // namespace ptl
