#include "ptl/normal_form.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ptl/errors.hpp"

namespace ptl {

namespace {

// CNF literal over two alphabets: plain propositional atoms and whole *b
// subformulas treated as opaque atoms. Constants are folded away before
// clauses are split.
struct Literal {
  bool positive;
  bool is_typ;
  std::string atom;   // !is_typ
  Formula typ_arg;    // is_typ

  Literal(bool pos, std::string a) : positive(pos), is_typ(false), atom(std::move(a)), typ_arg(top()) {}
  Literal(bool pos, Formula arg) : positive(pos), is_typ(true), typ_arg(std::move(arg)) {}
};

// Ordering key used to canonicalize clauses; semantic content is irrelevant,
// it only has to be a strict total order on distinct literals.
std::string literal_key(const Literal& l) {
  std::string k = l.positive ? "+" : "-";
  k += l.is_typ ? "t:" + render(l.typ_arg) : "p:" + l.atom;
  return k;
}

struct Clause {
  std::map<std::string, Literal> literals;  // keyed for dedup + ordering

  void add(Literal l) {
    std::string k = literal_key(l);
    literals.emplace(std::move(k), std::move(l));
  }
};

// NNF + CNF in one recursion. `positive` tracks the polarity of the context.
// Returns the clause set of f (under the given polarity); `true` constants
// are expressed as an empty clause set, `false` as a set holding one empty
// clause.
std::vector<Clause> cnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      Clause c;
      c.add(Literal(positive, f.atom_name()));
      return {c};
    }
    case FormulaKind::Typ: {
      if (!f.child().is_propositional())
        throw NestedTypicalityError(
            "normal form requires typicality depth <= 1: " + render(f));
      Clause c;
      c.add(Literal(positive, f.child()));
      return {c};
    }
    case FormulaKind::Top:
      return positive ? std::vector<Clause>{} : std::vector<Clause>{Clause{}};
    case FormulaKind::Bot:
      return positive ? std::vector<Clause>{Clause{}} : std::vector<Clause>{};
    case FormulaKind::Not:
      return cnf(f.child(), !positive);
    case FormulaKind::And:
    case FormulaKind::Or: {
      bool conjunctive = (f.kind() == FormulaKind::And) == positive;
      std::vector<Clause> a = cnf(f.lhs(), positive);
      std::vector<Clause> b = cnf(f.rhs(), positive);
      if (conjunctive) {
        a.insert(a.end(), b.begin(), b.end());
        return a;
      }
      // Distribute: every clause of a joined with every clause of b.
      std::vector<Clause> out;
      out.reserve(a.size() * b.size());
      for (const Clause& x : a)
        for (const Clause& y : b) {
          Clause c = x;
          for (const auto& [k, l] : y.literals) c.literals.emplace(k, l);
          out.push_back(std::move(c));
        }
      return out;
    }
    case FormulaKind::Implies:
      return cnf(disj(neg(f.lhs()), f.rhs()), positive);
    case FormulaKind::Iff:
      return cnf(conj(implies(f.lhs(), f.rhs()), implies(f.rhs(), f.lhs())), positive);
  }
  throw std::logic_error("unreachable formula kind");
}

NormalFormSentence sentence_of(const Clause& clause) {
  NormalFormSentence s{{}, bot(), {}};
  std::vector<Formula> props;
  for (const auto& [key, l] : clause.literals) {
    if (l.is_typ) {
      (l.positive ? s.consequents : s.antecedents).push_back(l.typ_arg);
    } else {
      props.push_back(l.positive ? atom(l.atom) : neg(atom(l.atom)));
    }
  }
  if (!props.empty()) s.propositional_part = disj_all(props);
  // Keys are already sorted by the map, but antecedents/consequents were
  // interleaved with propositional literals, so sort them on their own.
  auto by_render = [](const Formula& a, const Formula& b) { return render(a) < render(b); };
  std::sort(s.antecedents.begin(), s.antecedents.end(), by_render);
  std::sort(s.consequents.begin(), s.consequents.end(), by_render);
  return s;
}

}  // namespace

Formula NormalFormSentence::to_formula() const {
  std::vector<Formula> lhs;
  lhs.reserve(antecedents.size());
  for (const Formula& t : antecedents) lhs.push_back(typ(t));
  Formula rhs = propositional_part;
  for (const Formula& c : consequents) rhs = disj(rhs, typ(c));
  if (antecedents.empty()) return rhs;
  return implies(conj_all(lhs), rhs);
}

std::string NormalFormSentence::to_string() const {
  std::string out;
  for (size_t i = 0; i < antecedents.size(); ++i) {
    if (i) out += " & ";
    out += "*" + render(antecedents[i]);
  }
  if (!antecedents.empty()) out += " -> ";
  out += render(propositional_part);
  for (const Formula& c : consequents) out += " | *" + render(c);
  return out;
}

bool NormalFormSentence::operator==(const NormalFormSentence& other) const {
  return antecedents == other.antecedents && propositional_part == other.propositional_part &&
         consequents == other.consequents;
}

std::vector<NormalFormSentence> to_normal_form(const Formula& f) {
  if (f.typicality_depth() > 1)
    throw NestedTypicalityError("normal form requires typicality depth <= 1: " + render(f));
  std::vector<Clause> clauses = cnf(f, true);

  std::vector<NormalFormSentence> out;
  std::set<std::string> seen;
  for (const Clause& c : clauses) {
    NormalFormSentence s = sentence_of(c);
    if (seen.insert(s.to_string()).second) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const NormalFormSentence& a, const NormalFormSentence& b) {
              return a.to_string() < b.to_string();
            });
  return out;
}

Formula normal_form_formula(const std::vector<NormalFormSentence>& sentences) {
  std::vector<Formula> fs;
  fs.reserve(sentences.size());
  for (const NormalFormSentence& s : sentences) fs.push_back(s.to_formula());
  return conj_all(fs);
}

}  // namespace ptl
