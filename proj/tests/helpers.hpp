#pragma once

// Shared fixtures and small generators for the test suites. Doctest-free so
// the acceptance harness can include it too.

#include <algorithm>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "ptl/formula.hpp"
#include "ptl/parser.hpp"
#include "ptl/semantics.hpp"

namespace ptl::testing {

inline KnowledgeBase kb_of(std::initializer_list<const char*> texts) {
  KnowledgeBase kb;
  for (const char* t : texts) kb.push_back(parse(t));
  return kb;
}

// Penguin triangle, mixed classical/typicality: p -> b, *b -> f.
inline KnowledgeBase kb_a() { return kb_of({"p -> b", "*b -> f"}); }

// The running three-atom base with a nested-consequent sentence.
inline KnowledgeBase kb_b() {
  return kb_of({"*T -> (!p & !r)", "*p -> *!f", "*r -> *f", "p -> !r"});
}

// Same, with the second sentence propositional on the right.
inline KnowledgeBase kb_bprime() {
  return kb_of({"*T -> (!p & !r)", "*p -> !f", "*r -> *f", "p -> !r"});
}

// Two-atom base behind the impossibility chain.
inline KnowledgeBase kb_imp() { return kb_of({"*T -> p", "*!p -> *q"}); }

// Fully conditional penguin base (every member *a -> b, a and b propositional).
inline KnowledgeBase kb_penguin_conditional() {
  return kb_of({"*b -> f", "*p -> b", "*p -> !f"});
}

inline Vocabulary vocab_bfp() { return Vocabulary({"b", "f", "p"}); }
inline Vocabulary vocab_fpr() { return Vocabulary({"f", "p", "r"}); }
inline Vocabulary vocab_pq() { return Vocabulary({"p", "q"}); }

inline ValuationSet mask(std::initializer_list<ValuationIndex> vs) {
  ValuationSet s = 0;
  for (ValuationIndex v : vs) s |= ValuationSet{1} << v;
  return s;
}

// The worked bird/penguin interpretation over (b, f, p):
//   2 | {b, f, p}
//   1 | {b, !f, !p}, {b, !f, p}
//   0 | {!b, !f, !p}, {!b, f, !p}, {b, f, !p}
// with {!b, !f, p} and {!b, f, p} impossible.
inline RankedInterpretation bird_interpretation() {
  return RankedInterpretation::from_layers(vocab_bfp(), {{0, 2, 6}, {4, 5}, {7}});
}

inline bool same_model_set(std::vector<RankedInterpretation> a,
                           std::vector<RankedInterpretation> b) {
  auto by_ranks = [](const RankedInterpretation& x, const RankedInterpretation& y) {
    return x.ranks() < y.ranks();
  };
  std::sort(a.begin(), a.end(), by_ranks);
  std::sort(b.begin(), b.end(), by_ranks);
  return a == b;
}

// Random formula over the given atoms. Typicality is only ever applied to a
// propositional subtree, so the result has depth <= 1 and suits the normal
// form converter; pass allow_typ = false for purely propositional output.
inline Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms,
                              int depth, bool allow_typ = true) {
  std::uniform_int_distribution<int> pick(0, 99);
  int roll = pick(rng);
  if (depth <= 0 || roll < 25) {
    if (roll % 8 == 6) return top();
    if (roll % 8 == 7) return bot();
    std::uniform_int_distribution<std::size_t> ai(0, atoms.size() - 1);
    return atom(atoms[ai(rng)]);
  }
  if (roll < 40) return neg(random_formula(rng, atoms, depth - 1, allow_typ));
  if (allow_typ && roll < 52) return typ(random_formula(rng, atoms, depth - 1, false));
  Formula a = random_formula(rng, atoms, depth - 1, allow_typ);
  Formula b = random_formula(rng, atoms, depth - 1, allow_typ);
  if (roll < 68) return conj(a, b);
  if (roll < 82) return disj(a, b);
  if (roll < 92) return implies(a, b);
  return iff(a, b);
}

// Random knowledge base of *a -> b sentences with propositional a, b.
inline KnowledgeBase random_conditional_kb(std::mt19937& rng,
                                           const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> n(1, 3);
  KnowledgeBase kb;
  int count = n(rng);
  for (int i = 0; i < count; ++i) {
    Formula a = random_formula(rng, atoms, 2, false);
    Formula b = random_formula(rng, atoms, 2, false);
    kb.push_back(implies(typ(a), b));
  }
  return kb;
}

// Random mixed PTL knowledge base (depth <= 1 typicality).
inline KnowledgeBase random_kb(std::mt19937& rng, const std::vector<std::string>& atoms) {
  std::uniform_int_distribution<int> n(1, 3);
  KnowledgeBase kb;
  int count = n(rng);
  for (int i = 0; i < count; ++i) kb.push_back(random_formula(rng, atoms, 3));
  return kb;
}

}  // namespace ptl::testing
