#pragma once

#include <span>

#include "ptl/enumeration.hpp"
#include "ptl/semantics.hpp"

namespace ptl {

// A canonical formula is identified with its set of valuations; the mask
// doubles as the index, so the 2^|U| canonical formulas over a universe of
// |U| valuations are exactly the masks 0 .. universe_mask.
using CanonicalFormula = ValuationSet;

// Propositional formula with exactly the given valuation set: F for the
// empty set, T for the full universe, otherwise a disjunction of minterms.
Formula formula_from_canonical(CanonicalFormula c, const Vocabulary& vocab);

// What a family of deciding models agrees on, boiled down to the two facts
// that settle every canonical query:
//   - a propositional canonical q is entailed  iff  possible_union ⊆ q
//   - *a -> b (a, b canonical) is entailed     iff  min_union[a] ⊆ b
// because "all models satisfy" turns into a union on the left of ⊆.
struct TheoryProfile {
  Vocabulary vocab;
  ValuationSet possible_union = 0;
  std::vector<ValuationSet> min_union;  // indexed by canonical antecedent
  std::uint64_t model_count = 0;

  bool entails_canonical(CanonicalFormula q) const { return (possible_union & ~q) == 0; }
  bool entails_embedding(CanonicalFormula a, CanonicalFormula b) const {
    return (min_union[a] & ~b) == 0;
  }
};

class TheoryProfileBuilder {
 public:
  explicit TheoryProfileBuilder(const Vocabulary& vocab);
  void add(const RankedInterpretation& r);
  TheoryProfile take();

 private:
  TheoryProfile profile_;
};

TheoryProfile profile_of_models(const Vocabulary& vocab,
                                std::span<const RankedInterpretation> models);

// Profile of the deciding model family of a mode: all ranked models for
// Ranked (streamed, never materialized), the single minimum for LM, the
// minimal families for PT / PT'.
TheoryProfile profile_of_mode(const KnowledgeBase& kb, EntailmentMode mode,
                              const Vocabulary& vocab, const EnumerationLimits& limits = {});

// Mode-dispatched entailment of an arbitrary formula.
bool entails(const KnowledgeBase& kb, EntailmentMode mode, const Formula& f,
             const Vocabulary& vocab, const EnumerationLimits& limits = {});

// Deciding model family for the non-ranked modes ({lm_minimal} / PT minima /
// PT' maxima); throws UnsupportedCombinationError for Ranked, whose family is
// unbounded and only ever streamed.
std::vector<RankedInterpretation> deciding_models(const KnowledgeBase& kb, EntailmentMode mode,
                                                  const Vocabulary& vocab,
                                                  const EnumerationLimits& limits = {});

const char* mode_name(EntailmentMode mode);

}  // namespace ptl
