#include "ptl/theory.hpp"

#include <bit>

#include "ptl/errors.hpp"
#include "ptl/lm_engine.hpp"
#include "ptl/pt_engine.hpp"

namespace ptl {

Formula formula_from_canonical(CanonicalFormula c, const Vocabulary& vocab) {
  c &= vocab.universe_mask();
  if (c == 0) return bot();
  if (c == vocab.universe_mask()) return top();
  std::vector<Formula> minterms;
  for (ValuationIndex v = 0; v < vocab.universe_size(); ++v) {
    if (!(c >> v & 1)) continue;
    std::vector<Formula> lits;
    for (size_t i = 0; i < vocab.size(); ++i) {
      Formula a = atom(vocab.name(i));
      lits.push_back(vocab.truth(v, i) ? a : neg(a));
    }
    minterms.push_back(conj_all(lits));
  }
  return disj_all(minterms);
}

TheoryProfileBuilder::TheoryProfileBuilder(const Vocabulary& vocab)
    : profile_{vocab, 0, {}, 0} {
  // The canonical table has 2^|U| rows, so profiles only make sense at
  // enumeration scale.
  if (vocab.universe_size() > 16)
    throw VocabularyTooLargeError("canonical-query profile needs at most 4 atoms");
  profile_.min_union.assign(size_t{1} << vocab.universe_size(), 0);
}

void TheoryProfileBuilder::add(const RankedInterpretation& r) {
  const Vocabulary& vocab = profile_.vocab;
  if (r.vocab() != vocab)
    throw VocabularyMismatchError("interpretation over a different vocabulary");
  profile_.possible_union |= r.possible_set();
  ++profile_.model_count;

  std::vector<ValuationSet> layers = r.finite_layers();
  size_t num_canonical = profile_.min_union.size();
  for (CanonicalFormula a = 0; a < num_canonical; ++a) {
    for (const ValuationSet& layer : layers) {
      ValuationSet hit = layer & a;
      if (hit) {
        profile_.min_union[a] |= hit;
        break;
      }
    }
  }
}

TheoryProfile TheoryProfileBuilder::take() { return std::move(profile_); }

TheoryProfile profile_of_models(const Vocabulary& vocab,
                                std::span<const RankedInterpretation> models) {
  TheoryProfileBuilder builder(vocab);
  for (const RankedInterpretation& r : models) builder.add(r);
  return builder.take();
}

TheoryProfile profile_of_mode(const KnowledgeBase& kb, EntailmentMode mode,
                              const Vocabulary& vocab, const EnumerationLimits& limits) {
  if (mode == EntailmentMode::Ranked) {
    TheoryProfileBuilder builder(vocab);
    for_each_model(
        kb, vocab,
        [&](const RankedInterpretation& r) {
          builder.add(r);
          return true;
        },
        limits);
    return builder.take();
  }
  std::vector<RankedInterpretation> family = deciding_models(kb, mode, vocab, limits);
  return profile_of_models(vocab, family);
}

bool entails(const KnowledgeBase& kb, EntailmentMode mode, const Formula& f,
             const Vocabulary& vocab, const EnumerationLimits& limits) {
  switch (mode) {
    case EntailmentMode::Ranked:
      return ranked_entails(kb, f, vocab, limits);
    case EntailmentMode::LM:
      return lm_entails(kb, f, vocab);
    case EntailmentMode::PT:
      return pt_entails(kb, f, vocab, limits);
    case EntailmentMode::PTPrime:
      return ptprime_entails(kb, f, vocab, limits);
  }
  throw std::logic_error("unreachable entailment mode");
}

std::vector<RankedInterpretation> deciding_models(const KnowledgeBase& kb, EntailmentMode mode,
                                                  const Vocabulary& vocab,
                                                  const EnumerationLimits& limits) {
  switch (mode) {
    case EntailmentMode::Ranked:
      throw UnsupportedCombinationError(
          "the ranked mode has no bounded deciding family; stream its models instead");
    case EntailmentMode::LM:
      return {lm_minimal(kb, vocab).model};
    case EntailmentMode::PT:
      return pt_minimal_models(kb, vocab, limits);
    case EntailmentMode::PTPrime:
      return ptprime_minimal_models(kb, vocab, limits);
  }
  throw std::logic_error("unreachable entailment mode");
}

const char* mode_name(EntailmentMode mode) {
  switch (mode) {
    case EntailmentMode::Ranked:
      return "ranked";
    case EntailmentMode::LM:
      return "lm";
    case EntailmentMode::PT:
      return "pt";
    case EntailmentMode::PTPrime:
      return "ptp";
  }
  return "?";
}

}  // namespace ptl
