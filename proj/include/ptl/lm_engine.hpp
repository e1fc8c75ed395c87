#pragma once

#include <optional>
#include <span>

#include <json.hpp>

#include "ptl/enumeration.hpp"
#include "ptl/semantics.hpp"

namespace ptl {

// One step of the minimal-model construction: entry i records the satisfying
// set S_i together with the interpretation S_i was evaluated against (R_0 for
// the first entry, then each bumped successor).
struct LmTraceEntry {
  int iteration;
  RankedInterpretation interpretation;
  ValuationSet satisfying_set;
};

struct LmTrace {
  std::vector<LmTraceEntry> entries;
  nlohmann::json to_json() const;
};

struct LmResult {
  RankedInterpretation model;
  LmTrace trace;
};

// Rank+1 for every valuation outside keep (finite ranks only). The result is
// an intermediate value and may be non-convex, e.g. with keep = {} nothing is
// left at rank 0.
RankedInterpretation bump_outside(const RankedInterpretation& r, ValuationSet keep);

// Rank = infinity for every valuation outside keep. Throws
// ConvexityViolationError if the surviving ranks are not convex.
RankedInterpretation make_impossible_outside(const RankedInterpretation& r, ValuationSet keep);

// The minimum model of kb under layer-inclusion preference: start from the
// uniform rank-0 interpretation, repeatedly demote everything that fails kb,
// and finally make the non-satisfying remainder impossible. An unsatisfiable
// kb yields the all-impossible interpretation. The run self-checks its
// textbook invariants (growing satisfying sets, convex intermediates, each
// projected candidate a model) and throws std::logic_error on violation.
//
// The vocabulary defaults to the atoms of kb; a query needing extra atoms
// must pass a covering vocabulary explicitly.
LmResult lm_minimal(const KnowledgeBase& kb,
                    const std::optional<Vocabulary>& vocab = std::nullopt);

// Layer-inclusion preference: equal layer lists, or a strict superset at the
// first finite layer where the two differ. Partial order on interpretations
// over a common vocabulary (throws VocabularyMismatchError otherwise).
bool lm_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2);
bool lm_strictly_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2);

// Pointwise minimum construction: a valuation is impossible iff impossible in
// every member; the rest are layered by their best rank across members, with
// ties sharing a layer and the layer sequence compacted. Throws
// EmptyInputError / VocabularyMismatchError.
RankedInterpretation ranked_union(std::span<const RankedInterpretation> rs);

// Ranked union taken over every model of kb, streamed through the enumerator
// so the model set is never materialized. The result is itself a model and is
// layer-inclusion minimal among all models; computing it this way gives an
// independent cross-check for lm_minimal.
RankedInterpretation union_of_all_models(const KnowledgeBase& kb, const Vocabulary& vocab,
                                         const EnumerationLimits& limits = {});

// lm_minimal of a knowledge base whose members all have the shape *a -> b
// with a, b propositional; throws NotConditionalKbError otherwise. For such
// bases this interpretation decides membership in the rational closure.
RankedInterpretation rational_closure_model(const KnowledgeBase& kb,
                                            const std::optional<Vocabulary>& vocab = std::nullopt);

bool lm_entails(const KnowledgeBase& kb, const Formula& f,
                const std::optional<Vocabulary>& vocab = std::nullopt);

}  // namespace ptl
