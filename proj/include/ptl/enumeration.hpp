#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "ptl/semantics.hpp"

namespace ptl {

// Bounds for the exhaustive reasoners. The default keeps enumeration at a
// comfortable desk scale (3 atoms, ~1.1M interpretations); 4 atoms is the
// absolute cap and is already impractically large for full sweeps.
struct EnumerationLimits {
  std::size_t max_atoms = 3;
};

inline constexpr std::size_t kEnumerationHardCap = 4;

// Calls sink for every ranked interpretation over the vocabulary, in a fixed
// deterministic order: possible sets as submasks of the universe counting up
// from the empty set, and for each possible set every ordered partition into
// layers, choosing the rank-0 block first (blocks in increasing mask order).
// The sink returns false to stop early. The interpretation reference passed
// to the sink is only valid during the call.
void enumerate_interpretations(const Vocabulary& vocab,
                               const std::function<bool(const RankedInterpretation&)>& sink,
                               const EnumerationLimits& limits = {});

std::uint64_t count_interpretations(const Vocabulary& vocab,
                                    const EnumerationLimits& limits = {});

// Models of kb in enumeration order.
void for_each_model(const KnowledgeBase& kb, const Vocabulary& vocab,
                    const std::function<bool(const RankedInterpretation&)>& sink,
                    const EnumerationLimits& limits = {});

std::vector<RankedInterpretation> collect_models(const KnowledgeBase& kb,
                                                 const Vocabulary& vocab,
                                                 const EnumerationLimits& limits = {});

std::uint64_t count_models(const KnowledgeBase& kb, const Vocabulary& vocab,
                           const EnumerationLimits& limits = {});

// Classical-flavoured entailment: every ranked model of kb is a model of f.
bool ranked_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                    const EnumerationLimits& limits = {});

// First enumerated model of kb that fails f, if any.
std::optional<RankedInterpretation> find_counter_model(const KnowledgeBase& kb,
                                                       const Formula& f,
                                                       const Vocabulary& vocab,
                                                       const EnumerationLimits& limits = {});

// kb has a model with at least one possible valuation. (The all-impossible
// interpretation models everything, so mere existence of a model is not
// informative.)
bool is_satisfiable(const KnowledgeBase& kb, const Vocabulary& vocab,
                    const EnumerationLimits& limits = {});

}  // namespace ptl
