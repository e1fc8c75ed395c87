#pragma once

#include "ptl/enumeration.hpp"
#include "ptl/semantics.hpp"

namespace ptl {

// Pointwise rank comparison, infinity greatest: r1 is at least as typicality-
// friendly as r2 when no valuation is ranked worse by r1 than by r2.
bool pt_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2);
bool pt_strictly_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2);

// Models of kb not strictly dominated by another model, in enumeration
// order. Exhaustive over the vocabulary, so the enumeration limits apply.
std::vector<RankedInterpretation> pt_minimal_models(const KnowledgeBase& kb,
                                                    const Vocabulary& vocab,
                                                    const EnumerationLimits& limits = {});

// Truth in every pointwise-minimal model.
bool pt_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                const EnumerationLimits& limits = {});

// The pointwise-minimal models whose possible set is inclusion-maximal
// within the minimal family.
std::vector<RankedInterpretation> ptprime_minimal_models(const KnowledgeBase& kb,
                                                         const Vocabulary& vocab,
                                                         const EnumerationLimits& limits = {});

bool ptprime_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                     const EnumerationLimits& limits = {});

}  // namespace ptl
