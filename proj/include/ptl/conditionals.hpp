#pragma once

#include <functional>
#include <optional>

#include <json.hpp>

#include "ptl/theory.hpp"

namespace ptl {

// Defeasible-consequence relation over the canonical formulas of a small
// vocabulary, stored as a 2^|U| x 2^|U| bit matrix: row a, column b holds
// when a |~ b.
class ConditionalSet {
 public:
  explicit ConditionalSet(const Vocabulary& vocab);

  const Vocabulary& vocab() const { return vocab_; }
  std::size_t num_canonical() const { return num_canonical_; }

  void insert(CanonicalFormula a, CanonicalFormula b);
  bool contains(CanonicalFormula a, CanonicalFormula b) const;
  std::uint64_t size() const;

  bool operator==(const ConditionalSet& other) const;

 private:
  std::size_t bit_index(CanonicalFormula a, CanonicalFormula b) const {
    return static_cast<std::size_t>(a) * num_canonical_ + static_cast<std::size_t>(b);
  }

  Vocabulary vocab_;
  std::size_t num_canonical_;
  std::vector<std::uint64_t> bits_;
};

// a |~ b  as the object-level sentence *a -> b. Both sides propositional.
Formula embed(const Formula& a, const Formula& b);

// The conditional a |~ b iff *a -> b is in the theory, with the membership
// test supplied as a predicate. Queries every canonical pair.
ConditionalSet induced_conditional(const std::function<bool(const Formula&)>& in_theory,
                                   const Vocabulary& vocab);

// Same relation computed from a profile without building query formulas:
// a |~ b iff min_union[a] ⊆ b.
ConditionalSet conditional_of_profile(const TheoryProfile& profile);

// a |~ b iff the minimal a-valuations of r all satisfy b.
ConditionalSet conditional_from_interpretation(const RankedInterpretation& r);

enum class KlmProperty { Ref, LLE, And, Or, RW, CM, RM };

const char* klm_property_name(KlmProperty p);

struct KlmWitness {
  CanonicalFormula alpha = 0;
  std::optional<CanonicalFormula> beta;
  std::optional<CanonicalFormula> gamma;
};

struct KlmPropertyResult {
  KlmProperty property;
  enum class Status { Pass, Structural, Fail } status;
  std::optional<KlmWitness> witness;  // set iff status == Fail
};

struct KlmReport {
  std::vector<KlmPropertyResult> results;

  bool preferential() const;  // Ref, LLE, And, Or, RW, CM
  bool rational() const;      // preferential + RM
  const KlmPropertyResult& result(KlmProperty p) const;
  nlohmann::json to_json(const Vocabulary& vocab) const;
};

// Checks the seven properties by brute force over canonical triples; the
// cubic RM sweep confines this to universes of at most 8 valuations
// (3 atoms). LLE holds structurally: canonically equivalent formulas are the
// same object. A failed property carries the first witness in ascending
// (alpha, beta, gamma) order.
KlmReport check_klm_properties(const ConditionalSet& c);

}  // namespace ptl
