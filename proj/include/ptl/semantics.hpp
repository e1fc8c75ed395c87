#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "ptl/formula.hpp"

namespace ptl {

// A valuation is identified by its index in the canonical ordering of the
// universe: binary counting over the ordered vocabulary, first atom most
// significant. Index 0 makes every atom false.
using ValuationIndex = std::uint32_t;

// Subset of the universe as a bitmask; bit v stands for valuation v. This
// fixes an engine-wide bound of 6 atoms (64 valuations), far above anything
// the enumeration-based reasoners can touch anyway.
using ValuationSet = std::uint64_t;

// Rank of a valuation. Natural number or infinity; kInfiniteRank compares
// greater than every finite rank, and no arithmetic is ever done on it.
using Rank = std::uint32_t;
inline constexpr Rank kInfiniteRank = std::numeric_limits<Rank>::max();

inline constexpr std::size_t kMaxAtoms = 6;

enum class EntailmentMode { Ranked, LM, PT, PTPrime };

// Ordered list of distinct atom names. Copies are cheap (shared storage).
class Vocabulary {
 public:
  explicit Vocabulary(std::vector<std::string> names);
  static Vocabulary from_atoms(const std::set<std::string>& atoms);  // sorted

  std::size_t size() const { return names_->size(); }
  std::size_t universe_size() const { return std::size_t{1} << names_->size(); }
  ValuationSet universe_mask() const {
    return universe_size() == 64 ? ~ValuationSet{0}
                                 : (ValuationSet{1} << universe_size()) - 1;
  }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view atom) const;

  // Valuations where atom i is true.
  ValuationSet atom_mask(std::size_t i) const { return atom_masks_[i]; }
  bool truth(ValuationIndex v, std::size_t i) const {
    return (v >> (size() - 1 - i)) & 1u;
  }

  // Literal list in vocabulary order, e.g. {"b", "!f", "p"}.
  std::vector<std::string> literals(ValuationIndex v) const;
  // Compact display form, e.g. "{b, !f, p}".
  std::string valuation_string(ValuationIndex v) const;
  std::string set_string(ValuationSet s) const;

  bool operator==(const Vocabulary& other) const;
  bool operator!=(const Vocabulary& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  std::vector<ValuationSet> atom_masks_;
};

// Rank function over the universe of a vocabulary. Convex: if some valuation
// has finite rank r, every rank below r is taken by some valuation too. The
// checked constructor enforces convexity; bump_outside() in the LM engine is
// the one producer of deliberate non-convex intermediates.
class RankedInterpretation {
 public:
  RankedInterpretation(Vocabulary vocab, std::vector<Rank> ranks);

  static RankedInterpretation uniform_zero(const Vocabulary& vocab);
  static RankedInterpretation all_impossible(const Vocabulary& vocab);
  // Layers listed from rank 0 upward; every valuation not mentioned is
  // impossible. Convenient for spelling out fixtures.
  static RankedInterpretation from_layers(
      const Vocabulary& vocab, const std::vector<std::vector<ValuationIndex>>& layers);

  const Vocabulary& vocab() const { return vocab_; }
  Rank rank(ValuationIndex v) const { return ranks_[v]; }
  const std::vector<Rank>& ranks() const { return ranks_; }

  // Valuations with finite rank (possibly empty).
  ValuationSet possible_set() const { return possible_; }

  bool convex() const;

  // Finite layers from rank 0 up, trailing empty layers trimmed. Non-convex
  // intermediates may contain empty layers in the middle.
  std::vector<ValuationSet> finite_layers() const;
  ValuationSet infinite_layer() const;

  bool operator==(const RankedInterpretation& other) const {
    return vocab_ == other.vocab_ && ranks_ == other.ranks_;
  }
  bool operator!=(const RankedInterpretation& other) const { return !(*this == other); }

  nlohmann::json to_json() const;

 private:
  struct Unchecked {};
  RankedInterpretation(Unchecked, Vocabulary vocab, std::vector<Rank> ranks);

  Vocabulary vocab_;
  std::vector<Rank> ranks_;
  ValuationSet possible_ = 0;

  friend RankedInterpretation bump_outside(const RankedInterpretation&, ValuationSet);
};

// Valuations among possible_set(R) satisfying f. Satisfaction of *a at v
// requires v to be of minimal rank among the possible valuations satisfying
// a. Throws UnknownAtomError if f mentions an atom outside the vocabulary.
ValuationSet extension(const RankedInterpretation& r, const Formula& f);

// R is a model of f when every possible valuation satisfies f; with an empty
// possible set this holds vacuously.
bool satisfies(const RankedInterpretation& r, const Formula& f);
bool is_model(const RankedInterpretation& r, const KnowledgeBase& kb);

// min-rank members of [antecedent] all satisfy consequent; equivalent to
// satisfies(r, *antecedent -> consequent).
bool satisfies_conditional(const RankedInterpretation& r, const Formula& antecedent,
                           const Formula& consequent);

// Classical (rank-free) truth of a propositional formula at a valuation.
// Throws NotPropositionalError on typicality operators.
bool classically_satisfies(const Vocabulary& vocab, ValuationIndex v, const Formula& f);
// All valuations classically satisfying a propositional formula.
ValuationSet classical_models(const Vocabulary& vocab, const Formula& f);

// Layer table in display form, highest rank first, infinite layer (if any)
// on top. Used by the CLI and handy in test failure output.
void print_layer_table(std::ostream& os, const RankedInterpretation& r);

}  // namespace ptl
