#include "ptl/enumeration.hpp"

#include <algorithm>
#include <bit>

#include "ptl/errors.hpp"

namespace ptl {

namespace {

void check_limits(const Vocabulary& vocab, const EnumerationLimits& limits) {
  std::size_t bound = std::min(limits.max_atoms, kEnumerationHardCap);
  if (vocab.size() > bound)
    throw VocabularyTooLargeError(
        "enumeration over " + std::to_string(vocab.size()) +
        " atoms exceeds the configured bound of " + std::to_string(bound) +
        (limits.max_atoms > kEnumerationHardCap ? " (hard cap 4)" : ""));
}

struct Enumerator {
  const Vocabulary& vocab;
  const std::function<bool(const RankedInterpretation&)>& sink;
  std::vector<Rank> ranks;
  // Scratch block lists per recursion depth, reused across partitions.
  std::vector<std::vector<ValuationSet>> blocks;
  bool stopped = false;

  bool emit() {
    RankedInterpretation r(vocab, ranks);
    if (!sink(r)) stopped = true;
    return !stopped;
  }

  // Ordered partition of `remaining` into layers `depth, depth+1, ...`.
  void partitions(ValuationSet remaining, Rank depth) {
    if (stopped) return;
    if (!remaining) {
      emit();
      return;
    }
    // blocks is pre-sized to the maximum depth, so this reference stays valid
    // across the recursion below.
    std::vector<ValuationSet>& subs = blocks[depth];
    subs.clear();
    // Non-empty submasks of `remaining`, collected in decreasing order by the
    // standard trick, then consumed in increasing order.
    for (ValuationSet s = remaining; s; s = (s - 1) & remaining) subs.push_back(s);
    for (size_t i = subs.size(); i-- > 0 && !stopped;) {
      ValuationSet block = subs[i];
      for (ValuationSet rest = block; rest;) {
        ValuationIndex v = static_cast<ValuationIndex>(std::countr_zero(rest));
        rest &= rest - 1;
        ranks[v] = depth;
      }
      partitions(remaining & ~block, depth + 1);
    }
  }
};

}  // namespace

void enumerate_interpretations(const Vocabulary& vocab,
                               const std::function<bool(const RankedInterpretation&)>& sink,
                               const EnumerationLimits& limits) {
  check_limits(vocab, limits);
  ValuationSet universe = vocab.universe_mask();
  Enumerator e{vocab, sink, std::vector<Rank>(vocab.universe_size(), kInfiniteRank),
               std::vector<std::vector<ValuationSet>>(vocab.universe_size() + 1), false};
  for (ValuationSet possible = 0;; ++possible) {
    std::fill(e.ranks.begin(), e.ranks.end(), kInfiniteRank);
    e.partitions(possible, 0);
    if (e.stopped || possible == universe) break;
  }
}

std::uint64_t count_interpretations(const Vocabulary& vocab, const EnumerationLimits& limits) {
  std::uint64_t n = 0;
  enumerate_interpretations(
      vocab,
      [&](const RankedInterpretation&) {
        ++n;
        return true;
      },
      limits);
  return n;
}

void for_each_model(const KnowledgeBase& kb, const Vocabulary& vocab,
                    const std::function<bool(const RankedInterpretation&)>& sink,
                    const EnumerationLimits& limits) {
  enumerate_interpretations(
      vocab,
      [&](const RankedInterpretation& r) { return is_model(r, kb) ? sink(r) : true; },
      limits);
}

std::vector<RankedInterpretation> collect_models(const KnowledgeBase& kb,
                                                 const Vocabulary& vocab,
                                                 const EnumerationLimits& limits) {
  std::vector<RankedInterpretation> out;
  for_each_model(
      kb, vocab,
      [&](const RankedInterpretation& r) {
        out.push_back(r);
        return true;
      },
      limits);
  return out;
}

std::uint64_t count_models(const KnowledgeBase& kb, const Vocabulary& vocab,
                           const EnumerationLimits& limits) {
  std::uint64_t n = 0;
  for_each_model(
      kb, vocab,
      [&](const RankedInterpretation&) {
        ++n;
        return true;
      },
      limits);
  return n;
}

bool ranked_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                    const EnumerationLimits& limits) {
  return !find_counter_model(kb, f, vocab, limits).has_value();
}

std::optional<RankedInterpretation> find_counter_model(const KnowledgeBase& kb,
                                                       const Formula& f,
                                                       const Vocabulary& vocab,
                                                       const EnumerationLimits& limits) {
  std::optional<RankedInterpretation> found;
  for_each_model(
      kb, vocab,
      [&](const RankedInterpretation& r) {
        if (satisfies(r, f)) return true;
        found = r;
        return false;
      },
      limits);
  return found;
}

bool is_satisfiable(const KnowledgeBase& kb, const Vocabulary& vocab,
                    const EnumerationLimits& limits) {
  bool sat = false;
  for_each_model(
      kb, vocab,
      [&](const RankedInterpretation& r) {
        if (r.possible_set() == 0) return true;
        sat = true;
        return false;
      },
      limits);
  return sat;
}

}  // namespace ptl
