#include "ptl/lm_engine.hpp"

#include <algorithm>
#include <map>

#include "ptl/errors.hpp"

namespace ptl {

nlohmann::json LmTrace::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const LmTraceEntry& e : entries) {
    nlohmann::json row;
    row["iteration"] = e.iteration;
    row["layers"] = e.interpretation.to_json()["layers"];
    nlohmann::json sat = nlohmann::json::array();
    const Vocabulary& vocab = e.interpretation.vocab();
    for (ValuationIndex v = 0; v < vocab.universe_size(); ++v)
      if (e.satisfying_set >> v & 1) sat.push_back(vocab.literals(v));
    row["satisfying_set"] = std::move(sat);
    j.push_back(std::move(row));
  }
  return j;
}

RankedInterpretation bump_outside(const RankedInterpretation& r, ValuationSet keep) {
  std::vector<Rank> ranks = r.ranks();
  for (size_t v = 0; v < ranks.size(); ++v)
    if (!(keep >> v & 1) && ranks[v] != kInfiniteRank) ++ranks[v];
  return RankedInterpretation(RankedInterpretation::Unchecked{}, r.vocab(), std::move(ranks));
}

RankedInterpretation make_impossible_outside(const RankedInterpretation& r, ValuationSet keep) {
  std::vector<Rank> ranks = r.ranks();
  for (size_t v = 0; v < ranks.size(); ++v)
    if (!(keep >> v & 1)) ranks[v] = kInfiniteRank;
  return RankedInterpretation(r.vocab(), std::move(ranks));  // checked ctor
}

namespace {

ValuationSet satisfying_set(const RankedInterpretation& r, const KnowledgeBase& kb) {
  ValuationSet s = r.possible_set();
  for (const Formula& f : kb) s &= extension(r, f);
  return s;
}

}  // namespace

LmResult lm_minimal(const KnowledgeBase& kb, const std::optional<Vocabulary>& vocab_opt) {
  Vocabulary vocab = vocab_opt ? *vocab_opt : Vocabulary::from_atoms(kb_atoms(kb));

  RankedInterpretation current = RankedInterpretation::uniform_zero(vocab);
  ValuationSet prev_s = 0;
  ValuationSet s = satisfying_set(current, kb);
  LmTrace trace;
  int i = 1;
  trace.entries.push_back({i, current, s});

  while (s != prev_s) {
    // Invariant: the satisfying sets grow monotonically.
    if ((prev_s & ~s) != 0)
      throw std::logic_error("lm_minimal: satisfying set shrank between iterations");
    current = bump_outside(current, s);
    if (!current.convex())
      throw std::logic_error("lm_minimal: non-convex intermediate interpretation");
    // Invariant: freezing the current satisfying set must already give a
    // model of kb.
    if (!is_model(make_impossible_outside(current, s), kb))
      throw std::logic_error("lm_minimal: projected candidate is not a model");
    prev_s = s;
    s = satisfying_set(current, kb);
    ++i;
    trace.entries.push_back({i, current, s});
  }

  RankedInterpretation result = make_impossible_outside(current, s);
  if (!is_model(result, kb)) throw std::logic_error("lm_minimal: result is not a model");
  return {std::move(result), std::move(trace)};
}

namespace {

void require_same_vocab(const RankedInterpretation& a, const RankedInterpretation& b) {
  if (a.vocab() != b.vocab())
    throw VocabularyMismatchError("interpretations over different vocabularies");
}

}  // namespace

bool lm_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2) {
  require_same_vocab(r1, r2);
  std::vector<ValuationSet> l1 = r1.finite_layers();
  std::vector<ValuationSet> l2 = r2.finite_layers();
  size_t n = std::max(l1.size(), l2.size());
  for (size_t j = 0; j < n; ++j) {
    ValuationSet a = j < l1.size() ? l1[j] : 0;
    ValuationSet b = j < l2.size() ? l2[j] : 0;
    if (a != b) return (b & ~a) == 0;  // first difference decides: need a ⊇ b
  }
  return true;  // identical layer lists (hence identical infinite layers)
}

bool lm_strictly_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2) {
  return lm_preferred(r1, r2) && r1 != r2;
}

namespace {

// Compact the distinct finite ranks in `best` into consecutive layers.
RankedInterpretation compact_ranks(const Vocabulary& vocab, const std::vector<Rank>& best) {
  std::map<Rank, Rank> compaction;
  for (Rank r : best)
    if (r != kInfiniteRank) compaction[r] = 0;
  Rank next = 0;
  for (auto& [from, to] : compaction) to = next++;

  std::vector<Rank> ranks(best.size(), kInfiniteRank);
  for (size_t v = 0; v < best.size(); ++v)
    if (best[v] != kInfiniteRank) ranks[v] = compaction[best[v]];
  return RankedInterpretation(vocab, std::move(ranks));  // checked: compaction is convex
}

}  // namespace

RankedInterpretation ranked_union(std::span<const RankedInterpretation> rs) {
  if (rs.empty()) throw EmptyInputError("ranked_union of no interpretations");
  const Vocabulary& vocab = rs.front().vocab();
  for (const RankedInterpretation& r : rs) require_same_vocab(rs.front(), r);

  size_t n = vocab.universe_size();
  std::vector<Rank> best(n, kInfiniteRank);
  for (const RankedInterpretation& r : rs)
    for (size_t v = 0; v < n; ++v) best[v] = std::min(best[v], r.rank(v));
  return compact_ranks(vocab, best);
}

RankedInterpretation union_of_all_models(const KnowledgeBase& kb, const Vocabulary& vocab,
                                         const EnumerationLimits& limits) {
  size_t n = vocab.universe_size();
  std::vector<Rank> best(n, kInfiniteRank);
  for_each_model(kb, vocab, [&](const RankedInterpretation& r) {
    for (size_t v = 0; v < n; ++v) best[v] = std::min(best[v], r.rank(v));
    return true;
  }, limits);
  // The everywhere-infinite interpretation is always a model, so the stream
  // is never empty and `best` is well defined even for unsatisfiable bases.
  return compact_ranks(vocab, best);
}

RankedInterpretation rational_closure_model(const KnowledgeBase& kb,
                                            const std::optional<Vocabulary>& vocab) {
  if (!is_conditional_kb(kb))
    throw NotConditionalKbError(
        "rational closure needs every sentence shaped *a -> b with a, b propositional");
  return lm_minimal(kb, vocab).model;
}

bool lm_entails(const KnowledgeBase& kb, const Formula& f,
                const std::optional<Vocabulary>& vocab) {
  return satisfies(lm_minimal(kb, vocab).model, f);
}

}  // namespace ptl
