#include "ptl/pt_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "ptl/errors.hpp"

namespace ptl {

bool pt_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2) {
  if (r1.vocab() != r2.vocab())
    throw VocabularyMismatchError("interpretations over different vocabularies");
  for (size_t v = 0; v < r1.ranks().size(); ++v)
    if (r1.rank(v) > r2.rank(v)) return false;  // infinity is the sentinel maximum
  return true;
}

bool pt_strictly_preferred(const RankedInterpretation& r1, const RankedInterpretation& r2) {
  return pt_preferred(r1, r2) && r1.ranks() != r2.ranks();
}

namespace {

// Compact store for large model families: one byte per rank (finite ranks
// stay below the universe size, far under the 0xff infinity sentinel).
constexpr std::uint8_t kInf8 = 0xff;

struct CompactModels {
  size_t stride = 0;
  std::vector<std::uint8_t> ranks;
  std::vector<std::uint64_t> order;  // enumeration index per model

  size_t size() const { return order.size(); }
  const std::uint8_t* row(size_t i) const { return ranks.data() + i * stride; }
};

CompactModels collect_compact(const KnowledgeBase& kb, const Vocabulary& vocab,
                              const EnumerationLimits& limits) {
  CompactModels out;
  out.stride = vocab.universe_size();
  std::uint64_t index = 0;
  enumerate_interpretations(
      vocab,
      [&](const RankedInterpretation& r) {
        if (is_model(r, kb)) {
          for (Rank rank : r.ranks())
            out.ranks.push_back(rank == kInfiniteRank ? kInf8
                                                      : static_cast<std::uint8_t>(rank));
          out.order.push_back(index);
        }
        ++index;
        return true;
      },
      limits);
  return out;
}

bool dominates(const std::uint8_t* a, const std::uint8_t* b, size_t n) {
  bool strict = false;
  for (size_t v = 0; v < n; ++v) {
    if (a[v] > b[v]) return false;
    if (a[v] < b[v]) strict = true;
  }
  return strict;
}

RankedInterpretation materialize(const Vocabulary& vocab, const std::uint8_t* row) {
  std::vector<Rank> ranks(vocab.universe_size());
  for (size_t v = 0; v < ranks.size(); ++v)
    ranks[v] = row[v] == kInf8 ? kInfiniteRank : row[v];
  return RankedInterpretation(vocab, std::move(ranks));
}

}  // namespace

std::vector<RankedInterpretation> pt_minimal_models(const KnowledgeBase& kb,
                                                    const Vocabulary& vocab,
                                                    const EnumerationLimits& limits) {
  CompactModels models = collect_compact(kb, vocab, limits);
  size_t n = models.size();
  size_t stride = models.stride;

  // A model can only be dominated by one with a smaller rank total (infinity
  // mapped above any finite total), so after sorting by total each candidate
  // needs testing against the accepted minima only.
  auto total = [&](size_t i) {
    const std::uint8_t* r = models.row(i);
    std::uint64_t t = 0;
    for (size_t v = 0; v < stride; ++v)
      t += r[v] == kInf8 ? std::uint64_t{1} << 32 : r[v];
    return t;
  };
  std::vector<size_t> by_total(n);
  std::iota(by_total.begin(), by_total.end(), size_t{0});
  std::vector<std::uint64_t> totals(n);
  for (size_t i = 0; i < n; ++i) totals[i] = total(i);
  std::stable_sort(by_total.begin(), by_total.end(),
                   [&](size_t a, size_t b) { return totals[a] < totals[b]; });

  std::vector<size_t> minima;
  for (size_t i : by_total) {
    bool dominated = false;
    for (size_t m : minima)
      if (dominates(models.row(m), models.row(i), stride)) {
        dominated = true;
        break;
      }
    if (!dominated) minima.push_back(i);
  }

  std::sort(minima.begin(), minima.end(), [&](size_t a, size_t b) {
    return models.order[a] < models.order[b];
  });
  std::vector<RankedInterpretation> out;
  out.reserve(minima.size());
  for (size_t m : minima) out.push_back(materialize(vocab, models.row(m)));
  return out;
}

bool pt_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                const EnumerationLimits& limits) {
  std::vector<RankedInterpretation> minima = pt_minimal_models(kb, vocab, limits);
  return std::all_of(minima.begin(), minima.end(),
                     [&](const RankedInterpretation& r) { return satisfies(r, f); });
}

std::vector<RankedInterpretation> ptprime_minimal_models(const KnowledgeBase& kb,
                                                         const Vocabulary& vocab,
                                                         const EnumerationLimits& limits) {
  std::vector<RankedInterpretation> minima = pt_minimal_models(kb, vocab, limits);
  std::vector<RankedInterpretation> out;
  for (const RankedInterpretation& r : minima) {
    bool beaten = std::any_of(minima.begin(), minima.end(), [&](const RankedInterpretation& o) {
      ValuationSet a = r.possible_set(), b = o.possible_set();
      return a != b && (a & ~b) == 0;  // o's possible set strictly contains r's
    });
    if (!beaten) out.push_back(r);
  }
  return out;
}

bool ptprime_entails(const KnowledgeBase& kb, const Formula& f, const Vocabulary& vocab,
                     const EnumerationLimits& limits) {
  std::vector<RankedInterpretation> maxima = ptprime_minimal_models(kb, vocab, limits);
  return std::all_of(maxima.begin(), maxima.end(),
                     [&](const RankedInterpretation& r) { return satisfies(r, f); });
}

}  // namespace ptl
