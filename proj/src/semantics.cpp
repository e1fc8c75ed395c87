#include "ptl/semantics.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <ostream>

#include "ptl/errors.hpp"

namespace ptl {

Vocabulary::Vocabulary(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("vocabulary must contain at least one atom");
  if (names.size() > kMaxAtoms)
    throw VocabularyTooLargeError("vocabulary has " + std::to_string(names.size()) +
                                  " atoms; the engine supports at most " +
                                  std::to_string(kMaxAtoms));
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw std::invalid_argument("duplicate atom in vocabulary: '" + names[i] + "'");

  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
  size_t k = names_->size();
  atom_masks_.assign(k, 0);
  for (ValuationIndex v = 0; v < universe_size(); ++v)
    for (size_t i = 0; i < k; ++i)
      if (truth(v, i)) atom_masks_[i] |= ValuationSet{1} << v;
}

Vocabulary Vocabulary::from_atoms(const std::set<std::string>& atoms) {
  return Vocabulary(std::vector<std::string>(atoms.begin(), atoms.end()));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view atom) const {
  for (size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == atom) return i;
  return std::nullopt;
}

std::vector<std::string> Vocabulary::literals(ValuationIndex v) const {
  std::vector<std::string> out;
  out.reserve(size());
  for (size_t i = 0; i < size(); ++i)
    out.push_back(truth(v, i) ? name(i) : "!" + name(i));
  return out;
}

std::string Vocabulary::valuation_string(ValuationIndex v) const {
  std::string out = "{";
  for (size_t i = 0; i < size(); ++i) {
    if (i) out += ", ";
    if (!truth(v, i)) out += '!';
    out += name(i);
  }
  return out + "}";
}

std::string Vocabulary::set_string(ValuationSet s) const {
  std::string out = "{";
  bool first = true;
  for (ValuationIndex v = 0; v < universe_size(); ++v) {
    if (!(s >> v & 1)) continue;
    if (!first) out += ", ";
    first = false;
    out += valuation_string(v);
  }
  return out + "}";
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

namespace {

ValuationSet possible_of(const std::vector<Rank>& ranks) {
  ValuationSet s = 0;
  for (size_t v = 0; v < ranks.size(); ++v)
    if (ranks[v] != kInfiniteRank) s |= ValuationSet{1} << v;
  return s;
}

bool ranks_convex(const std::vector<Rank>& ranks) {
  Rank max_finite = 0;
  bool any_finite = false;
  for (Rank r : ranks)
    if (r != kInfiniteRank) {
      any_finite = true;
      max_finite = std::max(max_finite, r);
    }
  if (!any_finite) return true;
  std::vector<bool> seen(max_finite + 1, false);
  for (Rank r : ranks)
    if (r != kInfiniteRank) seen[r] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

RankedInterpretation::RankedInterpretation(Vocabulary vocab, std::vector<Rank> ranks)
    : vocab_(std::move(vocab)), ranks_(std::move(ranks)) {
  if (ranks_.size() != vocab_.universe_size())
    throw std::invalid_argument("rank vector does not cover the universe");
  if (!ranks_convex(ranks_))
    throw ConvexityViolationError("rank function has an empty layer below an occupied one");
  possible_ = possible_of(ranks_);
}

RankedInterpretation::RankedInterpretation(Unchecked, Vocabulary vocab, std::vector<Rank> ranks)
    : vocab_(std::move(vocab)), ranks_(std::move(ranks)) {
  possible_ = possible_of(ranks_);
}

RankedInterpretation RankedInterpretation::uniform_zero(const Vocabulary& vocab) {
  return RankedInterpretation(vocab, std::vector<Rank>(vocab.universe_size(), 0));
}

RankedInterpretation RankedInterpretation::all_impossible(const Vocabulary& vocab) {
  return RankedInterpretation(vocab,
                              std::vector<Rank>(vocab.universe_size(), kInfiniteRank));
}

RankedInterpretation RankedInterpretation::from_layers(
    const Vocabulary& vocab, const std::vector<std::vector<ValuationIndex>>& layers) {
  std::vector<Rank> ranks(vocab.universe_size(), kInfiniteRank);
  for (size_t i = 0; i < layers.size(); ++i)
    for (ValuationIndex v : layers[i]) {
      if (v >= vocab.universe_size())
        throw std::invalid_argument("valuation index out of range");
      if (ranks[v] != kInfiniteRank)
        throw std::invalid_argument("valuation listed in two layers");
      ranks[v] = static_cast<Rank>(i);
    }
  return RankedInterpretation(vocab, std::move(ranks));
}

bool RankedInterpretation::convex() const { return ranks_convex(ranks_); }

std::vector<ValuationSet> RankedInterpretation::finite_layers() const {
  Rank max_finite = 0;
  bool any = false;
  for (Rank r : ranks_)
    if (r != kInfiniteRank) {
      any = true;
      max_finite = std::max(max_finite, r);
    }
  if (!any) return {};
  std::vector<ValuationSet> layers(max_finite + 1, 0);
  for (size_t v = 0; v < ranks_.size(); ++v)
    if (ranks_[v] != kInfiniteRank) layers[ranks_[v]] |= ValuationSet{1} << v;
  return layers;
}

ValuationSet RankedInterpretation::infinite_layer() const {
  return ~possible_ & vocab_.universe_mask();
}

nlohmann::json RankedInterpretation::to_json() const {
  nlohmann::json j;
  j["vocab"] = vocab_.names();
  nlohmann::json layers = nlohmann::json::array();
  for (ValuationSet layer : finite_layers()) {
    nlohmann::json row = nlohmann::json::array();
    for (ValuationIndex v = 0; v < vocab_.universe_size(); ++v)
      if (layer >> v & 1) row.push_back(vocab_.literals(v));
    layers.push_back(std::move(row));
  }
  j["layers"] = std::move(layers);
  nlohmann::json imp = nlohmann::json::array();
  ValuationSet inf = infinite_layer();
  for (ValuationIndex v = 0; v < vocab_.universe_size(); ++v)
    if (inf >> v & 1) imp.push_back(vocab_.literals(v));
  j["impossible"] = std::move(imp);
  return j;
}

namespace {

// Shared evaluator for ranked and classical satisfaction. `ranks` is null in
// the classical case, which also makes Typ illegal.
ValuationSet eval(const Vocabulary& vocab, const std::vector<Rank>* ranks,
                  ValuationSet domain, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      auto i = vocab.index_of(f.atom_name());
      if (!i)
        throw UnknownAtomError("atom '" + f.atom_name() + "' is not in the vocabulary");
      return vocab.atom_mask(*i) & domain;
    }
    case FormulaKind::Top:
      return domain;
    case FormulaKind::Bot:
      return 0;
    case FormulaKind::Not:
      return domain & ~eval(vocab, ranks, domain, f.child());
    case FormulaKind::And:
      return eval(vocab, ranks, domain, f.lhs()) & eval(vocab, ranks, domain, f.rhs());
    case FormulaKind::Or:
      return eval(vocab, ranks, domain, f.lhs()) | eval(vocab, ranks, domain, f.rhs());
    case FormulaKind::Implies:
      return (domain & ~eval(vocab, ranks, domain, f.lhs())) |
             eval(vocab, ranks, domain, f.rhs());
    case FormulaKind::Iff: {
      ValuationSet a = eval(vocab, ranks, domain, f.lhs());
      ValuationSet b = eval(vocab, ranks, domain, f.rhs());
      return domain & ~(a ^ b);
    }
    case FormulaKind::Typ: {
      if (!ranks)
        throw NotPropositionalError("typicality operator in a classical context");
      ValuationSet m = eval(vocab, ranks, domain, f.child());
      if (!m) return 0;
      Rank best = kInfiniteRank;
      for (ValuationSet rest = m; rest;) {
        ValuationIndex v = static_cast<ValuationIndex>(std::countr_zero(rest));
        rest &= rest - 1;
        best = std::min(best, (*ranks)[v]);
      }
      ValuationSet out = 0;
      for (ValuationSet rest = m; rest;) {
        ValuationIndex v = static_cast<ValuationIndex>(std::countr_zero(rest));
        rest &= rest - 1;
        if ((*ranks)[v] == best) out |= ValuationSet{1} << v;
      }
      return out;
    }
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

ValuationSet extension(const RankedInterpretation& r, const Formula& f) {
  return eval(r.vocab(), &r.ranks(), r.possible_set(), f);
}

bool satisfies(const RankedInterpretation& r, const Formula& f) {
  return extension(r, f) == r.possible_set();
}

bool is_model(const RankedInterpretation& r, const KnowledgeBase& kb) {
  return std::all_of(kb.begin(), kb.end(),
                     [&](const Formula& f) { return satisfies(r, f); });
}

bool satisfies_conditional(const RankedInterpretation& r, const Formula& antecedent,
                           const Formula& consequent) {
  ValuationSet ants = extension(r, typ(antecedent));
  return (ants & ~extension(r, consequent)) == 0;
}

bool classically_satisfies(const Vocabulary& vocab, ValuationIndex v, const Formula& f) {
  return (classical_models(vocab, f) >> v) & 1;
}

ValuationSet classical_models(const Vocabulary& vocab, const Formula& f) {
  return eval(vocab, nullptr, vocab.universe_mask(), f);
}

void print_layer_table(std::ostream& os, const RankedInterpretation& r) {
  std::vector<ValuationSet> layers = r.finite_layers();
  ValuationSet inf = r.infinite_layer();
  if (inf) os << "inf | " << r.vocab().set_string(inf) << "\n";
  for (size_t i = layers.size(); i-- > 0;)
    os << std::setw(3) << i << " | " << r.vocab().set_string(layers[i]) << "\n";
  if (!inf && layers.empty()) os << "(empty universe: no layers)\n";
}

}  // namespace ptl
