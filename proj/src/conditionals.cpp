#include "ptl/conditionals.hpp"

#include <algorithm>
#include <bit>

#include "ptl/errors.hpp"

namespace ptl {

ConditionalSet::ConditionalSet(const Vocabulary& vocab)
    : vocab_(vocab), num_canonical_(size_t{1} << vocab.universe_size()) {
  if (vocab.universe_size() > 8)
    throw VocabularyTooLargeError("conditional sets are limited to 3 atoms (8 valuations)");
  bits_.assign((num_canonical_ * num_canonical_ + 63) / 64, 0);
}

void ConditionalSet::insert(CanonicalFormula a, CanonicalFormula b) {
  size_t i = bit_index(a, b);
  bits_[i / 64] |= std::uint64_t{1} << (i % 64);
}

bool ConditionalSet::contains(CanonicalFormula a, CanonicalFormula b) const {
  size_t i = bit_index(a, b);
  return bits_[i / 64] >> (i % 64) & 1;
}

std::uint64_t ConditionalSet::size() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : bits_) n += std::popcount(w);
  return n;
}

bool ConditionalSet::operator==(const ConditionalSet& other) const {
  return vocab_ == other.vocab_ && bits_ == other.bits_;
}

Formula embed(const Formula& a, const Formula& b) {
  if (!a.is_propositional() || !b.is_propositional())
    throw NotPropositionalError("conditionals embed propositional formulas only");
  return implies(typ(a), b);
}

ConditionalSet induced_conditional(const std::function<bool(const Formula&)>& in_theory,
                                   const Vocabulary& vocab) {
  ConditionalSet out(vocab);
  size_t n = out.num_canonical();
  for (CanonicalFormula a = 0; a < n; ++a) {
    Formula fa = formula_from_canonical(a, vocab);
    for (CanonicalFormula b = 0; b < n; ++b)
      if (in_theory(embed(fa, formula_from_canonical(b, vocab)))) out.insert(a, b);
  }
  return out;
}

ConditionalSet conditional_of_profile(const TheoryProfile& profile) {
  ConditionalSet out(profile.vocab);
  size_t n = out.num_canonical();
  for (CanonicalFormula a = 0; a < n; ++a)
    for (CanonicalFormula b = 0; b < n; ++b)
      if (profile.entails_embedding(a, b)) out.insert(a, b);
  return out;
}

ConditionalSet conditional_from_interpretation(const RankedInterpretation& r) {
  RankedInterpretation rs[] = {r};
  return conditional_of_profile(profile_of_models(r.vocab(), rs));
}

const char* klm_property_name(KlmProperty p) {
  switch (p) {
    case KlmProperty::Ref: return "Ref";
    case KlmProperty::LLE: return "LLE";
    case KlmProperty::And: return "And";
    case KlmProperty::Or: return "Or";
    case KlmProperty::RW: return "RW";
    case KlmProperty::CM: return "CM";
    case KlmProperty::RM: return "RM";
  }
  return "?";
}

bool KlmReport::preferential() const {
  return std::all_of(results.begin(), results.end(), [](const KlmPropertyResult& r) {
    return r.property == KlmProperty::RM || r.status != KlmPropertyResult::Status::Fail;
  });
}

bool KlmReport::rational() const {
  return std::all_of(results.begin(), results.end(), [](const KlmPropertyResult& r) {
    return r.status != KlmPropertyResult::Status::Fail;
  });
}

const KlmPropertyResult& KlmReport::result(KlmProperty p) const {
  for (const KlmPropertyResult& r : results)
    if (r.property == p) return r;
  throw std::logic_error("property missing from report");
}

nlohmann::json KlmReport::to_json(const Vocabulary& vocab) const {
  auto canonical_json = [&](CanonicalFormula c) {
    nlohmann::json vals = nlohmann::json::array();
    for (ValuationIndex v = 0; v < vocab.universe_size(); ++v)
      if (c >> v & 1) vals.push_back(vocab.literals(v));
    return vals;
  };
  nlohmann::json j = nlohmann::json::array();
  for (const KlmPropertyResult& r : results) {
    nlohmann::json row;
    row["property"] = klm_property_name(r.property);
    row["status"] = r.status == KlmPropertyResult::Status::Pass         ? "pass"
                    : r.status == KlmPropertyResult::Status::Structural ? "structural"
                                                                        : "fail";
    if (r.witness) {
      nlohmann::json w;
      w["alpha"] = canonical_json(r.witness->alpha);
      if (r.witness->beta) w["beta"] = canonical_json(*r.witness->beta);
      if (r.witness->gamma) w["gamma"] = canonical_json(*r.witness->gamma);
      row["witness"] = std::move(w);
    }
    j.push_back(std::move(row));
  }
  return j;
}

namespace {

using Status = KlmPropertyResult::Status;

KlmPropertyResult pass(KlmProperty p) { return {p, Status::Pass, std::nullopt}; }

KlmPropertyResult fail1(KlmProperty p, CanonicalFormula a) {
  return {p, Status::Fail, KlmWitness{a, std::nullopt, std::nullopt}};
}

KlmPropertyResult fail3(KlmProperty p, CanonicalFormula a, CanonicalFormula b,
                        CanonicalFormula g) {
  return {p, Status::Fail, KlmWitness{a, b, g}};
}

}  // namespace

KlmReport check_klm_properties(const ConditionalSet& c) {
  const size_t n = c.num_canonical();
  const CanonicalFormula full = static_cast<CanonicalFormula>(n - 1);
  KlmReport report;

  // Ref: a |~ a.
  {
    KlmPropertyResult r = pass(KlmProperty::Ref);
    for (CanonicalFormula a = 0; a < n; ++a)
      if (!c.contains(a, a)) {
        r = fail1(KlmProperty::Ref, a);
        break;
      }
    report.results.push_back(r);
  }

  // LLE: equivalent antecedents are identical canonical objects.
  report.results.push_back({KlmProperty::LLE, Status::Structural, std::nullopt});

  // And: a |~ b, a |~ g  =>  a |~ b ∧ g.
  {
    KlmPropertyResult r = pass(KlmProperty::And);
    for (CanonicalFormula a = 0; a < n && r.status == Status::Pass; ++a)
      for (CanonicalFormula b = 0; b < n && r.status == Status::Pass; ++b) {
        if (!c.contains(a, b)) continue;
        for (CanonicalFormula g = 0; g < n; ++g)
          if (c.contains(a, g) && !c.contains(a, b & g)) {
            r = fail3(KlmProperty::And, a, b, g);
            break;
          }
      }
    report.results.push_back(r);
  }

  // Or: a |~ g, b |~ g  =>  a ∨ b |~ g.
  {
    KlmPropertyResult r = pass(KlmProperty::Or);
    for (CanonicalFormula a = 0; a < n && r.status == Status::Pass; ++a)
      for (CanonicalFormula b = 0; b < n && r.status == Status::Pass; ++b)
        for (CanonicalFormula g = 0; g < n; ++g)
          if (c.contains(a, g) && c.contains(b, g) && !c.contains(a | b, g)) {
            r = fail3(KlmProperty::Or, a, b, g);
            break;
          }
    report.results.push_back(r);
  }

  // RW: a |~ b, b ⊨ g  =>  a |~ g.
  {
    KlmPropertyResult r = pass(KlmProperty::RW);
    for (CanonicalFormula a = 0; a < n && r.status == Status::Pass; ++a)
      for (CanonicalFormula b = 0; b < n && r.status == Status::Pass; ++b) {
        if (!c.contains(a, b)) continue;
        for (CanonicalFormula g = 0; g < n; ++g)
          if ((b & ~g) == 0 && !c.contains(a, g)) {
            r = fail3(KlmProperty::RW, a, b, g);
            break;
          }
      }
    report.results.push_back(r);
  }

  // CM: a |~ b, a |~ g  =>  a ∧ b |~ g.
  {
    KlmPropertyResult r = pass(KlmProperty::CM);
    for (CanonicalFormula a = 0; a < n && r.status == Status::Pass; ++a)
      for (CanonicalFormula b = 0; b < n && r.status == Status::Pass; ++b) {
        if (!c.contains(a, b)) continue;
        for (CanonicalFormula g = 0; g < n; ++g)
          if (c.contains(a, g) && !c.contains(a & b, g)) {
            r = fail3(KlmProperty::CM, a, b, g);
            break;
          }
      }
    report.results.push_back(r);
  }

  // RM: a |~ g, a |/~ ¬b  =>  a ∧ b |~ g.
  {
    KlmPropertyResult r = pass(KlmProperty::RM);
    for (CanonicalFormula a = 0; a < n && r.status == Status::Pass; ++a)
      for (CanonicalFormula b = 0; b < n && r.status == Status::Pass; ++b) {
        if (c.contains(a, full & ~b)) continue;
        for (CanonicalFormula g = 0; g < n; ++g)
          if (c.contains(a, g) && !c.contains(a & b, g)) {
            r = fail3(KlmProperty::RM, a, b, g);
            break;
          }
      }
    report.results.push_back(r);
  }

  return report;
}

}  // namespace ptl
