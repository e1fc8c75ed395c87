#include "ptl/postulates.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "ptl/errors.hpp"
#include "ptl/lm_engine.hpp"
#include "ptl/parser.hpp"

namespace ptl {

const char* postulate_name(PostulateId id) {
  switch (id) {
    case PostulateId::P1: return "P1 Inclusion";
    case PostulateId::P2: return "P2 Cumulativity";
    case PostulateId::P3: return "P3 Ampliativeness";
    case PostulateId::P4: return "P4 Defeasibility";
    case PostulateId::P5: return "P5 Conditional Rationality";
    case PostulateId::P5Prime: return "P5' Single Model (conditional)";
    case PostulateId::P6: return "P6 Single Model";
    case PostulateId::P7: return "P7 Respects Rational Closure";
    case PostulateId::P8: return "P8 Strict Entailment";
    case PostulateId::P9: return "P9 Conditional Strict Entailment";
    case PostulateId::P9Prime: return "P9' Classical Entailment";
    case PostulateId::P10: return "P10 Typical Entailment";
  }
  return "?";
}

nlohmann::json PostulateVerdict::to_json() const {
  nlohmann::json j;
  j["postulate"] = postulate_name(id);
  j["mode"] = mode_name(mode);
  switch (status) {
    case Status::Holds: j["status"] = "holds-on-instances"; break;
    case Status::Fails: j["status"] = "fails"; break;
    case Status::NotConfirmed: j["status"] = "not-confirmed"; break;
  }
  if (witness) {
    nlohmann::json w;
    w["kb"] = nlohmann::json::array();
    for (const Formula& f : witness->kb) w["kb"].push_back(render(f));
    w["formulas"] = nlohmann::json::array();
    for (const Formula& f : witness->formulas) w["formulas"].push_back(render(f));
    if (!witness->note.empty()) w["note"] = witness->note;
    j["witness"] = std::move(w);
  }
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

namespace {

using Status = PostulateVerdict::Status;

// ---------------------------------------------------------------------------
// Caches.  Postulate checks hammer the same (kb, mode) combinations — the
// matrix alone asks a dozen questions about each fixture — so the deciding
// model families, their profiles, and the all-models union are memoized on a
// textual key.  Everything cached is a pure function of the key.

std::string cache_key(const KnowledgeBase& kb, const Vocabulary& vocab,
                      const EnumerationLimits& limits) {
  std::string key = std::to_string(limits.max_atoms);
  key += '|';
  for (const std::string& name : vocab.names()) {
    key += name;
    key += ',';
  }
  key += '|';
  for (const Formula& f : kb) {
    key += render(f);
    key += ';';
  }
  return key;
}

const std::vector<RankedInterpretation>& cached_deciding(const KnowledgeBase& kb,
                                                         EntailmentMode mode,
                                                         const Vocabulary& vocab,
                                                         const EnumerationLimits& limits) {
  thread_local std::map<std::string, std::vector<RankedInterpretation>> cache;
  std::string key = mode_name(mode) + ('|' + cache_key(kb, vocab, limits));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), deciding_models(kb, mode, vocab, limits)).first;
  return it->second;
}

const TheoryProfile& cached_profile(const KnowledgeBase& kb, EntailmentMode mode,
                                    const Vocabulary& vocab, const EnumerationLimits& limits) {
  thread_local std::map<std::string, TheoryProfile> cache;
  std::string key = mode_name(mode) + ('|' + cache_key(kb, vocab, limits));
  auto it = cache.find(key);
  if (it == cache.end()) {
    TheoryProfile p = mode == EntailmentMode::Ranked
                          ? profile_of_mode(kb, mode, vocab, limits)
                          : profile_of_models(vocab, cached_deciding(kb, mode, vocab, limits));
    it = cache.emplace(std::move(key), std::move(p)).first;
  }
  return it->second;
}

const RankedInterpretation& cached_union_of_models(const KnowledgeBase& kb,
                                                   const Vocabulary& vocab,
                                                   const EnumerationLimits& limits) {
  thread_local std::map<std::string, RankedInterpretation> cache;
  std::string key = cache_key(kb, vocab, limits);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), union_of_all_models(kb, vocab, limits)).first;
  return it->second;
}

// Membership of an arbitrary formula in the mode's theory.
bool theory_contains(const KnowledgeBase& kb, EntailmentMode mode, const Formula& f,
                     const Vocabulary& vocab, const EnumerationLimits& limits) {
  if (mode == EntailmentMode::Ranked) return ranked_entails(kb, f, vocab, limits);
  for (const RankedInterpretation& r : cached_deciding(kb, mode, vocab, limits))
    if (!satisfies(r, f)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Query spaces.  Either every canonical formula over the vocabulary, or the
// canonicalizations of the propositional subformulas appearing in the bases.

struct QuerySpace {
  std::vector<CanonicalFormula> props;
};

void collect_propositional_subformulas(const Formula& f, std::vector<Formula>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Top:
    case FormulaKind::Bot:
      break;
    case FormulaKind::Not:
    case FormulaKind::Typ:
      collect_propositional_subformulas(f.child(), out);
      break;
    default:
      collect_propositional_subformulas(f.lhs(), out);
      collect_propositional_subformulas(f.rhs(), out);
      break;
  }
  if (f.is_propositional()) out.push_back(f);
}

QuerySpace make_query_space(QueryDomain domain, const std::vector<KnowledgeBase>& kbs,
                            const Vocabulary& vocab) {
  QuerySpace space;
  if (domain == QueryDomain::Canonical) {
    space.props.reserve(std::size_t{1} << vocab.universe_size());
    for (CanonicalFormula m = 0;; ++m) {
      space.props.push_back(m);
      if (m == vocab.universe_mask()) break;
    }
  } else {
    std::vector<Formula> subs;
    subs.push_back(top());
    subs.push_back(bot());
    for (const KnowledgeBase& kb : kbs)
      for (const Formula& f : kb) collect_propositional_subformulas(f, subs);
    std::set<CanonicalFormula> seen;
    for (const Formula& s : subs) seen.insert(classical_models(vocab, s));
    space.props.assign(seen.begin(), seen.end());
  }
  return space;
}

// First query (propositional first, then embeddings in ascending antecedent/
// consequent order) on which two profiles disagree.
std::optional<Formula> first_disagreement(const TheoryProfile& a, const TheoryProfile& b,
                                          const QuerySpace& space, const Vocabulary& vocab) {
  for (CanonicalFormula q : space.props)
    if (a.entails_canonical(q) != b.entails_canonical(q))
      return formula_from_canonical(q, vocab);
  for (CanonicalFormula ant : space.props)
    for (CanonicalFormula con : space.props)
      if (a.entails_embedding(ant, con) != b.entails_embedding(ant, con))
        return embed(formula_from_canonical(ant, vocab), formula_from_canonical(con, vocab));
  return std::nullopt;
}

// Minimal-rank members of `s` under r, given r's finite layers.
ValuationSet min_set(const std::vector<ValuationSet>& finite_layers, ValuationSet s) {
  for (ValuationSet layer : finite_layers) {
    ValuationSet hit = layer & s;
    if (hit) return hit;
  }
  return 0;
}

// The single ranked interpretation forced by a profile's Min statistics, if
// one exists: its layers must be Min applied to the not-yet-ranked remainder
// of the possible set, and every canonical Min query must then agree.  On
// failure reports a canonical formula the statistics cannot be reconciled on.
std::optional<RankedInterpretation> single_model_candidate(const TheoryProfile& profile,
                                                           CanonicalFormula* bad_alpha) {
  const Vocabulary& vocab = profile.vocab;
  std::vector<std::vector<ValuationIndex>> layers;
  ValuationSet remaining = profile.possible_union;
  while (remaining) {
    ValuationSet level = profile.min_union[remaining];
    if (level == 0 || (level & ~remaining)) {
      if (bad_alpha) *bad_alpha = remaining;
      return std::nullopt;
    }
    std::vector<ValuationIndex> block;
    for (ValuationIndex v = 0; v < vocab.universe_size(); ++v)
      if (level >> v & 1) block.push_back(v);
    layers.push_back(std::move(block));
    remaining &= ~level;
  }
  RankedInterpretation candidate = RankedInterpretation::from_layers(vocab, layers);

  std::vector<ValuationSet> finite = candidate.finite_layers();
  for (CanonicalFormula alpha = 0;; ++alpha) {
    if (min_set(finite, alpha & candidate.possible_set()) != profile.min_union[alpha]) {
      if (bad_alpha) *bad_alpha = alpha;
      return std::nullopt;
    }
    if (alpha == vocab.universe_mask()) break;
  }
  return candidate;
}

PostulateVerdict holds(PostulateId id, EntailmentMode mode, std::string detail) {
  return {id, mode, Status::Holds, std::nullopt, std::move(detail)};
}

PostulateVerdict fails(PostulateId id, EntailmentMode mode, PostulateWitness witness,
                       std::string detail = {}) {
  return {id, mode, Status::Fails, std::move(witness), std::move(detail)};
}

std::string kb_string(const KnowledgeBase& kb) {
  std::string s = "{";
  for (size_t i = 0; i < kb.size(); ++i) {
    if (i) s += ", ";
    s += render(kb[i]);
  }
  s += "}";
  return s;
}

bool kb_subset(const KnowledgeBase& small, const KnowledgeBase& big) {
  for (const Formula& f : small)
    if (std::find(big.begin(), big.end(), f) == big.end()) return false;
  return true;
}

std::string instances_detail(std::size_t n, QueryDomain domain) {
  std::string s = "holds on the supplied instances (";
  s += std::to_string(n);
  s += n == 1 ? " base" : " bases";
  s += domain == QueryDomain::Canonical ? ", canonical query domain)" : ", subformula query domain)";
  return s;
}

// --------------------------------------------------------------------------
// Individual postulate checkers.  Each receives bases already validated to
// share `vocab`.

PostulateVerdict check_p1(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                          const Vocabulary& vocab, const PostulateOptions& options) {
  for (const KnowledgeBase& kb : kbs)
    for (const Formula& f : kb)
      if (!theory_contains(kb, mode, f, vocab, options.limits))
        return fails(PostulateId::P1, mode, {kb, {f}, "base member missing from the theory"});
  return holds(PostulateId::P1, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_p2(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                          const Vocabulary& vocab, const PostulateOptions& options) {
  QuerySpace space = make_query_space(options.domain, kbs, vocab);
  std::size_t tried = 0;
  for (const KnowledgeBase& kb : kbs) {
    const TheoryProfile& base = cached_profile(kb, mode, vocab, options.limits);

    std::vector<KnowledgeBase> extensions = options.cumulativity_extensions;
    // Automatic choice: extend with one derived consequence, the strongest
    // entailed statement about the most typical situations.
    KnowledgeBase automatic = kb;
    automatic.push_back(
        embed(top(), formula_from_canonical(base.min_union[vocab.universe_mask()], vocab)));
    extensions.push_back(std::move(automatic));

    for (const KnowledgeBase& ext : extensions) {
      if (!kb_subset(kb, ext)) continue;
      bool within_theory = true;
      for (const Formula& f : ext)
        if (!theory_contains(kb, mode, f, vocab, options.limits)) {
          within_theory = false;
          break;
        }
      if (!within_theory) continue;  // hypothesis K ⊆ K' ⊆ Cn(K) unmet
      ++tried;
      const TheoryProfile& extended = cached_profile(ext, mode, vocab, options.limits);
      if (std::optional<Formula> q = first_disagreement(base, extended, space, vocab))
        return fails(PostulateId::P2, mode,
                     {kb, {*q}, "theories of K and K' = " + kb_string(ext) + " disagree here"});
    }
  }
  return holds(PostulateId::P2, mode,
               instances_detail(kbs.size(), options.domain) + "; " + std::to_string(tried) +
                   " admissible extension(s) tried");
}

PostulateVerdict check_p3(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                          const Vocabulary& vocab, const PostulateOptions& options) {
  QuerySpace space = make_query_space(options.domain, kbs, vocab);
  for (const KnowledgeBase& kb : kbs) {
    const TheoryProfile& ranked = cached_profile(kb, EntailmentMode::Ranked, vocab, options.limits);
    const TheoryProfile& ours = cached_profile(kb, mode, vocab, options.limits);
    for (CanonicalFormula q : space.props)
      if (ranked.entails_canonical(q) && !ours.entails_canonical(q))
        return fails(PostulateId::P3, mode,
                     {kb, {formula_from_canonical(q, vocab)}, "ranked consequence lost"});
    for (CanonicalFormula ant : space.props)
      for (CanonicalFormula con : space.props)
        if (ranked.entails_embedding(ant, con) && !ours.entails_embedding(ant, con))
          return fails(PostulateId::P3, mode,
                       {kb,
                        {embed(formula_from_canonical(ant, vocab),
                               formula_from_canonical(con, vocab))},
                        "ranked consequence lost"});
  }
  return holds(PostulateId::P3, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_p4(EntailmentMode mode, const Vocabulary& vocab,
                          const PostulateOptions& options) {
  std::vector<std::pair<KnowledgeBase, KnowledgeBase>> pairs = options.defeasibility_pairs;
  {
    // Classic exception-overriding defaults: told that typical b are f and
    // that p are b, learning that typical p are not f should withdraw
    // conclusions.  Once as a mixed base, once as a pure conditional base.
    KnowledgeBase mixed = {parse("p -> b"), parse("*b -> f")};
    KnowledgeBase mixed_ext = mixed;
    mixed_ext.push_back(parse("*p -> !f"));
    pairs.emplace_back(std::move(mixed), std::move(mixed_ext));

    KnowledgeBase cond = {parse("*b -> f"), parse("*p -> b")};
    KnowledgeBase cond_ext = cond;
    cond_ext.push_back(parse("*p -> !f"));
    pairs.emplace_back(std::move(cond), std::move(cond_ext));
  }

  for (const auto& [kb, ext] : pairs) {
    if (!kb_subset(kb, ext)) continue;
    // Pairs are self-contained: use the supplied vocabulary when it covers
    // them, otherwise the pair's own atoms.
    std::set<std::string> atoms = kb_atoms(ext);
    for (const std::string& a : kb_atoms(kb)) atoms.insert(a);
    bool covered = true;
    for (const std::string& a : atoms)
      if (!vocab.index_of(a)) covered = false;
    Vocabulary pair_vocab = covered ? vocab : Vocabulary::from_atoms(atoms);

    QuerySpace space = make_query_space(options.domain, {kb, ext}, pair_vocab);
    const TheoryProfile& before = cached_profile(kb, mode, pair_vocab, options.limits);
    const TheoryProfile& after = cached_profile(ext, mode, pair_vocab, options.limits);
    for (CanonicalFormula q : space.props)
      if (before.entails_canonical(q) && !after.entails_canonical(q))
        return {PostulateId::P4, mode, Status::Holds,
                PostulateWitness{kb,
                                 {formula_from_canonical(q, pair_vocab)},
                                 "withdrawn after extending with " + kb_string(ext)},
                "confirming instance found"};
    for (CanonicalFormula ant : space.props)
      for (CanonicalFormula con : space.props)
        if (before.entails_embedding(ant, con) && !after.entails_embedding(ant, con))
          return {PostulateId::P4, mode, Status::Holds,
                  PostulateWitness{kb,
                                   {embed(formula_from_canonical(ant, pair_vocab),
                                          formula_from_canonical(con, pair_vocab))},
                                   "withdrawn after extending with " + kb_string(ext)},
                  "confirming instance found"};
  }
  return {PostulateId::P4, mode, Status::NotConfirmed, std::nullopt,
          "existential claim: no confirming pair among " + std::to_string(pairs.size()) +
              " candidate(s); this refutes nothing"};
}

PostulateVerdict check_p5(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                          const Vocabulary& vocab, const PostulateOptions& options) {
  for (const KnowledgeBase& kb : kbs) {
    const TheoryProfile& profile = cached_profile(kb, mode, vocab, options.limits);
    KlmReport report = check_klm_properties(conditional_of_profile(profile));
    if (report.rational()) continue;
    for (const KlmPropertyResult& res : report.results) {
      if (res.status != KlmPropertyResult::Status::Fail) continue;
      std::vector<Formula> formulas;
      formulas.push_back(formula_from_canonical(res.witness->alpha, vocab));
      if (res.witness->beta) formulas.push_back(formula_from_canonical(*res.witness->beta, vocab));
      if (res.witness->gamma)
        formulas.push_back(formula_from_canonical(*res.witness->gamma, vocab));
      return fails(PostulateId::P5, mode,
                   {kb, std::move(formulas),
                    std::string("induced conditional violates ") + klm_property_name(res.property)},
                   "witness formulas are (alpha, beta, gamma) of the violated rule");
    }
  }
  return holds(PostulateId::P5, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_single_model(PostulateId id, EntailmentMode mode,
                                    const std::vector<KnowledgeBase>& kbs,
                                    const Vocabulary& vocab, const PostulateOptions& options) {
  for (const KnowledgeBase& kb : kbs) {
    const TheoryProfile& profile = cached_profile(kb, mode, vocab, options.limits);
    CanonicalFormula bad = 0;
    std::optional<RankedInterpretation> candidate = single_model_candidate(profile, &bad);
    if (!candidate)
      return fails(id, mode,
                   {kb,
                    {embed(formula_from_canonical(bad, vocab),
                           formula_from_canonical(profile.min_union[bad], vocab))},
                    "no single interpretation reproduces the theory's typicality on this "
                    "antecedent"},
                   "Min statistics admit no generating interpretation");
    if (id == PostulateId::P6 && candidate->possible_set() != profile.possible_union)
      return fails(id, mode,
                   {kb,
                    {formula_from_canonical(profile.possible_union, vocab)},
                    "candidate interpretation disagrees on the propositional part"});
  }
  std::string detail = instances_detail(kbs.size(), options.domain);
  detail += id == PostulateId::P6
                ? "; checked over the canonical propositional and typicality-implication fragment"
                : "; checked over the canonical typicality-implication fragment";
  return holds(id, mode, std::move(detail));
}

PostulateVerdict check_p7(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                          const Vocabulary& vocab, const PostulateOptions& options) {
  for (const KnowledgeBase& kb : kbs) {
    if (!is_conditional_kb(kb))
      throw UnsupportedCombinationError("P7 applies to conditional bases only: " + kb_string(kb));
    const TheoryProfile& profile = cached_profile(kb, mode, vocab, options.limits);
    ConditionalSet ours = conditional_of_profile(profile);
    ConditionalSet closure = conditional_from_interpretation(
        cached_union_of_models(kb, vocab, options.limits));
    if (ours == closure) continue;
    for (CanonicalFormula ant = 0;; ++ant) {
      for (CanonicalFormula con = 0;; ++con) {
        if (ours.contains(ant, con) != closure.contains(ant, con))
          return fails(PostulateId::P7, mode,
                       {kb,
                        {embed(formula_from_canonical(ant, vocab),
                               formula_from_canonical(con, vocab))},
                        ours.contains(ant, con) ? "in the induced conditional, not in the "
                                                  "rational closure"
                                                : "in the rational closure, not in the induced "
                                                  "conditional"});
        if (con == vocab.universe_mask()) break;
      }
      if (ant == vocab.universe_mask()) break;
    }
  }
  return holds(PostulateId::P7, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_strict(PostulateId id, EntailmentMode mode,
                              const std::vector<KnowledgeBase>& kbs, const Vocabulary& vocab,
                              const PostulateOptions& options) {
  QuerySpace space = make_query_space(options.domain, kbs, vocab);
  for (const KnowledgeBase& kb : kbs) {
    if (id == PostulateId::P9 && !is_conditional_kb(kb))
      throw UnsupportedCombinationError("P9 applies to conditional bases only: " + kb_string(kb));
    const TheoryProfile& ours = cached_profile(kb, mode, vocab, options.limits);
    const TheoryProfile& ranked = cached_profile(kb, EntailmentMode::Ranked, vocab, options.limits);
    for (CanonicalFormula q : space.props) {
      bool m = ours.entails_canonical(q);
      bool r = ranked.entails_canonical(q);
      if (m != r)
        return fails(id, mode,
                     {kb,
                      {formula_from_canonical(q, vocab)},
                      m ? "entailed by the mode but not ranked-entailed"
                        : "ranked-entailed but not entailed by the mode"});
    }
  }
  return holds(id, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_p9prime(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                               const Vocabulary& vocab, const PostulateOptions& options) {
  QuerySpace space = make_query_space(options.domain, kbs, vocab);
  for (const KnowledgeBase& kb : kbs) {
    if (!is_propositional_kb(kb))
      throw UnsupportedCombinationError("P9' applies to propositional bases only: " +
                                        kb_string(kb));
    ValuationSet classical = vocab.universe_mask();
    for (const Formula& f : kb) classical &= classical_models(vocab, f);
    const TheoryProfile& ours = cached_profile(kb, mode, vocab, options.limits);
    for (CanonicalFormula q : space.props) {
      bool m = ours.entails_canonical(q);
      bool c = (classical & ~q) == 0;
      if (m != c)
        return fails(PostulateId::P9Prime, mode,
                     {kb,
                      {formula_from_canonical(q, vocab)},
                      m ? "entailed by the mode but not classically"
                        : "classically entailed but not by the mode"});
    }
  }
  return holds(PostulateId::P9Prime, mode, instances_detail(kbs.size(), options.domain));
}

PostulateVerdict check_p10(EntailmentMode mode, const std::vector<KnowledgeBase>& kbs,
                           const Vocabulary& vocab, const PostulateOptions& options) {
  QuerySpace space = make_query_space(options.domain, kbs, vocab);
  for (const KnowledgeBase& kb : kbs) {
    const TheoryProfile& ours = cached_profile(kb, mode, vocab, options.limits);
    const TheoryProfile& ranked = cached_profile(kb, EntailmentMode::Ranked, vocab, options.limits);
    ValuationSet everything = vocab.universe_mask();
    for (CanonicalFormula q : space.props) {
      bool m = ours.entails_embedding(everything, q);
      bool r = ranked.entails_embedding(everything, q);
      if (m != r)
        return fails(PostulateId::P10, mode,
                     {kb,
                      {embed(top(), formula_from_canonical(q, vocab))},
                      m ? "entailed by the mode but not ranked-entailed"
                        : "ranked-entailed but not entailed by the mode"});
    }
  }
  return holds(PostulateId::P10, mode, instances_detail(kbs.size(), options.domain));
}

}  // namespace

PostulateVerdict check_postulate(PostulateId id, EntailmentMode mode,
                                 const std::vector<KnowledgeBase>& kbs, const Vocabulary& vocab,
                                 const PostulateOptions& options) {
  if (vocab.universe_size() > 8)
    throw VocabularyTooLargeError("postulate checks need at most 3 atoms");
  if (kbs.empty() && id != PostulateId::P4)
    throw EmptyInputError("no instance bases supplied");

  switch (id) {
    case PostulateId::P1: return check_p1(mode, kbs, vocab, options);
    case PostulateId::P2: return check_p2(mode, kbs, vocab, options);
    case PostulateId::P3: return check_p3(mode, kbs, vocab, options);
    case PostulateId::P4: return check_p4(mode, vocab, options);
    case PostulateId::P5: return check_p5(mode, kbs, vocab, options);
    case PostulateId::P5Prime:
      return check_single_model(PostulateId::P5Prime, mode, kbs, vocab, options);
    case PostulateId::P6: return check_single_model(PostulateId::P6, mode, kbs, vocab, options);
    case PostulateId::P7: return check_p7(mode, kbs, vocab, options);
    case PostulateId::P8: return check_strict(PostulateId::P8, mode, kbs, vocab, options);
    case PostulateId::P9: return check_strict(PostulateId::P9, mode, kbs, vocab, options);
    case PostulateId::P9Prime: return check_p9prime(mode, kbs, vocab, options);
    case PostulateId::P10: return check_p10(mode, kbs, vocab, options);
  }
  throw std::logic_error("check_postulate: unknown postulate id");
}

bool cn0_closure_check(const KnowledgeBase& kb, EntailmentMode mode, const Vocabulary& vocab,
                       const EnumerationLimits& limits) {
  const TheoryProfile& theory = cached_profile(kb, mode, vocab, limits);

  // Profile of every interpretation satisfying the canonical restriction of
  // the theory: the possible set must avoid everything the theory's
  // propositional part excludes, and every canonical Min query must land
  // inside what the theory asserts about typicality.
  TheoryProfileBuilder builder(vocab);
  enumerate_interpretations(vocab, [&](const RankedInterpretation& r) {
    if (r.possible_set() & ~theory.possible_union) return true;
    std::vector<ValuationSet> finite = r.finite_layers();
    for (CanonicalFormula alpha = 0;; ++alpha) {
      if (min_set(finite, alpha & r.possible_set()) & ~theory.min_union[alpha]) return true;
      if (alpha == vocab.universe_mask()) break;
    }
    builder.add(r);
    return true;
  }, limits);
  TheoryProfile closed = builder.take();

  // Everything those interpretations agree on must already be in the theory.
  if (theory.possible_union & ~closed.possible_union) return false;
  for (CanonicalFormula alpha = 0;; ++alpha) {
    if (theory.min_union[alpha] & ~closed.min_union[alpha]) return false;
    if (alpha == vocab.universe_mask()) break;
  }
  return true;
}

ImpossibilityReport impossibility_demo() {
  Vocabulary vocab({"p", "q"});
  KnowledgeBase kb = {parse("*T -> p"), parse("*!p -> *q")};
  EnumerationLimits limits;

  ImpossibilityReport report{kb, vocab, false, false, std::nullopt, std::nullopt, {}, false};

  Formula just_p = parse("p");
  Formula typically_not_q = parse("*T -> !q");

  // The argument exhibits two specific refuting models: a two-layer one
  // against p and a one-layer one against *T -> !q. Confirm each is really
  // among the enumerated models and really fails its query; anything less
  // and the corresponding denial flag stays false.
  auto locate = [&](const RankedInterpretation& wanted,
                    const Formula& query) -> std::optional<RankedInterpretation> {
    std::optional<RankedInterpretation> hit;
    for_each_model(
        kb, vocab,
        [&](const RankedInterpretation& m) {
          if (m == wanted && !satisfies(m, query)) {
            hit = m;
            return false;
          }
          return true;
        },
        limits);
    return hit;
  };
  report.counter_model_p =
      locate(RankedInterpretation::from_layers(vocab, {{2}, {1}}), just_p);
  report.ranked_denies_p = report.counter_model_p.has_value();
  report.counter_model_typically_not_q =
      locate(RankedInterpretation::from_layers(vocab, {{2, 3}}), typically_not_q);
  report.ranked_denies_typically_not_q = report.counter_model_typically_not_q.has_value();

  std::vector<Formula> chain = {just_p, typically_not_q, parse("*q -> p"), parse("*!p -> p")};
  constexpr PostulateId six[] = {PostulateId::P1, PostulateId::P2,  PostulateId::P3,
                                 PostulateId::P5, PostulateId::P8, PostulateId::P10};
  constexpr EntailmentMode modes[] = {EntailmentMode::LM, EntailmentMode::PT,
                                      EntailmentMode::PTPrime};

  report.no_mode_keeps_all_six = true;
  for (EntailmentMode mode : modes) {
    ImpossibilityReport::ModeRow row{mode, {}, {}, {}};
    for (const Formula& f : chain)
      row.chain.push_back({f, theory_contains(kb, mode, f, vocab, limits)});
    for (PostulateId id : six) {
      row.verdicts.push_back(check_postulate(id, mode, {kb}, vocab, {}));
      if (row.verdicts.back().status == PostulateVerdict::Status::Fails)
        row.sacrificed.push_back(id);
    }
    if (row.sacrificed.empty()) report.no_mode_keeps_all_six = false;
    report.modes.push_back(std::move(row));
  }
  return report;
}

nlohmann::json ImpossibilityReport::to_json() const {
  nlohmann::json j;
  j["kb"] = nlohmann::json::array();
  for (const Formula& f : kb) j["kb"].push_back(render(f));
  j["vocab"] = vocab.names();

  nlohmann::json ranked;
  ranked["denies_p"] = ranked_denies_p;
  ranked["counter_model_p"] =
      counter_model_p ? counter_model_p->to_json() : nlohmann::json(nullptr);
  ranked["denies_typically_not_q"] = ranked_denies_typically_not_q;
  ranked["counter_model_typically_not_q"] =
      counter_model_typically_not_q ? counter_model_typically_not_q->to_json()
                                    : nlohmann::json(nullptr);
  j["ranked"] = std::move(ranked);

  j["modes"] = nlohmann::json::array();
  for (const ModeRow& row : modes) {
    nlohmann::json m;
    m["mode"] = mode_name(row.mode);
    m["chain"] = nlohmann::json::array();
    for (const ChainQuery& c : row.chain)
      m["chain"].push_back({{"query", render(c.query)}, {"entailed", c.entailed}});
    m["verdicts"] = nlohmann::json::array();
    for (const PostulateVerdict& v : row.verdicts) m["verdicts"].push_back(v.to_json());
    m["sacrificed"] = nlohmann::json::array();
    for (PostulateId id : row.sacrificed) m["sacrificed"].push_back(postulate_name(id));
    j["modes"].push_back(std::move(m));
  }
  j["no_mode_keeps_all_six"] = no_mode_keeps_all_six;
  return j;
}

void ImpossibilityReport::print(std::ostream& os) const {
  os << "knowledge base " << kb_string(kb) << " over {";
  for (size_t i = 0; i < vocab.size(); ++i) os << (i ? ", " : "") << vocab.name(i);
  os << "}\n\n";

  os << "ranked entailment alone already rejects both ends of the chain:\n";
  os << "  p entailed: " << (ranked_denies_p ? "no" : "yes");
  if (counter_model_p) {
    os << "; counter-model:\n";
    print_layer_table(os, *counter_model_p);
  } else {
    os << "\n";
  }
  os << "  *T -> !q entailed: " << (ranked_denies_typically_not_q ? "no" : "yes");
  if (counter_model_typically_not_q) {
    os << "; counter-model:\n";
    print_layer_table(os, *counter_model_typically_not_q);
  } else {
    os << "\n";
  }

  for (const ModeRow& row : modes) {
    os << "\nmode " << mode_name(row.mode) << ":\n";
    for (const ChainQuery& c : row.chain)
      os << "  " << render(c.query) << " in the theory: " << (c.entailed ? "yes" : "no") << "\n";
    for (const PostulateVerdict& v : row.verdicts) {
      os << "  " << postulate_name(v.id) << ": "
         << (v.status == PostulateVerdict::Status::Fails ? "FAILS" : "holds on this instance");
      if (v.status == PostulateVerdict::Status::Fails && v.witness &&
          !v.witness->formulas.empty()) {
        os << " (witness: ";
        for (size_t i = 0; i < v.witness->formulas.size(); ++i)
          os << (i ? ", " : "") << render(v.witness->formulas[i]);
        os << ")";
      }
      os << "\n";
    }
    os << "  gives up:";
    if (row.sacrificed.empty()) {
      os << " nothing on this instance";
    } else {
      for (size_t i = 0; i < row.sacrificed.size(); ++i)
        os << (i ? ", " : " ") << postulate_name(row.sacrificed[i]);
    }
    os << "\n";
  }

  os << "\nno mode keeps all of P1, P2, P3, P5, P8, P10: "
     << (no_mode_keeps_all_six ? "confirmed" : "REFUTED") << "\n";
}

}  // namespace ptl
