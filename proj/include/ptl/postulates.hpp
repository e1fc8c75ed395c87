#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ptl/conditionals.hpp"
#include "ptl/theory.hpp"

namespace ptl {

// The postulates the harness can exercise. P5Prime and P9Prime are the
// primed variants (single-model form of conditional rationality, classical
// entailment on propositional bases).
enum class PostulateId { P1, P2, P3, P4, P5, P5Prime, P6, P7, P8, P9, P9Prime, P10 };

const char* postulate_name(PostulateId id);

struct PostulateWitness {
  KnowledgeBase kb;
  std::vector<Formula> formulas;
  std::string note;
};

// Every check is instance-scoped: Holds means "holds on the supplied
// instances", never a universal claim. Fails always carries a witness that
// re-checks as a violation. NotConfirmed is for the existential P4, where
// absence of a confirming pair among the instances refutes nothing.
struct PostulateVerdict {
  PostulateId id;
  EntailmentMode mode;
  enum class Status { Holds, Fails, NotConfirmed } status;
  std::optional<PostulateWitness> witness;
  std::string detail;

  nlohmann::json to_json() const;
};

enum class QueryDomain { Canonical, Subformulas };

struct PostulateOptions {
  QueryDomain domain = QueryDomain::Canonical;
  // Extra K' for cumulativity, per checked kb (the automatic derived-
  // consequence extension is always added).
  std::vector<KnowledgeBase> cumulativity_extensions;
  // (K, K') pairs for the existential defeasibility search; a classic
  // exception-overriding pair is always added.
  std::vector<std::pair<KnowledgeBase, KnowledgeBase>> defeasibility_pairs;
  EnumerationLimits limits;
};

// Checks one postulate for one mode over the supplied instance bases, all
// sharing `vocab` (at most 3 atoms; beyond that the canonical query space
// explodes). Throws UnsupportedCombinationError when a postulate's
// precondition excludes the kb (P7/P9 need conditional bases, P9'
// propositional ones).
PostulateVerdict check_postulate(PostulateId id, EntailmentMode mode,
                                 const std::vector<KnowledgeBase>& kbs,
                                 const Vocabulary& vocab,
                                 const PostulateOptions& options = {});

// Over the canonical query domain: everything ranked-entailed by the mode's
// theory is already in the theory.
bool cn0_closure_check(const KnowledgeBase& kb, EntailmentMode mode, const Vocabulary& vocab,
                       const EnumerationLimits& limits = {});

// The packaged two-atom demonstration that no entailment operator can keep
// all of P1, P2, P3, P5, P8, P10 at once: on K = {*T -> p, *!p -> *q} the
// ranked baseline already refuses both p and *T -> !q (with concrete
// counter-models), and each implemented mode gives up at least one of the
// six postulates on this instance.
struct ImpossibilityReport {
  KnowledgeBase kb;
  Vocabulary vocab;

  bool ranked_denies_p = false;
  bool ranked_denies_typically_not_q = false;
  std::optional<RankedInterpretation> counter_model_p;
  std::optional<RankedInterpretation> counter_model_typically_not_q;

  // Membership of one query formula in the mode's theory. The chain follows
  // the contradiction: p, *T -> !q, *q -> p, *!p -> p.
  struct ChainQuery {
    Formula query;
    bool entailed;
  };

  struct ModeRow {
    EntailmentMode mode;
    std::vector<ChainQuery> chain;
    std::vector<PostulateVerdict> verdicts;  // over {P1, P2, P3, P5, P8, P10}
    std::vector<PostulateId> sacrificed;
  };
  std::vector<ModeRow> modes;

  bool no_mode_keeps_all_six = false;

  nlohmann::json to_json() const;
  void print(std::ostream& os) const;
};

ImpossibilityReport impossibility_demo();

}  // namespace ptl
