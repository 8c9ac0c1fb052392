#ifndef CRBR_REVISION_HPP
#define CRBR_REVISION_HPP

#include <optional>
#include <string>
#include <vector>

#include "crbr/belief_base.hpp"
#include "crbr/evidence.hpp"
#include "crbr/formula.hpp"
#include "crbr/sat.hpp"
#include "crbr/subbase.hpp"

namespace crbr {

enum class OperatorKind {
  kGinsberg,  // keep every maximal subbase, disjoin
  kWidtio,    // intersect every maximal subbase, conjoin
  kRsrg,      // cardinality-maximal subbases, disjoin
  kRsrw,      // intersection of the cardinality-maximal subbases
  kCsrg,      // credibility-maximal subbases, disjoin
  kCsrw,      // intersection of the credibility-maximal subbases
  kCsir,      // credibility-maximal intersection of sub-collections
  kRsir,      // cardinality-maximal intersection, no evidence involved
  kSir,       // inclusion-maximal intersections, disjoined
};

// Round-trips with parse_operator; names are the lowercase CLI spellings.
const char* operator_name(OperatorKind kind);
OperatorKind parse_operator(const std::string& name);

// The full outcome of one revision: which subbases were selected, the result
// formula built from them, and (for the credibility-based operators) the
// evidential table that drove the selection. The base and mu are carried
// along so the outcome is self-contained for follow-up entailment queries.
struct RevisionOutcome {
  OperatorKind op = OperatorKind::kGinsberg;
  BeliefBase base;
  Formula mu;
  SubbaseFamily selected;
  Formula result;
  std::optional<CredibilityTable> table;
};

// Revision with the family of maximal mu-consistent subbases enumerated from
// the base. Throws InconsistentInput if mu is unsatisfiable.
RevisionOutcome revise(const BeliefBase& base, const Formula& mu,
                       OperatorKind op, const Limits& limits = {});

// Revision over a caller-supplied family instead of the enumerated one.
// Members that are inconsistent with mu take part in the evidence combination
// but are excluded from selection.
RevisionOutcome revise_with_family(const BeliefBase& base, const Formula& mu,
                                   OperatorKind op, const SubbaseFamily& family,
                                   const Limits& limits = {});

// The skeptical consequence question: does every selected subbase, together
// with mu, entail psi? For operators that select nothing this degenerates to
// result |= psi (i.e. mu |= psi).
bool outcome_entails(const RevisionOutcome& outcome, const Formula& psi,
                     const Limits& limits = {});

// Diagnosis of when credibility-maximal and cardinality-maximal selection
// agree. `families_equal` is the direct comparison; `mass_conditions_hold`
// checks the two mass-side conditions (equal member masses and equal
// intersection-mass sums inside the credibility selection, plus the strict
// margin across its boundary) that characterise agreement.
struct Proposition1Report {
  CredibilityTable table;
  SubbaseFamily wbel;
  SubbaseFamily wcard;
  bool families_equal = false;
  bool mass_conditions_hold = false;
  bool equivalence_holds = false;
};

Proposition1Report check_proposition1(const BeliefBase& base, const Formula& mu,
                                      const Limits& limits = {});
Proposition1Report check_proposition1_with_family(const BeliefBase& base,
                                                  const Formula& mu,
                                                  const SubbaseFamily& family,
                                                  const Limits& limits = {});

}  // namespace crbr

#endif  // CRBR_REVISION_HPP
