#include "crbr/revision.hpp"

#include <algorithm>

#include "crbr/errors.hpp"

namespace crbr {

const char* operator_name(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kGinsberg: return "ginsberg";
    case OperatorKind::kWidtio:   return "widtio";
    case OperatorKind::kRsrg:     return "rsrg";
    case OperatorKind::kRsrw:     return "rsrw";
    case OperatorKind::kCsrg:     return "csrg";
    case OperatorKind::kCsrw:     return "csrw";
    case OperatorKind::kCsir:     return "csir";
    case OperatorKind::kRsir:     return "rsir";
    case OperatorKind::kSir:      return "sir";
  }
  return "?";
}

OperatorKind parse_operator(const std::string& name) {
  static const std::pair<const char*, OperatorKind> kTable[] = {
      {"ginsberg", OperatorKind::kGinsberg}, {"widtio", OperatorKind::kWidtio},
      {"rsrg", OperatorKind::kRsrg},         {"rsrw", OperatorKind::kRsrw},
      {"csrg", OperatorKind::kCsrg},         {"csrw", OperatorKind::kCsrw},
      {"csir", OperatorKind::kCsir},         {"rsir", OperatorKind::kRsir},
      {"sir", OperatorKind::kSir},
  };
  for (const auto& [text, kind] : kTable) {
    if (name == text) return kind;
  }
  throw Error("unknown operator: " + name);
}

namespace {

Formula conjoin(const std::vector<Formula>& formulas) {
  if (formulas.empty()) return Formula::top();
  Formula acc = formulas.front();
  for (std::size_t i = 1; i < formulas.size(); ++i)
    acc = Formula::conjunction(acc, formulas[i]);
  return acc;
}

// The formulas of `s` in index order, with mu conjoined last.
Formula subbase_with_mu(const BeliefBase& base, Subbase s, const Formula& mu) {
  std::vector<Formula> parts = s.formulas(base);
  parts.push_back(mu);
  return conjoin(parts);
}

// Disjunction over the selected sets in canonical order; an empty selection
// leaves mu alone.
Formula build_result(const BeliefBase& base, const SubbaseFamily& selected,
                     const Formula& mu) {
  if (selected.empty()) return mu;
  Formula acc = subbase_with_mu(base, selected[0], mu);
  for (std::size_t i = 1; i < selected.size(); ++i)
    acc = Formula::disjunction(acc, subbase_with_mu(base, selected[i], mu));
  return acc;
}

bool consistent_with_mu(const BeliefBase& base, Subbase s, const Formula& mu,
                        const Limits& limits) {
  std::vector<Formula> query = s.formulas(base);
  query.push_back(mu);
  return is_satisfiable(query, limits);
}

// {intersection of all members}; empty selection for an empty family.
SubbaseFamily intersection_family(const SubbaseFamily& family) {
  if (family.empty()) return SubbaseFamily(family.frame_size(), {});
  Subbase acc = family[0];
  for (Subbase s : family) acc = acc.intersect(s);
  return SubbaseFamily(family.frame_size(), {acc});
}

// Members with the highest Bel under `combined`. Ties are kept.
SubbaseFamily argmax_bel(const SubbaseFamily& candidates,
                         const MassFunction& combined) {
  if (candidates.empty()) return candidates;
  std::vector<Rational> bels;
  for (Subbase s : candidates) bels.push_back(belief_of(combined, s));
  const Rational best = *std::max_element(bels.begin(), bels.end());
  std::vector<Subbase> kept;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (bels[i] == best) kept.push_back(candidates[i]);
  }
  return SubbaseFamily(candidates.frame_size(), std::move(kept));
}

// True when there is no evidence to combine: no members, or only the empty
// set (the enumerated family of a base wholly incompatible with mu).
bool degenerate_family(const SubbaseFamily& family) {
  for (Subbase s : family) {
    if (!s.empty()) return false;
  }
  return true;
}

SubbaseFamily mu_consistent_members(const BeliefBase& base,
                                    const SubbaseFamily& family,
                                    const Formula& mu, const Limits& limits) {
  std::vector<Subbase> kept;
  for (Subbase s : family) {
    if (consistent_with_mu(base, s, mu, limits)) kept.push_back(s);
  }
  return SubbaseFamily(family.frame_size(), std::move(kept));
}

RevisionOutcome make_outcome(const BeliefBase& base, const Formula& mu,
                             OperatorKind op, const SubbaseFamily& family,
                             const Limits& limits) {
  RevisionOutcome outcome;
  outcome.op = op;
  outcome.base = base;
  outcome.mu = mu;

  // With nothing to retract from, every kind collapses to mu outright.
  if (base.empty()) {
    outcome.selected = SubbaseFamily(0, {});
    outcome.result = mu;
    return outcome;
  }

  // Members inconsistent with mu (possible only for caller-supplied families)
  // still testify in the evidence combination but are never selected.
  const SubbaseFamily consistent = mu_consistent_members(base, family, mu, limits);

  switch (op) {
    case OperatorKind::kGinsberg:
      outcome.selected = consistent;
      break;
    case OperatorKind::kWidtio:
      outcome.selected = intersection_family(consistent);
      break;
    case OperatorKind::kRsrg:
      outcome.selected = filter_cardinality_maximal(consistent);
      break;
    case OperatorKind::kRsrw:
      outcome.selected =
          intersection_family(filter_cardinality_maximal(consistent));
      break;
    case OperatorKind::kCsrg:
    case OperatorKind::kCsrw: {
      if (degenerate_family(family)) {
        // Nothing testifies for anything; all members are equally credible.
        outcome.selected = op == OperatorKind::kCsrg
                               ? consistent
                               : intersection_family(consistent);
        break;
      }
      outcome.table = credibility_table(family);
      const SubbaseFamily wbel = argmax_bel(consistent, outcome.table->combined);
      outcome.selected =
          op == OperatorKind::kCsrg ? wbel : intersection_family(wbel);
      break;
    }
    case OperatorKind::kCsir: {
      if (degenerate_family(family)) {
        outcome.selected = SubbaseFamily(family.frame_size(), {});
        break;
      }
      outcome.table = credibility_table(family);
      const SubbaseFamily candidates = mu_consistent_members(
          base, outcome.table->intersections, mu, limits);
      outcome.selected = argmax_bel(candidates, outcome.table->combined);
      break;
    }
    case OperatorKind::kRsir: {
      const SubbaseFamily candidates = mu_consistent_members(
          base, all_intersections(filter_cardinality_maximal(consistent)), mu,
          limits);
      outcome.selected = filter_cardinality_maximal(candidates);
      break;
    }
    case OperatorKind::kSir: {
      const SubbaseFamily candidates =
          mu_consistent_members(base, all_intersections(consistent), mu, limits);
      outcome.selected = filter_inclusion_maximal(candidates);
      break;
    }
  }

  outcome.result = build_result(base, outcome.selected, mu);
  return outcome;
}

}  // namespace

RevisionOutcome revise(const BeliefBase& base, const Formula& mu,
                       OperatorKind op, const Limits& limits) {
  const SubbaseFamily family = enumerate_inclusion_maximal(base, mu, limits);
  return make_outcome(base, mu, op, family, limits);
}

RevisionOutcome revise_with_family(const BeliefBase& base, const Formula& mu,
                                   OperatorKind op, const SubbaseFamily& family,
                                   const Limits& limits) {
  if (family.frame_size() != static_cast<int>(base.size())) {
    throw InvalidFamily("family frame does not match the base size");
  }
  if (!is_satisfiable({mu}, limits)) {
    throw InconsistentInput("mu is unsatisfiable");
  }
  return make_outcome(base, mu, op, family, limits);
}

bool outcome_entails(const RevisionOutcome& outcome, const Formula& psi,
                     const Limits& limits) {
  if (outcome.selected.empty()) {
    return entails({outcome.result}, psi, limits);
  }
  // The disjunction over the selected sets entails psi exactly when each
  // selected set together with mu does.
  for (Subbase s : outcome.selected) {
    std::vector<Formula> premises = s.formulas(outcome.base);
    premises.push_back(outcome.mu);
    if (!entails(premises, psi, limits)) return false;
  }
  return true;
}

namespace {

// Sum of the combined masses of the intersections strictly below `member`.
Rational strict_intersection_sum(const CredibilityTable& table, Subbase member) {
  Rational total = 0;
  const auto& sets = table.intersections.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i] != member && sets[i].subset_of(member))
      total += table.intersection_mass[i];
  }
  return total;
}

}  // namespace

Proposition1Report check_proposition1(const BeliefBase& base, const Formula& mu,
                                      const Limits& limits) {
  return check_proposition1_with_family(
      base, mu, enumerate_inclusion_maximal(base, mu, limits), limits);
}

Proposition1Report check_proposition1_with_family(const BeliefBase& base,
                                                  const Formula& mu,
                                                  const SubbaseFamily& family,
                                                  const Limits& limits) {
  if (!is_satisfiable({mu}, limits)) {
    throw InconsistentInput("mu is unsatisfiable");
  }

  Proposition1Report report;
  report.table = credibility_table(family);
  const SubbaseFamily consistent =
      mu_consistent_members(base, family, mu, limits);
  report.wbel = argmax_bel(consistent, report.table.combined);
  report.wcard = filter_cardinality_maximal(consistent);
  report.families_equal = report.wbel == report.wcard;

  // Condition one: inside the credibility selection, the members carry equal
  // mass and equal strict-intersection sums. Condition two: across the
  // boundary, the mass gap strictly beats any intersection-sum deficit.
  bool conditions = true;
  const auto mass_of = [&](Subbase s) { return report.table.combined.mass_of(s); };
  const auto& inside = report.wbel.sets();
  for (std::size_t i = 0; i + 1 < inside.size() && conditions; ++i) {
    conditions = mass_of(inside[i]) == mass_of(inside[i + 1]) &&
                 strict_intersection_sum(report.table, inside[i]) ==
                     strict_intersection_sum(report.table, inside[i + 1]);
  }
  for (Subbase outsider : consistent) {
    if (!conditions) break;
    if (report.wbel.contains(outsider)) continue;
    for (Subbase insider : inside) {
      const Rational gap = mass_of(insider) - mass_of(outsider);
      const Rational bound = strict_intersection_sum(report.table, outsider) -
                             strict_intersection_sum(report.table, insider);
      if (!(gap > std::max(Rational(0), bound))) {
        conditions = false;
        break;
      }
    }
  }
  report.mass_conditions_hold = conditions;
  report.equivalence_holds =
      report.families_equal == report.mass_conditions_hold;
  return report;
}

}  // namespace crbr
