#ifndef CRBR_EVIDENCE_HPP
#define CRBR_EVIDENCE_HPP

#include <map>
#include <vector>

#include "crbr/rational.hpp"
#include "crbr/subbase.hpp"

namespace crbr {

// A Dempster-Shafer basic belief assignment over the subsets of one belief
// base (the frame is the base itself, viewed as a finite set of formulas).
// Focal sets are nonempty, masses are positive exact rationals summing to 1.
class MassFunction {
 public:
  MassFunction() = default;
  MassFunction(int frame_size, std::map<Subbase, Rational, CanonicalLess> masses);

  int frame_size() const { return frame_size_; }
  const std::map<Subbase, Rational, CanonicalLess>& masses() const {
    return masses_;
  }
  // Zero for non-focal sets.
  Rational mass_of(Subbase s) const;

  bool operator==(const MassFunction& other) const {
    return frame_size_ == other.frame_size_ && masses_ == other.masses_;
  }

 private:
  int frame_size_ = 0;
  std::map<Subbase, Rational, CanonicalLess> masses_;
};

// The simple support function testifying for `member`:
//   m({member}) = |member| / |base|,   m(frame) = 1 - |member| / |base|.
// Throws EmptySubbase if member is empty.
MassFunction simple_bba(Subbase member, int frame_size);

// Dempster's rule for two mass functions on the same frame. `conflict_out`,
// when given, receives the mass k that fell on the empty set before
// normalisation. Throws TotalConflict if k = 1.
MassFunction dempster_combine(const MassFunction& lhs, const MassFunction& rhs,
                              Rational* conflict_out = nullptr);

// Left fold of dempster_combine over `sources` (associativity makes the
// bracketing irrelevant). `global_conflict_out`, when given, receives the
// conflict of the equivalent single n-way combination, accumulated as
// 1 - k = prod_i (1 - k_i).
MassFunction combine_all(const std::vector<MassFunction>& sources,
                         Rational* global_conflict_out = nullptr);

// Bel(A) = sum of masses of nonempty focal sets included in A.
Rational belief_of(const MassFunction& m, Subbase a);

// Pl(A) = 1 - Bel(complement of A).
Rational plausibility_of(const MassFunction& m, Subbase a);

// Everything the credibility-based operators need, computed once: the family
// itself, the nonempty intersections of its sub-collections, the combined
// mass function, the global conflict, and mass/Bel for every member and
// intersection (parallel to family.sets() / intersections.sets()).
struct CredibilityTable {
  SubbaseFamily family;
  SubbaseFamily intersections;
  MassFunction combined;
  Rational conflict;
  std::vector<Rational> member_mass;
  std::vector<Rational> member_bel;
  std::vector<Rational> intersection_mass;
  std::vector<Rational> intersection_bel;
};

// Throws EmptySubbase if any member is empty, InvalidFamily if the family has
// no members.
CredibilityTable credibility_table(const SubbaseFamily& family);

}  // namespace crbr

#endif  // CRBR_EVIDENCE_HPP
