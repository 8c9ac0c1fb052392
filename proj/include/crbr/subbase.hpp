#ifndef CRBR_SUBBASE_HPP
#define CRBR_SUBBASE_HPP

#include <cstdint>
#include <vector>

#include "crbr/belief_base.hpp"
#include "crbr/formula.hpp"
#include "crbr/sat.hpp"

namespace crbr {

using Mask = std::uint64_t;

// A set of indices into a belief base, packed into a 64-bit mask.
class Subbase {
 public:
  constexpr Subbase() = default;
  constexpr explicit Subbase(Mask bits) : bits_(bits) {}

  static Subbase full(int frame_size);
  static Subbase from_indices(const std::vector<int>& indices, int frame_size);

  Mask bits() const { return bits_; }
  int cardinality() const;
  bool empty() const { return bits_ == 0; }
  bool contains(int index) const { return (bits_ >> index) & 1u; }
  bool subset_of(Subbase other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  Subbase intersect(Subbase other) const {
    return Subbase(bits_ & other.bits_);
  }

  std::vector<int> indices() const;

  // The formulas this subbase selects, in index order.
  std::vector<Formula> formulas(const BeliefBase& base) const;

  bool operator==(const Subbase& other) const { return bits_ == other.bits_; }
  bool operator!=(const Subbase& other) const { return bits_ != other.bits_; }

 private:
  Mask bits_ = 0;
};

// Canonical ordering: larger sets first, ties broken by ascending mask value.
// Every family in this library is kept sorted this way, which pins down the
// order of selections, reports, and disjunctions.
struct CanonicalLess {
  bool operator()(Subbase lhs, Subbase rhs) const {
    if (lhs.cardinality() != rhs.cardinality())
      return lhs.cardinality() > rhs.cardinality();
    return lhs.bits() < rhs.bits();
  }
};

// A duplicate-free collection of subbases of one frame, in canonical order.
class SubbaseFamily {
 public:
  SubbaseFamily() = default;
  SubbaseFamily(int frame_size, std::vector<Subbase> sets);

  int frame_size() const { return frame_size_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const Subbase& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<Subbase>& sets() const { return sets_; }
  bool contains(Subbase s) const;

  bool operator==(const SubbaseFamily& other) const {
    return frame_size_ == other.frame_size_ && sets_ == other.sets_;
  }

  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }

 private:
  int frame_size_ = 0;
  std::vector<Subbase> sets_;
};

// The inclusion-maximal mu-consistent subbases of `base` ("W" throughout).
// Throws InconsistentInput if mu itself is unsatisfiable. The result is never
// empty: if nothing else survives it is {empty set}. Implemented as a descent
// of the subset lattice from the full base, recursing only below inconsistent
// nodes; each node is decided with the DPLL solver.
SubbaseFamily enumerate_inclusion_maximal(const BeliefBase& base,
                                          const Formula& mu,
                                          const Limits& limits = {});

// Same answer computed by the assignment-scan kernel: every model of mu is
// projected to the mask of base formulas it satisfies, and the maximal masks
// are kept. Serial and OpenMP-parallel variants share the code path; both
// exist to cross-check the lattice descent and to feed the benchmark.
SubbaseFamily scan_inclusion_maximal(const BeliefBase& base, const Formula& mu,
                                     ScanMode mode = ScanMode::kSerial,
                                     const Limits& limits = {});

// Members of maximum cardinality. Nonempty whenever `family` is.
SubbaseFamily filter_cardinality_maximal(const SubbaseFamily& family);

// Members not strictly included in any other member.
SubbaseFamily filter_inclusion_maximal(const SubbaseFamily& family);

// All nonempty intersections of sub-collections of `family` of size >= 2.
// Computed as a fixpoint of pairwise intersections, which reaches every
// sub-collection intersection because intersection only shrinks sets.
SubbaseFamily all_intersections(const SubbaseFamily& family);

}  // namespace crbr

#endif  // CRBR_SUBBASE_HPP
