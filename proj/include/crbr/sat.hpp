#ifndef CRBR_SAT_HPP
#define CRBR_SAT_HPP

#include <vector>

#include "crbr/formula.hpp"

namespace crbr {

// Resource caps shared by every satisfiability entry point. Queries whose
// variable set exceeds max_vars (or whose base exceeds max_base, where a base
// is involved) raise CapExceeded instead of silently grinding.
struct Limits {
  int max_vars = 24;
  int max_base = 20;
};

enum class ScanMode {
  kSerial,
  kParallel,
};

// Satisfiability of the conjunction of `formulas`, decided by Tseitin
// translation plus DPLL with unit propagation. Deterministic: branching
// always picks the lowest-index unassigned variable, trying false first.
// An empty set is satisfiable.
bool is_satisfiable(const std::vector<Formula>& formulas,
                    const Limits& limits = {});

// Same question answered by scanning all 2^v assignments of the variables.
// The serial scan is the reference implementation; the parallel one splits
// the assignment range across OpenMP threads. Kept alongside DPLL so the two
// can be cross-checked and benchmarked against each other.
bool truth_table_satisfiable(const std::vector<Formula>& formulas,
                             ScanMode mode = ScanMode::kSerial,
                             const Limits& limits = {});

// premises |= conclusion
bool entails(const std::vector<Formula>& premises, const Formula& conclusion,
             const Limits& limits = {});

bool equivalent(const Formula& lhs, const Formula& rhs,
                const Limits& limits = {});

}  // namespace crbr

#endif  // CRBR_SAT_HPP
