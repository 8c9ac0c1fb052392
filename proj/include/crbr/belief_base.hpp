#ifndef CRBR_BELIEF_BASE_HPP
#define CRBR_BELIEF_BASE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crbr/formula.hpp"
#include "crbr/sat.hpp"

namespace crbr {

// An ordered, duplicate-free list of formulas. Order is significant: every
// subbase in this library is a set of indices into its base.
class BeliefBase {
 public:
  BeliefBase() = default;

  // Throws Error on a structural duplicate and CapExceeded when the base
  // grows past limits.max_base.
  explicit BeliefBase(std::vector<Formula> formulas, const Limits& limits = {});

  std::size_t size() const { return formulas_.size(); }
  bool empty() const { return formulas_.empty(); }
  const Formula& operator[](std::size_t i) const { return formulas_[i]; }
  const std::vector<Formula>& formulas() const { return formulas_; }

 private:
  std::vector<Formula> formulas_;
};

// Parses one formula per line; blank lines and lines starting with '#' are
// skipped. Errors mention the 1-based line number.
BeliefBase parse_base_text(std::string_view text, const Limits& limits = {});
BeliefBase load_base_file(const std::string& path, const Limits& limits = {});

}  // namespace crbr

#endif  // CRBR_BELIEF_BASE_HPP
