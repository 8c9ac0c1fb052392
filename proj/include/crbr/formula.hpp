#ifndef CRBR_FORMULA_HPP
#define CRBR_FORMULA_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace crbr {

enum class Connective : std::uint8_t {
  kAtom,
  kNot,
  kAnd,
  kOr,
  kXor,
  kImplies,
  kIff,
  kTop,
  kBottom,
};

// Immutable propositional formula. Copies are cheap (shared structure), and
// equality is structural, so formulas behave like ordinary values.
class Formula {
 public:
  struct Node;  // defined in formula.cpp; formulas are opaque values

  // Default-constructed formulas are the constant top.
  Formula();

  static Formula atom(std::string name);
  static Formula negation(Formula operand);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula exclusive_or(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula equivalence(Formula lhs, Formula rhs);
  static Formula top();
  static Formula bottom();

  Connective kind() const;
  bool is_binary() const;

  // Preconditions: atom_name() requires kAtom; left() requires kNot or a
  // binary connective; right() requires a binary connective.
  const std::string& atom_name() const;
  Formula left() const;
  Formula right() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

  // Renders with the minimal parenthesisation that reparses to an identical
  // tree: "!", "&", "|", "^", "->", "<->", "top", "bot".
  std::string render() const;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

using Assignment = std::map<std::string, bool>;

// Parses the ASCII grammar (with unicode aliases for every connective):
//
//   iff     ::= implies ("<->" iff)?
//   implies ::= xor ("->" implies)?
//   xor     ::= or ("^" or)*
//   or      ::= and ("|" and)*
//   and     ::= unary ("&" unary)*
//   unary   ::= "!" unary | "(" iff ")" | "top" | "bot" | atom
//
// Atoms are [A-Za-z_][A-Za-z0-9_]*, excluding the keywords "top" and "bot".
// Throws ParseError with the byte offset of the offending token.
Formula parse_formula(std::string_view text);

// Variable names occurring in the formula(s), sorted.
std::set<std::string> variables(const Formula& formula);
std::set<std::string> variables(const std::vector<Formula>& formulas);

// Truth value under a total assignment. Throws MissingAtom if the assignment
// does not cover some variable of the formula.
bool evaluate(const Formula& formula, const Assignment& assignment);

}  // namespace crbr

#endif  // CRBR_FORMULA_HPP
