#include "crbr/formula.hpp"

#include <cassert>
#include <cctype>
#include <utility>

#include "crbr/errors.hpp"

namespace crbr {

struct Formula::Node {
  Connective kind;
  std::string name;  // kAtom only
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

std::shared_ptr<const Formula::Node> make_node(
    Connective kind, std::string name, std::shared_ptr<const Formula::Node> lhs,
    std::shared_ptr<const Formula::Node> rhs) {
  auto node = std::make_shared<Formula::Node>();
  node->kind = kind;
  node->name = std::move(name);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

const std::shared_ptr<const Formula::Node>& top_node() {
  static const std::shared_ptr<const Formula::Node> node =
      make_node(Connective::kTop, {}, nullptr, nullptr);
  return node;
}

const std::shared_ptr<const Formula::Node>& bottom_node() {
  static const std::shared_ptr<const Formula::Node> node =
      make_node(Connective::kBottom, {}, nullptr, nullptr);
  return node;
}

}  // namespace

Formula::Formula() : node_(top_node()) {}

Formula Formula::atom(std::string name) {
  return Formula(make_node(Connective::kAtom, std::move(name), nullptr, nullptr));
}

Formula Formula::negation(Formula operand) {
  return Formula(make_node(Connective::kNot, {}, std::move(operand.node_), nullptr));
}

#define CRBR_BINARY_FACTORY(fn, kind)                                       \
  Formula Formula::fn(Formula lhs, Formula rhs) {                           \
    return Formula(                                                         \
        make_node(kind, {}, std::move(lhs.node_), std::move(rhs.node_)));   \
  }

CRBR_BINARY_FACTORY(conjunction, Connective::kAnd)
CRBR_BINARY_FACTORY(disjunction, Connective::kOr)
CRBR_BINARY_FACTORY(exclusive_or, Connective::kXor)
CRBR_BINARY_FACTORY(implication, Connective::kImplies)
CRBR_BINARY_FACTORY(equivalence, Connective::kIff)

#undef CRBR_BINARY_FACTORY

Formula Formula::top() { return Formula(top_node()); }
Formula Formula::bottom() { return Formula(bottom_node()); }

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  switch (node_->kind) {
    case Connective::kAnd:
    case Connective::kOr:
    case Connective::kXor:
    case Connective::kImplies:
    case Connective::kIff:
      return true;
    default:
      return false;
  }
}

const std::string& Formula::atom_name() const {
  assert(node_->kind == Connective::kAtom);
  return node_->name;
}

Formula Formula::left() const {
  assert(node_->lhs != nullptr);
  return Formula(node_->lhs);
}

Formula Formula::right() const {
  assert(node_->rhs != nullptr);
  return Formula(node_->rhs);
}

namespace {

bool nodes_equal(const Formula::Node* a, const Formula::Node* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Connective::kAtom:
      return a->name == b->name;
    case Connective::kTop:
    case Connective::kBottom:
      return true;
    case Connective::kNot:
      return nodes_equal(a->lhs.get(), b->lhs.get());
    default:
      return nodes_equal(a->lhs.get(), b->lhs.get()) &&
             nodes_equal(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  return nodes_equal(node_.get(), other.node_.get());
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength; unary and leaves bind tighter than any binary connective.
int precedence(Connective kind) {
  switch (kind) {
    case Connective::kIff:     return 0;
    case Connective::kImplies: return 1;
    case Connective::kXor:     return 2;
    case Connective::kOr:      return 3;
    case Connective::kAnd:     return 4;
    case Connective::kNot:     return 5;
    default:                   return 6;
  }
}

const char* connective_text(Connective kind) {
  switch (kind) {
    case Connective::kAnd:     return "&";
    case Connective::kOr:      return "|";
    case Connective::kXor:     return "^";
    case Connective::kImplies: return "->";
    case Connective::kIff:     return "<->";
    default:                   return "";
  }
}

bool right_associative(Connective kind) {
  return kind == Connective::kImplies || kind == Connective::kIff;
}

void render_node(const Formula::Node* node, int min_prec, std::string& out) {
  const int prec = precedence(node->kind);
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (node->kind) {
    case Connective::kAtom:
      out += node->name;
      break;
    case Connective::kTop:
      out += "top";
      break;
    case Connective::kBottom:
      out += "bot";
      break;
    case Connective::kNot:
      out += '!';
      render_node(node->lhs.get(), prec, out);
      break;
    default: {
      const int left_min = right_associative(node->kind) ? prec + 1 : prec;
      const int right_min = right_associative(node->kind) ? prec : prec + 1;
      render_node(node->lhs.get(), left_min, out);
      out += ' ';
      out += connective_text(node->kind);
      out += ' ';
      render_node(node->rhs.get(), right_min, out);
      break;
    }
  }
  if (parens) out += ')';
}

}  // namespace

std::string Formula::render() const {
  std::string out;
  render_node(node_.get(), 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class TokenKind {
  kAtom, kNot, kAnd, kOr, kXor, kImplies, kIff,
  kLParen, kRParen, kTop, kBottom, kEnd,
};

struct Token {
  TokenKind kind;
  std::size_t offset;
  std::string text;  // kAtom only
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) return {TokenKind::kEnd, at, {}};

    if (try_consume("!") || try_consume("¬"))  // ¬
      return {TokenKind::kNot, at, {}};
    if (try_consume("&") || try_consume("∧"))  // ∧
      return {TokenKind::kAnd, at, {}};
    if (try_consume("|") || try_consume("∨"))  // ∨
      return {TokenKind::kOr, at, {}};
    if (try_consume("^") || try_consume("⊕"))  // ⊕
      return {TokenKind::kXor, at, {}};
    if (try_consume("<->") || try_consume("↔"))  // ↔
      return {TokenKind::kIff, at, {}};
    if (try_consume("->") || try_consume("→"))  // →
      return {TokenKind::kImplies, at, {}};
    if (try_consume("⊤"))  // ⊤
      return {TokenKind::kTop, at, {}};
    if (try_consume("⊥"))  // ⊥
      return {TokenKind::kBottom, at, {}};
    if (try_consume("("))
      return {TokenKind::kLParen, at, {}};
    if (try_consume(")"))
      return {TokenKind::kRParen, at, {}};

    const char c = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_ + 1;
      while (end < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[end])) ||
              text_[end] == '_')) {
        ++end;
      }
      std::string word(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (word == "top") return {TokenKind::kTop, at, {}};
      if (word == "bot") return {TokenKind::kBottom, at, {}};
      return {TokenKind::kAtom, at, std::move(word)};
    }
    throw ParseError(at, "unexpected character '" + std::string(1, c) + "'");
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool try_consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  Formula parse() {
    Formula f = parse_iff();
    if (current_.kind != TokenKind::kEnd)
      throw ParseError(current_.offset, "unexpected trailing input");
    return f;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  bool accept(TokenKind kind) {
    if (current_.kind != kind) return false;
    advance();
    return true;
  }

  // iff ::= implies ("<->" iff)?
  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (accept(TokenKind::kIff))
      return Formula::equivalence(std::move(lhs), parse_iff());
    return lhs;
  }

  // implies ::= xor ("->" implies)?
  Formula parse_implies() {
    Formula lhs = parse_xor();
    if (accept(TokenKind::kImplies))
      return Formula::implication(std::move(lhs), parse_implies());
    return lhs;
  }

  // xor ::= or ("^" or)*
  Formula parse_xor() {
    Formula lhs = parse_or();
    while (accept(TokenKind::kXor))
      lhs = Formula::exclusive_or(std::move(lhs), parse_or());
    return lhs;
  }

  // or ::= and ("|" and)*
  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept(TokenKind::kOr))
      lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }

  // and ::= unary ("&" unary)*
  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept(TokenKind::kAnd))
      lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }

  // unary ::= "!" unary | "(" iff ")" | "top" | "bot" | atom
  Formula parse_unary() {
    const Token token = current_;
    switch (token.kind) {
      case TokenKind::kNot:
        advance();
        return Formula::negation(parse_unary());
      case TokenKind::kLParen: {
        advance();
        Formula inner = parse_iff();
        if (!accept(TokenKind::kRParen))
          throw ParseError(current_.offset, "expected ')'");
        return inner;
      }
      case TokenKind::kTop:
        advance();
        return Formula::top();
      case TokenKind::kBottom:
        advance();
        return Formula::bottom();
      case TokenKind::kAtom:
        advance();
        return Formula::atom(token.text);
      case TokenKind::kEnd:
        throw ParseError(token.offset, "expected a formula");
      default:
        throw ParseError(token.offset, "expected an atom, '!', or '('");
    }
  }

  Lexer lexer_;
  Token current_{TokenKind::kEnd, 0, {}};
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Semantics

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::kAtom:
      out.insert(f.atom_name());
      break;
    case Connective::kTop:
    case Connective::kBottom:
      break;
    case Connective::kNot:
      collect_variables(f.left(), out);
      break;
    default:
      collect_variables(f.left(), out);
      collect_variables(f.right(), out);
      break;
  }
}

}  // namespace

std::set<std::string> variables(const Formula& formula) {
  std::set<std::string> out;
  collect_variables(formula, out);
  return out;
}

std::set<std::string> variables(const std::vector<Formula>& formulas) {
  std::set<std::string> out;
  for (const Formula& f : formulas) collect_variables(f, out);
  return out;
}

bool evaluate(const Formula& formula, const Assignment& assignment) {
  switch (formula.kind()) {
    case Connective::kAtom: {
      auto it = assignment.find(formula.atom_name());
      if (it == assignment.end()) throw MissingAtom(formula.atom_name());
      return it->second;
    }
    case Connective::kTop:
      return true;
    case Connective::kBottom:
      return false;
    case Connective::kNot:
      return !evaluate(formula.left(), assignment);
    case Connective::kAnd:
      return evaluate(formula.left(), assignment) &&
             evaluate(formula.right(), assignment);
    case Connective::kOr:
      return evaluate(formula.left(), assignment) ||
             evaluate(formula.right(), assignment);
    case Connective::kXor:
      return evaluate(formula.left(), assignment) !=
             evaluate(formula.right(), assignment);
    case Connective::kImplies:
      return !evaluate(formula.left(), assignment) ||
             evaluate(formula.right(), assignment);
    case Connective::kIff:
      return evaluate(formula.left(), assignment) ==
             evaluate(formula.right(), assignment);
  }
  return false;  // unreachable
}

}  // namespace crbr
