#include "doctest.h"

#include <random>

#include "crbr/errors.hpp"
#include "crbr/sat.hpp"

#include "oracle.hpp"

using namespace crbr;

namespace {

std::vector<Formula> parse_all(const std::vector<std::string>& texts) {
  std::vector<Formula> out;
  for (const std::string& t : texts) out.push_back(parse_formula(t));
  return out;
}

}  // namespace

TEST_CASE("satisfiability of hand-picked formula sets") {
  CHECK(is_satisfiable({}));
  CHECK(is_satisfiable(parse_all({"a"})));
  CHECK(is_satisfiable(parse_all({"a", "b", "a -> b"})));
  CHECK_FALSE(is_satisfiable(parse_all({"a", "!a"})));
  CHECK_FALSE(is_satisfiable(parse_all({"a & !a"})));
  CHECK_FALSE(is_satisfiable(parse_all({"a", "a -> b", "!b"})));
  CHECK_FALSE(
      is_satisfiable(parse_all({"a | b", "!a | b", "a | !b", "!a | !b"})));
  CHECK(is_satisfiable(parse_all({"top"})));
  CHECK_FALSE(is_satisfiable(parse_all({"bot"})));
  CHECK_FALSE(is_satisfiable(parse_all({"a <-> !a"})));
  CHECK(is_satisfiable(parse_all({"a ^ b", "a"})));
  CHECK_FALSE(is_satisfiable(parse_all({"a ^ a"})));
  // A base plus input that drives a revision to retract something.
  CHECK_FALSE(is_satisfiable(parse_all({"a", "b", "!b"})));
  CHECK(is_satisfiable(parse_all({"a", "!b"})));
}

TEST_CASE("entailment and equivalence") {
  CHECK(entails(parse_all({"a", "a -> b"}), parse_formula("b")));
  CHECK_FALSE(entails(parse_all({"a | b"}), parse_formula("a")));
  CHECK(entails({}, parse_formula("a | !a")));
  CHECK(entails(parse_all({"bot"}), parse_formula("q")));
  CHECK(entails(parse_all({"a & b"}), parse_formula("a")));

  CHECK(equivalent(parse_formula("a -> b"), parse_formula("!a | b")));
  CHECK(equivalent(parse_formula("a ^ b"), parse_formula("!(a <-> b)")));
  CHECK(equivalent(parse_formula("!(a | b)"), parse_formula("!a & !b")));
  CHECK_FALSE(equivalent(parse_formula("a -> b"), parse_formula("b -> a")));
  CHECK(equivalent(parse_formula("top"), parse_formula("a | !a")));
}

TEST_CASE("the truth-table kernels agree with dpll on hand cases") {
  const std::vector<std::vector<std::string>> cases = {
      {"a", "!a"},
      {"a -> b", "b -> c", "a", "!c"},
      {"a ^ b ^ c"},
      {"(a | b) & (!a | c)"},
      {"top", "bot"},
  };
  for (const auto& texts : cases) {
    const std::vector<Formula> fs = parse_all(texts);
    const bool expected = is_satisfiable(fs);
    CHECK(truth_table_satisfiable(fs, ScanMode::kSerial) == expected);
    CHECK(truth_table_satisfiable(fs, ScanMode::kParallel) == expected);
  }
}

TEST_CASE("all satisfiability routes agree on random formula sets") {
  std::mt19937 rng(7002);
  const std::vector<std::string> vars = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 300; ++i) {
    std::vector<Formula> fs;
    const std::size_t count = 1 + rng() % 4;
    for (std::size_t k = 0; k < count; ++k)
      fs.push_back(testing::random_formula(rng, 3, vars));

    const bool expected = testing::tt_satisfiable(fs);
    CHECK(is_satisfiable(fs) == expected);
    CHECK(truth_table_satisfiable(fs, ScanMode::kSerial) == expected);
    CHECK(truth_table_satisfiable(fs, ScanMode::kParallel) == expected);
  }
}

TEST_CASE("entailment agrees with the truth-table oracle on random inputs") {
  std::mt19937 rng(7003);
  const std::vector<std::string> vars = {"a", "b", "c", "d"};
  for (int i = 0; i < 200; ++i) {
    const std::vector<Formula> premises = {
        testing::random_formula(rng, 3, vars),
        testing::random_formula(rng, 3, vars)};
    const Formula psi = testing::random_formula(rng, 3, vars);
    CHECK(entails(premises, psi) == testing::tt_entails(premises, psi));
  }
}

TEST_CASE("the variable cap is enforced") {
  std::vector<Formula> many;
  for (int i = 0; i < 25; ++i)
    many.push_back(Formula::atom("v" + std::to_string(i)));

  CHECK_THROWS_AS(is_satisfiable(many), CapExceeded);
  CHECK_THROWS_AS(truth_table_satisfiable(many, ScanMode::kSerial),
                  CapExceeded);

  many.pop_back();  // 24 variables: exactly at the default cap
  CHECK(is_satisfiable(many));

  Limits tight;
  tight.max_vars = 3;
  CHECK_THROWS_AS(
      is_satisfiable(parse_all({"a & b & c & d"}), tight), CapExceeded);
  CHECK(is_satisfiable(parse_all({"a & b & c"}), tight));
}
