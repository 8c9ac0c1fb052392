#include "doctest.h"

#include <random>

#include "crbr/belief_base.hpp"
#include "crbr/errors.hpp"
#include "crbr/subbase.hpp"

#include "oracle.hpp"

using namespace crbr;

namespace {

BeliefBase base_of(const std::vector<std::string>& texts) {
  std::vector<Formula> formulas;
  for (const std::string& t : texts) formulas.push_back(parse_formula(t));
  return BeliefBase(std::move(formulas));
}

Subbase sb(const std::vector<int>& indices, int frame) {
  return Subbase::from_indices(indices, frame);
}

}  // namespace

TEST_CASE("subbase mask plumbing") {
  CHECK(Subbase::full(0).bits() == 0);
  CHECK(Subbase::full(3).bits() == 0b111);
  CHECK(Subbase().empty());
  CHECK(sb({0, 2}, 4).cardinality() == 2);
  CHECK(sb({0, 2}, 4).indices() == std::vector<int>{0, 2});
  CHECK(sb({0, 2}, 4).contains(2));
  CHECK_FALSE(sb({0, 2}, 4).contains(1));
  CHECK(sb({0}, 4).subset_of(sb({0, 2}, 4)));
  CHECK_FALSE(sb({0, 1}, 4).subset_of(sb({0, 2}, 4)));
  CHECK(sb({0, 1}, 4).intersect(sb({1, 2}, 4)) == sb({1}, 4));

  CHECK_THROWS_AS(Subbase::from_indices({4}, 4), InvalidFamily);
  CHECK_THROWS_AS(Subbase::from_indices({-1}, 4), InvalidFamily);
  CHECK_THROWS_AS(Subbase::from_indices({1, 1}, 4), InvalidFamily);
}

TEST_CASE("families sort canonically and deduplicate") {
  const SubbaseFamily family(
      4, {sb({3}, 4), sb({0, 1}, 4), sb({3}, 4), sb({1, 2}, 4), sb({0}, 4)});
  REQUIRE(family.size() == 4);
  // Larger sets first, then ascending mask value.
  CHECK(family[0] == sb({0, 1}, 4));
  CHECK(family[1] == sb({1, 2}, 4));
  CHECK(family[2] == sb({0}, 4));
  CHECK(family[3] == sb({3}, 4));
  CHECK(family.contains(sb({1, 2}, 4)));
  CHECK_FALSE(family.contains(sb({2}, 4)));

  CHECK_THROWS_AS(SubbaseFamily(2, {sb({2}, 4)}), InvalidFamily);
}

TEST_CASE("maximal consistent subbases of the two-formula bases") {
  const Formula mu = parse_formula("!b");

  const SubbaseFamily w1 = enumerate_inclusion_maximal(base_of({"a", "b"}), mu);
  CHECK(w1 == SubbaseFamily(2, {sb({0}, 2)}));

  const SubbaseFamily w2 =
      enumerate_inclusion_maximal(base_of({"a", "a -> b"}), mu);
  CHECK(w2 == SubbaseFamily(2, {sb({0}, 2), sb({1}, 2)}));
}

TEST_CASE("enumeration edge cases") {
  // Base consistent with mu: the whole base is the single maximal set.
  const BeliefBase consistent = base_of({"a", "a -> b"});
  CHECK(enumerate_inclusion_maximal(consistent, parse_formula("b")) ==
        SubbaseFamily(2, {sb({0, 1}, 2)}));

  // No formula tolerates mu: only the empty subbase remains.
  const BeliefBase hostile = base_of({"a & b", "a & !b"});
  CHECK(enumerate_inclusion_maximal(hostile, parse_formula("!a")) ==
        SubbaseFamily(2, {Subbase()}));

  // Empty base.
  CHECK(enumerate_inclusion_maximal(BeliefBase(), parse_formula("a")) ==
        SubbaseFamily(0, {Subbase()}));

  CHECK_THROWS_AS(
      enumerate_inclusion_maximal(consistent, parse_formula("a & !a")),
      InconsistentInput);
  CHECK_THROWS_AS(
      scan_inclusion_maximal(consistent, parse_formula("a & !a")),
      InconsistentInput);
}

TEST_CASE("opposed literal pairs split into all four combinations") {
  const BeliefBase base = base_of({"a", "!a", "b", "!b"});
  const SubbaseFamily w = enumerate_inclusion_maximal(base, Formula::top());
  CHECK(w == SubbaseFamily(4, {sb({0, 2}, 4), sb({0, 3}, 4), sb({1, 2}, 4),
                               sb({1, 3}, 4)}));

  // Their sub-collection intersections close onto the four singletons.
  const SubbaseFamily inter = all_intersections(w);
  CHECK(inter == SubbaseFamily(4, {sb({0}, 4), sb({1}, 4), sb({2}, 4),
                                   sb({3}, 4)}));
}

TEST_CASE("enumeration, scans, and the brute-force oracle agree") {
  std::mt19937 rng(7004);
  const std::vector<std::string> vars = {"a", "b", "c", "d", "e"};
  for (int i = 0; i < 250; ++i) {
    const int size = 2 + static_cast<int>(rng() % 7);
    const BeliefBase base = testing::random_base(rng, size, vars);
    const Formula mu = testing::random_satisfiable_formula(rng, 3, vars);

    const SubbaseFamily expected = testing::brute_force_family(base, mu);
    CHECK(enumerate_inclusion_maximal(base, mu) == expected);
    CHECK(scan_inclusion_maximal(base, mu, ScanMode::kSerial) == expected);
    CHECK(scan_inclusion_maximal(base, mu, ScanMode::kParallel) == expected);
  }
}

TEST_CASE("cardinality and inclusion filters") {
  const SubbaseFamily family(
      5, {sb({0, 1, 2}, 5), sb({1, 2, 3}, 5), sb({0, 4}, 5), sb({3}, 5)});
  CHECK(filter_cardinality_maximal(family) ==
        SubbaseFamily(5, {sb({0, 1, 2}, 5), sb({1, 2, 3}, 5)}));
  CHECK(filter_cardinality_maximal(SubbaseFamily(5, {})).empty());

  const SubbaseFamily nested(
      5, {sb({0, 1}, 5), sb({0}, 5), sb({2, 3}, 5), sb({3}, 5), sb({4}, 5)});
  CHECK(filter_inclusion_maximal(nested) ==
        SubbaseFamily(5, {sb({0, 1}, 5), sb({2, 3}, 5), sb({4}, 5)}));
}

TEST_CASE("intersections of hand-picked families") {
  // Two disjoint blocks sharing one element pairwise.
  const SubbaseFamily family(
      10, {sb({0, 1, 2, 3}, 10), sb({4, 5, 6, 7}, 10), sb({0, 8, 9}, 10),
           sb({4, 8, 9}, 10)});
  CHECK(all_intersections(family) ==
        SubbaseFamily(10, {sb({8, 9}, 10), sb({0}, 10), sb({4}, 10)}));

  // A single member has nothing to intersect with.
  CHECK(all_intersections(SubbaseFamily(4, {sb({0, 1}, 4)})).empty());

  // Fully disjoint members produce nothing.
  CHECK(all_intersections(SubbaseFamily(4, {sb({0}, 4), sb({1}, 4)})).empty());

  // Nested members: the smaller one is a pairwise intersection.
  CHECK(all_intersections(SubbaseFamily(4, {sb({0, 1}, 4), sb({0}, 4)})) ==
        SubbaseFamily(4, {sb({0}, 4)}));
}

TEST_CASE("intersection closure agrees with direct sub-collection enumeration") {
  std::mt19937 rng(7005);
  for (int i = 0; i < 300; ++i) {
    const int frame = 3 + rng() % 6;
    std::vector<Subbase> sets;
    const std::size_t count = 1 + rng() % 5;
    for (std::size_t k = 0; k < count; ++k) {
      const Mask bits = 1 + rng() % Subbase::full(frame).bits();
      sets.push_back(Subbase(bits));
    }
    const SubbaseFamily family(frame, std::move(sets));
    CHECK(all_intersections(family).sets() ==
          testing::naive_intersections(family));
  }
}
