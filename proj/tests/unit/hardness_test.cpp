#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "generators.hpp"
#include "kuniv/errors.hpp"
#include "kuniv/hardness.hpp"
#include "kuniv/oracle.hpp"

namespace kuniv {
namespace {

TEST(ParseDimacs, Examples) {
  const CnfInstance a = parse_dimacs("p cnf 2 1\n1 2 0\n");
  EXPECT_EQ(a.num_vars, 2u);
  EXPECT_EQ(a.clauses, (std::vector<std::vector<int>>{{1, 2}}));
  const CnfInstance b = parse_dimacs("c comment\np cnf 1 2\n1 0\n-1 0\n");
  EXPECT_EQ(b.clauses, (std::vector<std::vector<int>>{{1}, {-1}}));
  const CnfInstance c = parse_dimacs("p cnf 3 2\n1 -2\n 3 0 2 0\n");
  EXPECT_EQ(c.clauses, (std::vector<std::vector<int>>{{-2, 1, 3}, {2}}));
}

TEST(ParseDimacs, Errors) {
  EXPECT_THROW(parse_dimacs("garbage\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 x 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p dnf 2 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("1 0\n"), ParseError);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 -1 0\n"), InputError);
}

TEST(ReduceToRegex, Examples) {
  const RegexAst one = reduce_to_regex(CnfInstance{1, {{1}, {-1}}});
  EXPECT_EQ(to_string(one), "a|b");
  EXPECT_FALSE(k_esu_regex(one, 1));

  const RegexAst two = reduce_to_regex(CnfInstance{2, {{1, 2}}});
  EXPECT_EQ(to_string(two), "(a|_)(a|_)");
  EXPECT_TRUE(k_esu_regex(two, 1));

  EXPECT_THROW(reduce_to_regex(CnfInstance{2, {}}), InputError);
}

TEST(ReduceToRegex, SizeBoundAndStarFree) {
  testing::Rng rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 10, m = 1 + rng() % 20;
    const CnfInstance c = random_3sat(n, m, rng());
    const RegexAst r = reduce_to_regex(c);
    EXPECT_TRUE(r.star_free());
    EXPECT_EQ(r.alphabet().size(), m);
    EXPECT_LE(r.size(), 6 * m + 4 * n);
  }
}

TEST(AssignmentToWord, SatisfyingAndFalsifying) {
  const CnfInstance c{3, {{1, -2}, {2, 3}, {-1, -3}}};
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const std::vector<bool> assignment{bool(mask & 1), bool(mask & 2), bool(mask & 4)};
    const Word w = assignment_to_word(c, assignment);
    EXPECT_TRUE(accepts(thompson(reduce_to_regex(c)), w));
    EXPECT_EQ(universality_index(w) >= 1, testing::satisfies(c, assignment));
  }
  EXPECT_THROW(assignment_to_word(c, {true}), InputError);
}

TEST(Random3Sat, DeterministicAndWellFormed) {
  EXPECT_EQ(random_3sat(5, 5, 1), random_3sat(5, 5, 1));
  EXPECT_NE(random_3sat(5, 5, 1), random_3sat(5, 5, 2));
  const CnfInstance c = random_3sat(6, 30, 9);
  for (const auto& cl : c.clauses) {
    ASSERT_EQ(cl.size(), 3u);
    EXPECT_NE(std::abs(cl[0]), std::abs(cl[1]));
    EXPECT_NE(std::abs(cl[0]), std::abs(cl[2]));
    EXPECT_NE(std::abs(cl[1]), std::abs(cl[2]));
  }
  EXPECT_EQ(parse_dimacs(format_dimacs(c)), c);
  EXPECT_THROW(random_3sat(2, 5, 1), InputError);
  EXPECT_THROW(random_3sat(3, 0, 1), InputError);
}

TEST(Reduction, SatisfiabilityEquivalence) {
  testing::Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng() % 8, m = 1 + rng() % 15;
    const CnfInstance c = random_3sat(n, m, rng());
    const bool sat = testing::brute_force_sat(c).has_value();
    const RegexAst r = reduce_to_regex(c);
    EXPECT_EQ(k_esu_regex(r, 1), sat);
    if (m <= 10) {
      const Nfa a = thompson(r);
      EXPECT_EQ(find_universal_word(a, 1, a.num_states()).has_value(), sat);
    }
  }
}

}  // namespace
}  // namespace kuniv
