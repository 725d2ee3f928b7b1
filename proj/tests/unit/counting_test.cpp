#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "kuniv/counting.hpp"
#include "kuniv/errors.hpp"
#include "kuniv/oracle.hpp"

namespace kuniv {
namespace {

using testing::word;

constexpr std::uint32_t kA = 1, kB = 2;  // rest masks for {a}, {b}

TEST(BuildTables, FullAutomatonLengthOne) {
  const PathTables t = build_tables(testing::full_automaton(2), 1, 1);
  EXPECT_EQ(t.t(0, 0, 0, 0), 1);
  EXPECT_EQ(t.t(0, 1, 0, kA), 1);
  EXPECT_EQ(t.t(0, 1, 0, kB), 1);
  EXPECT_EQ(t.u(0, 1), 0);
}

TEST(BuildTables, FullAutomatonLengthTwo) {
  const PathTables t = build_tables(testing::full_automaton(2), 2, 1);
  EXPECT_EQ(t.u(0, 2), 2);
  EXPECT_EQ(t.sat(0, 2, 0), 2);
  EXPECT_EQ(t.t(0, 2, 0, kA), 1);
  EXPECT_EQ(t.t(0, 2, 0, kB), 1);
}

TEST(BuildTables, NoWordsOfLength) {
  const Nfa ab = testing::trie_dfa(Alphabet(2), {{1, 2}});
  const PathTables t = build_tables(ab, 3, 1);
  for (StateId q = 0; q < ab.num_states(); ++q) {
    EXPECT_EQ(t.u(q, 3), 0);
    for (std::uint32_t r = 0; r < 3; ++r) EXPECT_EQ(t.t(q, 3, 0, r), 0);
  }
  EXPECT_THROW(t.t(0, 4, 0, 0), InputError);
  EXPECT_THROW(t.t(0, 1, 0, 3), InputError);
}

// Σ_{c,R} t + u equals the number of length-l paths, computed by matrix powers.
TEST(BuildTables, LayerConsistency) {
  testing::Rng rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t sigma = 1 + rng() % 3;
    const Nfa a = testing::random_nfa(rng, 1 + rng() % 4, sigma, 0.4);
    const std::size_t m = 6, k = 1 + rng() % 2;
    const PathTables t = build_tables(a, m, k);
    std::vector<BigCount> paths(a.num_states());
    paths[a.initial()] = 1;
    for (std::size_t len = 0; len <= m; ++len) {
      if (len > 0) {
        std::vector<BigCount> next(a.num_states());
        for (const Transition& tr : a.transitions()) next[tr.to] += paths[tr.from];
        paths = std::move(next);
      }
      for (StateId q = 0; q < a.num_states(); ++q) {
        BigCount total = t.u(q, len), sat = 0;
        for (std::size_t c = 0; c < k; ++c)
          for (std::uint32_t r = 0; r + 1 < (1u << sigma); ++r) total += t.t(q, len, c, r);
        for (std::uint32_t r = 0; r + 1 < (1u << sigma); ++r) sat += t.sat(q, len, r);
        EXPECT_EQ(total, paths[q]);
        EXPECT_EQ(sat, t.u(q, len));
      }
    }
  }
}

TEST(CountExact, Examples) {
  const Nfa full = testing::full_automaton(2);
  EXPECT_EQ(count_exact(full, 3, 1), 6);
  EXPECT_EQ(count_exact(full, 2, 1, true), 2);
  EXPECT_EQ(count_exact(testing::full_automaton(3), 2, 1), 0);
  EXPECT_EQ(count_exact(full, 4, 2, true), 4);
  EXPECT_EQ(count_exact(full, 4, 2, true), testing::count_by_enumeration(full, 4, 2, true));
}

TEST(CountExact, InclusionExclusion) {
  for (std::size_t sigma : {2u, 3u}) {
    const Nfa full = testing::full_automaton(sigma);
    for (std::size_t m = 0; m <= 12; ++m) {
      BigCount expected = 0;
      BigCount binom = 1;
      for (std::size_t i = 0; i <= sigma; ++i) {
        BigCount term = binom * boost::multiprecision::pow(BigCount(sigma - i), static_cast<unsigned>(m));
        expected += i % 2 == 0 ? term : BigCount(-term);
        binom = binom * (sigma - i) / (i + 1);
      }
      if (m == 0) expected = 0;
      EXPECT_EQ(count_exact(full, m, 1), expected) << "sigma=" << sigma << " m=" << m;
    }
  }
}

TEST(CountExact, BigValues) {
  // 2^200 words of length 200 over {a,b} minus a^200 and b^200.
  const BigCount expected = boost::multiprecision::pow(BigCount(2), 200) - 2;
  EXPECT_EQ(count_exact(testing::full_automaton(2), 200, 1), expected);
}

TEST(CountAtMost, Examples) {
  EXPECT_EQ(count_at_most(testing::full_automaton(2), 3, 1), 8);
  EXPECT_EQ(count_at_most(testing::full_automaton(2), 0, 1), 0);
  const Nfa eps_only(Alphabet(2), 1, 0, {0}, {});
  EXPECT_EQ(count_at_most(eps_only, 5, 1), 0);
}

TEST(CountTotal, Examples) {
  const Nfa a_star_b(Alphabet(2), 2, 0, {1}, {{0, 1, 0}, {0, 2, 1}});
  EXPECT_TRUE(std::holds_alternative<Infinite>(count_total(a_star_b, 1)));
  const Nfa three = testing::trie_dfa(Alphabet(2), {{1, 2}, {2, 1}, {1, 1}});
  EXPECT_EQ(std::get<BigCount>(count_total(three, 1)), 2);
  EXPECT_EQ(std::get<BigCount>(count_total(three, 2)), 0);
  // Infinitely many words, finitely many perfect 1-universal ones: ab only.
  const Nfa ab_then_b(Alphabet(2), 3, 0, {2}, {{0, 1, 1}, {1, 2, 2}, {2, 2, 2}});
  EXPECT_TRUE(std::holds_alternative<Infinite>(count_total(ab_then_b, 1)));
  EXPECT_EQ(std::get<BigCount>(count_total(ab_then_b, 1, true)), 1);
}

TEST(Counting, SemanticsChecks) {
  const Nfa nondet(Alphabet(1), 2, 0, {1}, {{0, 1, 0}, {0, 1, 1}});
  EXPECT_THROW(count_exact(nondet, 2, 1), InputError);
  EXPECT_EQ(count_exact(nondet, 2, 1, false, CountSemantics::Paths), 1);
  const Nfa eps(Alphabet(1), 2, 0, {1}, {{0, kEpsilon, 1}});
  EXPECT_THROW(count_exact(eps, 1, 1, false, CountSemantics::Paths), InputError);
  EXPECT_THROW(count_exact(testing::full_automaton(2), 1, 0), InputError);
  EXPECT_THROW(count_exact(testing::full_automaton(kMaxCountLetters + 1), 1, 1), CapacityError);
  EXPECT_THROW(build_tables(testing::full_automaton(12), 1000, 3), CapacityError);
}

TEST(Counting, PathSemanticsMatchesEnumeration) {
  testing::Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const Nfa a = testing::random_nfa(rng, 1 + rng() % 4, 2, 0.35);
    const std::size_t m = rng() % 8, k = 1 + rng() % 2;
    const bool perfect = rng() % 2;
    EXPECT_EQ(count_exact(a, m, k, perfect, CountSemantics::Paths),
              testing::count_by_enumeration(a, m, k, perfect));
  }
}

TEST(Rank, Examples) {
  const Nfa full = testing::full_automaton(2);
  EXPECT_EQ(rank(full, word("ba", 2), 1, RankMode::Exact), 1);
  EXPECT_EQ(rank(full, word("ab", 2), 1, RankMode::Exact), 0);
  EXPECT_EQ(rank(full, word("aab", 2), 1, RankMode::AtMost), 2);
  EXPECT_THROW(rank(full, word("aab", 2), 1, RankMode::Total), InputError);
  const Nfa three = testing::trie_dfa(Alphabet(2), {{1, 2}, {2, 1}, {1, 1}});
  EXPECT_EQ(rank(three, word("ba", 2), 1, RankMode::Total), 1);
  EXPECT_THROW(rank(full, word("ab", 3), 1, RankMode::Exact), InputError);
}

TEST(Rank, StrictlyMonotoneOverUniversalWords) {
  testing::Rng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Nfa a = testing::random_dfa(rng, 1 + rng() % 4, 2, 0.9);
    const std::size_t k = 1 + rng() % 2;
    std::vector<Word> universal;
    for (std::size_t len = 0; len <= 7; ++len) {
      for (const Word& w : testing::all_words(a.alphabet(), len)) {
        if (accepts(a, w) && universality_index(w) >= k) universal.push_back(w);
      }
    }
    for (std::size_t i = 0; i < universal.size(); ++i) {
      EXPECT_EQ(rank(a, universal[i], k, RankMode::AtMost), i);
    }
  }
}

TEST(PrefixSet, Definition) {
  const auto pr = prefix_set(word("bcb", 3));
  EXPECT_EQ(pr, (std::vector<Word>{word("a", 3), word("ba", 3), word("bb", 3), word("bca", 3)}));
  for (std::size_t i = 0; i < pr.size(); ++i)
    for (std::size_t j = 0; j < pr.size(); ++j)
      if (i != j) EXPECT_FALSE(pr[j].size() >= pr[i].size() && pr[j].factor(0, pr[i].size()) == pr[i]);
  EXPECT_TRUE(prefix_set(word("aaa", 3)).empty());
}

}  // namespace
}  // namespace kuniv
