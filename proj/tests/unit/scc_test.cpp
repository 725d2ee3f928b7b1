#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "generators.hpp"
#include "kuniv/scc.hpp"

namespace kuniv {
namespace {

LetterSet set_of(std::initializer_list<Letter> letters) {
  LetterSet s;
  for (Letter a : letters) s.insert(a);
  return s;
}

TEST(Decompose, ChainHasSingletonComponents) {
  const Nfa chain(Alphabet(2), 3, 0, {2}, {{0, 1, 1}, {1, 2, 2}});
  const SccDecomposition d = decompose(chain);
  EXPECT_EQ(d.num_components(), 3u);
  for (ComponentId c = 0; c < 3; ++c) EXPECT_TRUE(d.v_set(c).empty());
  EXPECT_FALSE(has_unbounded_universality(d, chain.alphabet()));
}

TEST(Decompose, FigureAutomatonA) {
  const NormalizedNfa a = testing::load_normalized("fig1_a.nfa");
  const SccDecomposition d = decompose(a);
  ASSERT_EQ(d.num_components(), 4u);
  for (StateId q = 0; q < 4; ++q) EXPECT_EQ(d.component_of(q), q);
  EXPECT_EQ(d.v_set(0), set_of({1, 2}));
  EXPECT_TRUE(d.v_set(1).empty());
  EXPECT_EQ(d.v_set(2), set_of({2, 3}));
  EXPECT_EQ(d.connecting_labels(0, 1).letters, set_of({3}));
  EXPECT_TRUE(d.connecting_labels(2, 3).epsilon);
  EXPECT_TRUE(d.connecting_labels(0, 2).empty());
  EXPECT_FALSE(has_unbounded_universality(d, a.alphabet()));
}

TEST(Decompose, FullLoopIsUnbounded) {
  const Nfa loop = testing::full_automaton(2);
  const SccDecomposition d = decompose(loop);
  EXPECT_EQ(d.num_components(), 1u);
  EXPECT_EQ(d.v_set(0), set_of({1, 2}));
  EXPECT_TRUE(has_unbounded_universality(d, loop.alphabet()));
}

TEST(Decompose, EpsilonStrippedFromVSets) {
  const Nfa a(Alphabet(2), 2, 0, {1}, {{0, kEpsilon, 1}, {1, kEpsilon, 0}, {0, 1, 0}});
  const SccDecomposition d = decompose(a);
  EXPECT_EQ(d.num_components(), 1u);
  EXPECT_EQ(d.v_set(0), set_of({1}));
}

// Mutual reachability by transitive closure, independent of Tarjan.
std::vector<std::vector<bool>> reachability(const Nfa& a) {
  const std::size_t n = a.num_states();
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (std::size_t q = 0; q < n; ++q) r[q][q] = true;
  for (const Transition& t : a.transitions()) r[t.from][t.to] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

TEST(Decompose, RandomAutomataInvariants) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t sigma = 1 + rng() % 3;
    const NormalizedNfa a = testing::random_normalized(rng, 8, sigma);
    const SccDecomposition d = decompose(a);
    const auto r = reachability(a.nfa());
    const std::size_t n = a.num_states();
    for (StateId p = 0; p < n; ++p) {
      for (StateId q = 0; q < n; ++q) {
        EXPECT_EQ(d.component_of(p) == d.component_of(q), r[p][q] && r[q][p]);
      }
    }
    EXPECT_EQ(d.component_of(a.nfa().initial()), 0u);
    EXPECT_EQ(d.component_of(a.final_state()), d.num_components() - 1);
    for (const auto& [i, j] : d.condensation_edges()) EXPECT_LT(i, j);
    std::vector<LetterSet> v(d.num_components());
    for (const Transition& t : a.nfa().transitions()) {
      const ComponentId ci = d.component_of(t.from), cj = d.component_of(t.to);
      if (ci == cj && t.label != kEpsilon) v[ci].insert(t.label);
      if (ci != cj) {
        const LabelSet l = d.connecting_labels(ci, cj);
        EXPECT_TRUE(t.label == kEpsilon ? l.epsilon : l.letters.contains(t.label));
      }
    }
    for (ComponentId c = 0; c < d.num_components(); ++c) EXPECT_EQ(d.v_set(c), v[c]);
  }
}

TEST(DumpScc, ListsComponents) {
  std::ostringstream out;
  dump_scc(out, decompose(testing::load_normalized("fig1_a.nfa")));
  EXPECT_NE(out.str().find("components 4"), std::string::npos);
  EXPECT_NE(out.str().find("C0 states {0} V={1,2}"), std::string::npos);
}

}  // namespace
}  // namespace kuniv
