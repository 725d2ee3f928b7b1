#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

#include "kuniv/hardness.hpp"
#include "kuniv/nfa.hpp"
#include "kuniv/regex.hpp"

namespace kuniv::testing {

using Rng = std::mt19937_64;

// Random NFA on n states; each (p, label, q) is present with probability
// `density`, where label 0 (ε) is drawn with weight `epsilon_weight`.
Nfa random_nfa(Rng& rng, std::size_t n, std::size_t sigma, double density,
               double epsilon_weight = 0.0);

// Normalized NFA with at most max_states states after normalization.
NormalizedNfa random_normalized(Rng& rng, std::size_t max_states, std::size_t sigma);

// Random ε-free DFA; each (state, letter) has a successor with probability `density`.
Nfa random_dfa(Rng& rng, std::size_t n, std::size_t sigma, double density);

// One state, a self-loop on every letter, final.
Nfa full_automaton(std::size_t sigma);

// DFA accepting exactly the given words.
Nfa trie_dfa(const Alphabet& alphabet, const std::vector<std::vector<Letter>>& words);

// Random regex AST with exactly `size` nodes over letters 1..sigma.
RegexPtr random_regex_tree(Rng& rng, std::size_t size, std::size_t sigma);
// Random regex of the given size that is not unbounded.
RegexAst random_bounded_regex(Rng& rng, std::size_t size, std::size_t sigma);

}  // namespace kuniv::testing
