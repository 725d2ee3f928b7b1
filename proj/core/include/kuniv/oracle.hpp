#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "kuniv/max_index.hpp"
#include "kuniv/nfa.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

// Every accepted word of length <= max_len, in shortlex order.
std::vector<Word> enumerate_language(const Nfa& a, std::size_t max_len);

struct ProductState {
  StateId q;
  std::size_t arches;  // saturates at cap
  std::uint32_t rest;  // bitmask, bit j <-> letter j+1; cleared at cap
  friend bool operator==(const ProductState&, const ProductState&) = default;
};

// Reachable part of the product of an ε-free automaton with the arch counter.
struct ProductAutomaton {
  std::size_t cap = 0;
  std::vector<ProductState> states;  // states[0] is (q0, 0, ∅)
  std::vector<Transition> transitions;
};

// Requires an ε-free automaton over at most 24 letters.
ProductAutomaton build_product(const Nfa& a, std::size_t cap);

// Largest arch count reachable at an accepting state, with cap = n + 1;
// reaching the cap means Unbounded. nullopt when the language is empty.
std::optional<MaxIndex> max_universality_product(const Nfa& epsilon_free);
MaxIndex max_universality_product(const NormalizedNfa& a);

// True iff every accepted word is k-universal.
bool usu_decide(const Nfa& epsilon_free, std::size_t k);
bool usu_decide(const NormalizedNfa& a, std::size_t k);

// Shortest accepted word with at least k arches among words of length <=
// max_len, found by breadth-first search over (state set, arches, rest).
std::optional<Word> find_universal_word(const Nfa& a, std::size_t k, std::size_t max_len);

// Largest universality index among accepted words of length <= max_len;
// nullopt when no such word exists.
std::optional<std::size_t> max_index_within(const Nfa& a, std::size_t max_len);

}  // namespace kuniv
