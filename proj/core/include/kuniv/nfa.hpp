#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kuniv/letters.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

using StateId = std::uint32_t;

struct Transition {
  StateId from;
  Letter label;  // kEpsilon (0) for ε
  StateId to;

  friend auto operator<=>(const Transition&, const Transition&) = default;
};

// Immutable NFA with ε-transitions. Transitions are kept sorted by
// (from, label, to) without duplicates, so the outgoing edges of a state form
// a contiguous range.
class Nfa {
 public:
  Nfa(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<StateId> finals,
      std::vector<Transition> transitions);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t num_states() const noexcept { return num_states_; }
  StateId initial() const noexcept { return initial_; }
  std::span<const StateId> finals() const noexcept { return finals_; }
  bool is_final(StateId q) const;
  std::span<const Transition> transitions() const noexcept { return transitions_; }
  std::span<const Transition> out_edges(StateId q) const;

  bool has_epsilon() const noexcept { return has_epsilon_; }
  // No ε-transitions and at most one successor per (state, letter).
  bool is_deterministic() const;

  friend bool operator==(const Nfa&, const Nfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t num_states_;
  StateId initial_;
  std::vector<StateId> finals_;
  std::vector<Transition> transitions_;
  std::vector<std::size_t> out_offsets_;
  bool has_epsilon_ = false;
};

// Trim NFA with a single final state that has no outgoing transitions.
class NormalizedNfa {
 public:
  const Nfa& nfa() const noexcept { return nfa_; }
  StateId final_state() const noexcept { return nfa_.finals().front(); }
  std::size_t num_states() const noexcept { return nfa_.num_states(); }
  const Alphabet& alphabet() const noexcept { return nfa_.alphabet(); }

  // Validates the invariants; throws InputError when they do not hold.
  static NormalizedNfa from_normalized(Nfa nfa);

 private:
  explicit NormalizedNfa(Nfa nfa) : nfa_(std::move(nfa)) {}
  Nfa nfa_;
};

struct EmptyLanguage {
  friend bool operator==(EmptyLanguage, EmptyLanguage) { return true; }
};

// Line-oriented text format:
//   nfa / sigma N / states N / initial Q / final Q... / "from label to"... / end
Nfa parse_nfa(std::istream& in);
Nfa parse_nfa(std::string_view text);
std::string format_nfa(const Nfa& nfa);

// Removes states that are not both accessible and co-accessible; ids are
// renumbered densely preserving relative order. nullopt iff L(nfa) = ∅.
std::optional<Nfa> trim(const Nfa& nfa);

// Appends a fresh final state reached by ε from every final, then trims.
std::variant<NormalizedNfa, EmptyLanguage> normalize(const Nfa& nfa);

// ε-closure construction. The result is trim and ε-free; it generally has
// several final states (a single ε-free final state without outgoing
// transitions cannot represent languages such as {ε, a}).
Nfa remove_epsilon(const NormalizedNfa& nfa);

bool accepts(const Nfa& nfa, const Word& w);

// Set of states reachable from `states` through ε-transitions.
std::vector<bool> epsilon_closure(const Nfa& nfa, std::vector<bool> states);

}  // namespace kuniv
