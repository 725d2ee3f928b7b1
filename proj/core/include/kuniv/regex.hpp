#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "kuniv/letters.hpp"
#include "kuniv/max_index.hpp"
#include "kuniv/nfa.hpp"

namespace kuniv {

enum class RegexKind { Empty, Epsilon, Letter, Concat, Alt, Star };

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

// Immutable node; subtrees may be shared.
struct RegexNode {
  RegexKind kind;
  Letter letter = 0;  // Letter nodes only
  RegexPtr left;      // Concat, Alt, Star (body)
  RegexPtr right;     // Concat, Alt
};

namespace re {
RegexPtr empty();
RegexPtr epsilon();
RegexPtr letter(Letter a);
RegexPtr concat(RegexPtr l, RegexPtr r);
RegexPtr alt(RegexPtr l, RegexPtr r);
RegexPtr star(RegexPtr body);
}  // namespace re

class RegexAst {
 public:
  RegexAst(Alphabet alphabet, RegexPtr root);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const RegexNode& root() const noexcept { return *root_; }
  const RegexPtr& root_ptr() const noexcept { return root_; }
  // Node count |R|.
  std::size_t size() const noexcept { return size_; }
  bool star_free() const noexcept;

  friend bool operator==(const RegexAst& a, const RegexAst& b);

 private:
  Alphabet alphabet_;
  RegexPtr root_;
  std::size_t size_;
};

// Structural equality.
bool same_tree(const RegexNode& a, const RegexNode& b);

// Letters a-z (1..26), <n> for any letter, '_' for ε, '#' for ∅, '|', '*',
// parentheses; whitespace is ignored. Concatenation nests to the right,
// alternation to the left.
RegexAst parse_regex(std::string_view text, const Alphabet& alphabet);
std::string to_string(const RegexAst& r);

// Letters occurring syntactically below the node.
LetterSet letters_of(const RegexNode& node);

bool regex_unbounded(const RegexAst& r);

// Replaces each star by two copies of its body's letters in increasing order;
// a star over no letters becomes ε. InputError if regex_unbounded(r).
RegexAst star_free_reduce(const RegexAst& r);

// Thompson automaton with a single final state.
Nfa thompson(const RegexAst& r);

bool k_esu_regex(std::string_view text, const Alphabet& alphabet, std::size_t k);
bool k_esu_regex(const RegexAst& r, std::size_t k);
// nullopt when the language is empty.
std::optional<MaxIndex> max_universality_regex(const RegexAst& r);

}  // namespace kuniv
