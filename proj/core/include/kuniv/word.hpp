#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kuniv/letters.hpp"

namespace kuniv {

// A finite word over an explicit alphabet. The alphabet travels with the word
// because the universality index depends on it, not on the letters present.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(Alphabet alphabet, std::vector<Letter> letters);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  // Factor [begin, end).
  Word factor(std::size_t begin, std::size_t end) const;
  Word& push_back(Letter a);
  Word concat(const Word& other) const;

  // Shortlex: shorter first, then lexicographic on integer letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) {
    return a.alphabet_ == b.alphabet_ && a.letters_ == b.letters_;
  }

 private:
  Alphabet alphabet_;
  std::vector<Letter> letters_;
};

// Text encoding: either comma-separated decimal letters ("2,1,1,2") or, when
// sigma <= 26, the a..z shortcut ("baab"). "" and "_" denote the empty word.
Word parse_word(std::string_view text, const Alphabet& alphabet);
// Uses a..z when sigma <= 26, comma-separated decimals otherwise; "" for ε.
std::string format_word(const Word& w);

struct ArchFactorization {
  std::vector<Word> arches;
  Word rest;
};

bool is_subsequence(const Word& u, const Word& w);

ArchFactorization arch_factorize(const Word& w);

// Number of arches of `w`, i.e. the largest k with Subseq_k(w) = Σ^k.
std::size_t universality_index(const Word& w);

// Letters of the rest of `w` (the suffix after its last arch).
LetterSet rest_letters(const Word& w);

// All length-k subsequences of `w`. Exponential; test-scale oracle.
std::set<Word> subseq_set(const Word& w, std::size_t k);

}  // namespace kuniv
