#pragma once

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace kuniv {

// Letters are the integers 1..sigma. Label 0 is reserved for epsilon inside
// automata.
using Letter = std::uint32_t;

inline constexpr Letter kEpsilon = 0;

// Largest alphabet supported by the set-based automaton analyses.
inline constexpr std::size_t kMaxSetLetters = 256;

class Alphabet {
 public:
  explicit Alphabet(std::size_t sigma);

  std::size_t size() const noexcept { return sigma_; }
  bool contains(Letter a) const noexcept { return a >= 1 && a <= sigma_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::size_t sigma_;
};

// A set of letters drawn from 1..kMaxSetLetters.
class LetterSet {
 public:
  LetterSet() = default;

  static LetterSet full(const Alphabet& alphabet);
  // Bit i of `mask` stands for letter i+1.
  static LetterSet from_mask(std::uint64_t mask);

  void insert(Letter a) { bits_.set(a - 1); }
  void erase(Letter a) { bits_.reset(a - 1); }
  bool contains(Letter a) const { return a >= 1 && a <= kMaxSetLetters && bits_.test(a - 1); }

  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }
  bool is_subset_of(const LetterSet& other) const { return (bits_ & ~other.bits_).none(); }

  // Requires every member to be <= 64.
  std::uint64_t to_mask() const;
  std::vector<Letter> letters() const;

  LetterSet& operator|=(const LetterSet& o) { bits_ |= o.bits_; return *this; }
  LetterSet& operator&=(const LetterSet& o) { bits_ &= o.bits_; return *this; }
  friend LetterSet operator|(LetterSet a, const LetterSet& b) { return a |= b; }
  friend LetterSet operator&(LetterSet a, const LetterSet& b) { return a &= b; }
  friend LetterSet operator-(LetterSet a, const LetterSet& b) {
    a.bits_ &= ~b.bits_;
    return a;
  }
  friend bool operator==(const LetterSet&, const LetterSet&) = default;

 private:
  std::bitset<kMaxSetLetters> bits_;
};

}  // namespace kuniv
