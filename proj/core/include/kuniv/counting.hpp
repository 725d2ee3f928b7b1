#pragma once

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kuniv/nfa.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

using BigCount = boost::multiprecision::cpp_int;

struct Infinite {
  friend bool operator==(Infinite, Infinite) { return true; }
};
using TotalCount = std::variant<BigCount, Infinite>;

// Words: the automaton must be deterministic and every accepted word counts
// once. Paths: any ε-free automaton; each accepting path counts once and
// paths are ordered by their labels.
enum class CountSemantics { Words, Paths };

enum class RankMode { Exact, AtMost, Total };

// Largest alphabet handled by the tables.
inline constexpr std::size_t kMaxCountLetters = 20;
// Upper bound on the number of table cells held in memory at once.
inline constexpr std::size_t kMaxTableCells = std::size_t{1} << 22;

// Path counts by length for an ε-free automaton. Rest sets are bitmasks
// (bit j <-> letter j+1) and never equal Σ.
//   t(q, l, c, R): length-l paths to q with c < k arches and rest alphabet R
//   u(q, l):       length-l paths to q with at least k arches
//   sat(q, l, R):  the paths counted by u(q, l) whose rest alphabet is R
class PathTables {
 public:
  std::size_t num_states() const noexcept { return n_; }
  std::size_t max_length() const noexcept { return m_; }
  std::size_t k() const noexcept { return k_; }

  const BigCount& t(StateId q, std::size_t len, std::size_t arches, std::uint32_t rest) const;
  const BigCount& u(StateId q, std::size_t len) const;
  const BigCount& sat(StateId q, std::size_t len, std::uint32_t rest) const;

 private:
  friend PathTables build_tables(const Nfa&, std::size_t, std::size_t);
  std::size_t n_ = 0, m_ = 0, k_ = 0, sigma_ = 0;
  std::vector<BigCount> t_, u_, sat_;
};

// Requires an ε-free automaton and k >= 1.
PathTables build_tables(const Nfa& a, std::size_t m, std::size_t k);

// k-universal accepted words (or paths) of length exactly m. With `perfect`,
// only those whose rest is empty.
BigCount count_exact(const Nfa& a, std::size_t m, std::size_t k, bool perfect = false,
                     CountSemantics semantics = CountSemantics::Words);
BigCount count_at_most(const Nfa& a, std::size_t m, std::size_t k, bool perfect = false,
                       CountSemantics semantics = CountSemantics::Words);
TotalCount count_total(const Nfa& a, std::size_t k, bool perfect = false,
                       CountSemantics semantics = CountSemantics::Words);

// Number of counted words (paths) smaller than w: lexicographic among words of
// length |w| for Exact, shortlex otherwise.
BigCount rank(const Nfa& a, const Word& w, std::size_t k, RankMode mode, bool perfect = false,
              CountSemantics semantics = CountSemantics::Words);

// {w[1..i]·x : 0 <= i < |w|, x < w[i+1]}, in increasing order.
std::vector<Word> prefix_set(const Word& w);

}  // namespace kuniv
