#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "kuniv/regex.hpp"
#include "kuniv/word.hpp"

namespace kuniv {

// CNF formula; literal v > 0 is x_v, -v its negation.
struct CnfInstance {
  std::size_t num_vars = 0;
  std::vector<std::vector<int>> clauses;

  friend bool operator==(const CnfInstance&, const CnfInstance&) = default;
};

// Throws InputError unless every literal is in range, clauses are nonempty
// and no clause holds a literal together with its negation.
void validate(const CnfInstance& c);

CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfInstance& c);

// Letter j is clause j. Each variable contributes (T_i | F_i), where T_i lists
// the clauses satisfied by x_i = true in increasing order (ε when none) and
// F_i likewise for x_i = false.
RegexAst reduce_to_regex(const CnfInstance& c);

// The word u_1...u_n picking T_i or F_i per variable.
Word assignment_to_word(const CnfInstance& c, const std::vector<bool>& assignment);

// m clauses over 3 distinct variables with uniform signs; deterministic per seed.
CnfInstance random_3sat(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace kuniv
