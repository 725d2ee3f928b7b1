#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "kuniv/max_index.hpp"
#include "kuniv/nfa.hpp"
#include "kuniv/scc.hpp"

namespace kuniv {

// Largest alphabet the subset DP accepts.
inline constexpr std::size_t kMaxSigmaDpLetters = 24;

// D[i][S]: the largest universality index of a word labelling a walk from the
// initial state that ends in component i and whose rest has alphabet exactly
// S (a strict subset of Σ, bit j <-> letter j+1). Rows are stored sparsely;
// absent cells read as -1.
class SigmaDpTable {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::int32_t>>;  // sorted by mask

  std::int32_t at(std::size_t component, std::uint32_t rest_mask) const;
  const Row& row(std::size_t component) const { return rows_[component]; }
  std::size_t num_components() const noexcept { return rows_.size(); }

 private:
  friend SigmaDpTable build_sigma_table(const NormalizedNfa&, const SccDecomposition&);
  std::vector<Row> rows_;
};

// Requires a bounded automaton (no component covering Σ) and σ <= 24.
SigmaDpTable build_sigma_table(const NormalizedNfa& nfa, const SccDecomposition& d);

MaxIndex max_universality_sigma(const NormalizedNfa& nfa, const SccDecomposition& d);
MaxIndex max_universality_sigma(const NormalizedNfa& nfa);

bool k_esu_sigma(const NormalizedNfa& nfa, std::size_t k);

}  // namespace kuniv
