#pragma once

#include <cstddef>
#include <vector>

#include "kuniv/max_index.hpp"
#include "kuniv/nfa.hpp"
#include "kuniv/scc.hpp"

namespace kuniv {

// States q_1..q_h from pairwise distinct components, ordered by component id.
struct ComponentSequence {
  std::vector<StateId> states;
};

// True iff some walk visiting exactly the components of seq, in order, has a
// 1-universal label.
bool one_arch_feasible(const ComponentSequence& seq, const SccDecomposition& d,
                       const Alphabet& alphabet);

// Greedy arch count along seq; 0 when consecutive components are not connected.
std::size_t max_arches_for_sequence(const ComponentSequence& seq, const SccDecomposition& d,
                                    const Alphabet& alphabet);

struct StatesOptions {
  std::size_t max_states = 24;
  std::size_t workers = 1;
};

MaxIndex max_universality_states(const NormalizedNfa& nfa, const SccDecomposition& d,
                                 const StatesOptions& options = {});
MaxIndex max_universality_states(const NormalizedNfa& nfa, const StatesOptions& options = {});

bool k_esu_states(const NormalizedNfa& nfa, std::size_t k, const StatesOptions& options = {});

}  // namespace kuniv
