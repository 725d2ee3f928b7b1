#pragma once

#include <cstddef>
#include <cstdint>

#include "kuniv/nfa.hpp"

namespace kuniv::bench {

// Chain of small clusters; inner edges avoid one letter per cluster so the
// instance stays bounded, forward edges skip ahead at most 8 clusters.
NormalizedNfa layered(std::size_t n, std::size_t sigma, std::size_t edges, std::size_t width,
                      std::uint64_t seed);

// Random ε-free DFA with every (state, letter) defined.
Nfa complete_dfa(std::size_t n, std::size_t sigma, std::uint64_t seed);

}  // namespace kuniv::bench
