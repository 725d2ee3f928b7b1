#pragma once

#include <string>
#include <string_view>

#include "kuniv/nfa.hpp"
#include "kuniv/word.hpp"

namespace kuniv::testing {

std::string data_path(std::string_view name);
Nfa load_nfa(std::string_view name);
NormalizedNfa load_normalized(std::string_view name);

// Word in the a..z shortcut (or comma-separated) over 1..sigma.
Word word(std::string_view text, std::size_t sigma);

}  // namespace kuniv::testing
