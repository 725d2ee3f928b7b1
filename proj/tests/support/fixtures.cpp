#include "fixtures.hpp"

#include <fstream>
#include <stdexcept>

namespace kuniv::testing {

std::string data_path(std::string_view name) {
  return std::string(KUNIV_TEST_DATA_DIR) + "/" + std::string(name);
}

Nfa load_nfa(std::string_view name) {
  std::ifstream in(data_path(name));
  if (!in) throw std::runtime_error("missing test data: " + std::string(name));
  return parse_nfa(in);
}

NormalizedNfa load_normalized(std::string_view name) {
  return std::get<NormalizedNfa>(normalize(load_nfa(name)));
}

Word word(std::string_view text, std::size_t sigma) { return parse_word(text, Alphabet(sigma)); }

}  // namespace kuniv::testing
