#include "kuniv/letters.hpp"

#include "kuniv/errors.hpp"

namespace kuniv {

Alphabet::Alphabet(std::size_t sigma) : sigma_(sigma) {
  if (sigma == 0) throw InputError("alphabet must contain at least one letter");
}

LetterSet LetterSet::full(const Alphabet& alphabet) {
  if (alphabet.size() > kMaxSetLetters) {
    throw CapacityError("alphabet too large for letter sets (max " +
                        std::to_string(kMaxSetLetters) + ")");
  }
  LetterSet s;
  for (Letter a = 1; a <= alphabet.size(); ++a) s.insert(a);
  return s;
}

LetterSet LetterSet::from_mask(std::uint64_t mask) {
  LetterSet s;
  for (Letter a = 1; mask != 0; ++a, mask >>= 1) {
    if (mask & 1U) s.insert(a);
  }
  return s;
}

std::uint64_t LetterSet::to_mask() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < kMaxSetLetters; ++i) {
    if (!bits_.test(i)) continue;
    if (i >= 64) throw CapacityError("letter set does not fit a 64-bit mask");
    mask |= std::uint64_t{1} << i;
  }
  return mask;
}

std::vector<Letter> LetterSet::letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < kMaxSetLetters; ++i) {
    if (bits_.test(i)) out.push_back(static_cast<Letter>(i + 1));
  }
  return out;
}

}  // namespace kuniv
