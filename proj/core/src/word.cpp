#include "kuniv/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "kuniv/errors.hpp"

namespace kuniv {

namespace {

void require_same_alphabet(const Word& a, const Word& b) {
  if (!(a.alphabet() == b.alphabet())) {
    throw InputError("words are over different alphabets");
  }
}

}  // namespace

Word::Word(Alphabet alphabet, std::vector<Letter> letters)
    : alphabet_(alphabet), letters_(std::move(letters)) {
  for (Letter a : letters_) {
    if (!alphabet_.contains(a)) {
      throw InputError("letter " + std::to_string(a) + " outside alphabet of size " +
                       std::to_string(alphabet_.size()));
    }
  }
}

Word Word::factor(std::size_t begin, std::size_t end) const {
  end = std::min(end, letters_.size());
  begin = std::min(begin, end);
  Word out(alphabet_);
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                      letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

Word& Word::push_back(Letter a) {
  if (!alphabet_.contains(a)) {
    throw InputError("letter " + std::to_string(a) + " outside alphabet");
  }
  letters_.push_back(a);
  return *this;
}

Word Word::concat(const Word& other) const {
  require_same_alphabet(*this, other);
  Word out = *this;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  return out;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.alphabet_.size() <=> b.alphabet_.size(); c != 0) return c;
  if (auto c = a.letters_.size() <=> b.letters_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(),
                                                b.letters_.begin(), b.letters_.end());
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  if (text.empty() || text == "_") return Word(alphabet);
  const bool numeric = std::any_of(text.begin(), text.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  std::vector<Letter> letters;
  if (numeric) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t comma = std::min(text.find(',', pos), text.size());
      std::string_view token = text.substr(pos, comma - pos);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
      while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
      Letter value = 0;
      auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || end != token.data() + token.size()) {
        throw ParseError("invalid letter '" + std::string(token) + "' in word", pos);
      }
      letters.push_back(value);
      pos = comma + 1;
    }
  } else {
    if (alphabet.size() > 26) {
      throw InputError("the a-z word shortcut needs sigma <= 26; use comma-separated letters");
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (c < 'a' || c > 'z') throw ParseError(std::string("invalid character '") + c + "' in word", i);
      letters.push_back(static_cast<Letter>(c - 'a' + 1));
    }
  }
  return Word(alphabet, std::move(letters));
}

std::string format_word(const Word& w) {
  std::string out;
  if (w.alphabet().size() <= 26) {
    for (Letter a : w.letters()) out.push_back(static_cast<char>('a' + a - 1));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(w[i]);
  }
  return out;
}

bool is_subsequence(const Word& u, const Word& w) {
  require_same_alphabet(u, w);
  std::size_t i = 0;
  for (Letter a : w.letters()) {
    if (i < u.size() && u[i] == a) ++i;
  }
  return i == u.size();
}

ArchFactorization arch_factorize(const Word& w) {
  const std::size_t sigma = w.alphabet().size();
  ArchFactorization result{{}, Word(w.alphabet())};
  // seen[a] == arch number in which letter a was last seen; avoids clearing.
  std::vector<std::size_t> seen(sigma + 1, 0);
  std::size_t arch_no = 1;
  std::size_t distinct = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter a = w[i];
    if (seen[a] != arch_no) {
      seen[a] = arch_no;
      if (++distinct == sigma) {
        result.arches.push_back(w.factor(start, i + 1));
        start = i + 1;
        distinct = 0;
        ++arch_no;
      }
    }
  }
  result.rest = w.factor(start, w.size());
  return result;
}

std::size_t universality_index(const Word& w) {
  const std::size_t sigma = w.alphabet().size();
  std::vector<std::size_t> seen(sigma + 1, 0);
  std::size_t arches = 0;
  std::size_t distinct = 0;
  for (Letter a : w.letters()) {
    if (seen[a] != arches + 1) {
      seen[a] = arches + 1;
      if (++distinct == sigma) {
        ++arches;
        distinct = 0;
      }
    }
  }
  return arches;
}

LetterSet rest_letters(const Word& w) {
  const Word tail = arch_factorize(w).rest;
  LetterSet rest;
  for (Letter a : tail.letters()) rest.insert(a);
  return rest;
}

namespace {

void collect_subsequences(const Word& w, std::size_t k, std::size_t from,
                          std::vector<Letter>& current, std::set<Word>& out) {
  if (current.size() == k) {
    out.insert(Word(w.alphabet(), current));
    return;
  }
  const std::size_t need = k - current.size();
  for (std::size_t i = from; i + need <= w.size(); ++i) {
    current.push_back(w[i]);
    collect_subsequences(w, k, i + 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::set<Word> subseq_set(const Word& w, std::size_t k) {
  std::set<Word> out;
  if (k > w.size()) return out;
  std::vector<Letter> current;
  current.reserve(k);
  collect_subsequences(w, k, 0, current, out);
  return out;
}

}  // namespace kuniv
