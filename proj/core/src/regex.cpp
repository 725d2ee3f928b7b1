#include "kuniv/regex.hpp"

#include <cctype>
#include <functional>

#include "kuniv/errors.hpp"
#include "kuniv/scc.hpp"
#include "kuniv/sigma_dp.hpp"

namespace kuniv {

namespace re {
namespace {
RegexPtr make(RegexKind kind, Letter a, RegexPtr l, RegexPtr r) {
  return std::make_shared<const RegexNode>(RegexNode{kind, a, std::move(l), std::move(r)});
}
}  // namespace

RegexPtr empty() { return make(RegexKind::Empty, 0, nullptr, nullptr); }
RegexPtr epsilon() { return make(RegexKind::Epsilon, 0, nullptr, nullptr); }
RegexPtr letter(Letter a) { return make(RegexKind::Letter, a, nullptr, nullptr); }
RegexPtr concat(RegexPtr l, RegexPtr r) {
  return make(RegexKind::Concat, 0, std::move(l), std::move(r));
}
RegexPtr alt(RegexPtr l, RegexPtr r) { return make(RegexKind::Alt, 0, std::move(l), std::move(r)); }
RegexPtr star(RegexPtr body) { return make(RegexKind::Star, 0, std::move(body), nullptr); }
}  // namespace re

namespace {

std::size_t count_nodes(const RegexNode& n) {
  std::size_t total = 1;
  if (n.left) total += count_nodes(*n.left);
  if (n.right) total += count_nodes(*n.right);
  return total;
}

void check_letters(const RegexNode& n, const Alphabet& alphabet) {
  if (n.kind == RegexKind::Letter && !alphabet.contains(n.letter)) {
    throw InputError("regex letter out of alphabet: " + std::to_string(n.letter));
  }
  if (n.left) check_letters(*n.left, alphabet);
  if (n.right) check_letters(*n.right, alphabet);
}

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  RegexPtr parse() {
    RegexPtr r = alternation();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("regex syntax error at position " + std::to_string(pos_) + ": " + what,
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek_atom_start() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return (c >= 'a' && c <= 'z') || c == '_' || c == '#' || c == '(' || c == '<';
  }

  RegexPtr alternation() {
    RegexPtr r = concatenation();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '|') return r;
      ++pos_;
      r = re::alt(std::move(r), concatenation());
    }
  }

  RegexPtr concatenation() {
    std::vector<RegexPtr> parts;
    while (peek_atom_start()) parts.push_back(postfix());
    if (parts.empty()) fail("expected an expression");
    RegexPtr r = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) r = re::concat(parts[i], std::move(r));
    return r;
  }

  RegexPtr postfix() {
    RegexPtr r = atom();
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '*') return r;
      ++pos_;
      r = re::star(std::move(r));
    }
  }

  RegexPtr atom() {
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RegexPtr r = alternation();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (c == '_') {
      ++pos_;
      return re::epsilon();
    }
    if (c == '#') {
      ++pos_;
      return re::empty();
    }
    if (c == '<') return numbered_letter();
    return make_letter(static_cast<Letter>(c - 'a' + 1));
  }

  RegexPtr numbered_letter() {
    const std::size_t start = pos_++;
    Letter value = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 100000000) fail("letter number too large");
      value = value * 10 + static_cast<Letter>(text_[pos_++] - '0');
      ++digits;
    }
    if (digits == 0 || pos_ >= text_.size() || text_[pos_] != '>') {
      pos_ = start;
      fail("malformed numbered letter, expected <n>");
    }
    ++pos_;
    return checked_letter(value, start);
  }

  RegexPtr make_letter(Letter a) {
    const std::size_t at = pos_++;
    return checked_letter(a, at);
  }

  RegexPtr checked_letter(Letter a, std::size_t at) {
    if (!alphabet_.contains(a)) {
      pos_ = at;
      fail("letter out of alphabet (sigma=" + std::to_string(alphabet_.size()) + ")");
    }
    return re::letter(a);
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

void print(const RegexNode& n, bool numbered, std::string& out) {
  auto child = [&](const RegexNode& c, bool parens) {
    if (parens) out += '(';
    print(c, numbered, out);
    if (parens) out += ')';
  };
  switch (n.kind) {
    case RegexKind::Empty:
      out += '#';
      break;
    case RegexKind::Epsilon:
      out += '_';
      break;
    case RegexKind::Letter:
      if (numbered) {
        out += '<' + std::to_string(n.letter) + '>';
      } else {
        out += static_cast<char>('a' + n.letter - 1);
      }
      break;
    case RegexKind::Concat:
      child(*n.left, n.left->kind == RegexKind::Alt);
      child(*n.right, n.right->kind == RegexKind::Alt);
      break;
    case RegexKind::Alt:
      child(*n.left, false);
      out += '|';
      child(*n.right, false);
      break;
    case RegexKind::Star:
      child(*n.left, n.left->kind == RegexKind::Concat || n.left->kind == RegexKind::Alt);
      out += '*';
      break;
  }
}

RegexPtr reduce(const RegexPtr& n, const LetterSet& sigma) {
  switch (n->kind) {
    case RegexKind::Empty:
    case RegexKind::Epsilon:
    case RegexKind::Letter:
      return n;
    case RegexKind::Concat:
    case RegexKind::Alt: {
      RegexPtr l = reduce(n->left, sigma);
      RegexPtr r = reduce(n->right, sigma);
      if (l == n->left && r == n->right) return n;
      return n->kind == RegexKind::Concat ? re::concat(std::move(l), std::move(r))
                                          : re::alt(std::move(l), std::move(r));
    }
    case RegexKind::Star: {
      const std::vector<Letter> body = letters_of(*n->left).letters();
      if (body.empty()) return re::epsilon();
      if (body.size() == sigma.size()) throw InputError("star-free reduction of an unbounded regex");
      std::vector<Letter> twice(body);
      twice.insert(twice.end(), body.begin(), body.end());
      RegexPtr r = re::letter(twice.back());
      for (std::size_t i = twice.size() - 1; i-- > 0;) r = re::concat(re::letter(twice[i]), r);
      return r;
    }
  }
  return n;
}

struct Fragment {
  StateId start, end;
};

class ThompsonBuilder {
 public:
  Fragment build(const RegexNode& n) {
    switch (n.kind) {
      case RegexKind::Empty:
        return {fresh(), fresh()};
      case RegexKind::Epsilon:
      case RegexKind::Letter: {
        const Fragment f{fresh(), fresh()};
        edges_.push_back({f.start, n.kind == RegexKind::Letter ? n.letter : kEpsilon, f.end});
        return f;
      }
      case RegexKind::Concat: {
        const Fragment l = build(*n.left);
        const Fragment r = build(*n.right);
        edges_.push_back({l.end, kEpsilon, r.start});
        return {l.start, r.end};
      }
      case RegexKind::Alt: {
        const StateId s = fresh();
        const Fragment l = build(*n.left);
        const Fragment r = build(*n.right);
        const Fragment out{s, fresh()};
        edges_.push_back({out.start, kEpsilon, l.start});
        edges_.push_back({out.start, kEpsilon, r.start});
        edges_.push_back({l.end, kEpsilon, out.end});
        edges_.push_back({r.end, kEpsilon, out.end});
        return out;
      }
      case RegexKind::Star: {
        const StateId s = fresh();
        const Fragment b = build(*n.left);
        const StateId t = fresh();
        edges_.push_back({s, kEpsilon, b.start});
        edges_.push_back({s, kEpsilon, t});
        edges_.push_back({b.end, kEpsilon, b.start});
        edges_.push_back({b.end, kEpsilon, t});
        return {s, t};
      }
    }
    return {0, 0};
  }

  std::size_t num_states() const { return next_; }
  std::vector<Transition> take_edges() { return std::move(edges_); }

 private:
  StateId fresh() { return static_cast<StateId>(next_++); }
  std::size_t next_ = 0;
  std::vector<Transition> edges_;
};

}  // namespace

RegexAst::RegexAst(Alphabet alphabet, RegexPtr root)
    : alphabet_(alphabet), root_(std::move(root)) {
  if (!root_) throw InputError("regex root is null");
  check_letters(*root_, alphabet_);
  size_ = count_nodes(*root_);
}

bool RegexAst::star_free() const noexcept {
  std::function<bool(const RegexNode&)> walk = [&](const RegexNode& n) {
    if (n.kind == RegexKind::Star) return false;
    return (!n.left || walk(*n.left)) && (!n.right || walk(*n.right));
  };
  return walk(*root_);
}

bool same_tree(const RegexNode& a, const RegexNode& b) {
  if (a.kind != b.kind || a.letter != b.letter) return false;
  if (static_cast<bool>(a.left) != static_cast<bool>(b.left)) return false;
  if (static_cast<bool>(a.right) != static_cast<bool>(b.right)) return false;
  return (!a.left || same_tree(*a.left, *b.left)) && (!a.right || same_tree(*a.right, *b.right));
}

bool operator==(const RegexAst& a, const RegexAst& b) {
  return a.alphabet_.size() == b.alphabet_.size() && same_tree(*a.root_, *b.root_);
}

RegexAst parse_regex(std::string_view text, const Alphabet& alphabet) {
  return RegexAst(alphabet, Parser(text, alphabet).parse());
}

std::string to_string(const RegexAst& r) {
  std::string out;
  print(r.root(), r.alphabet().size() > 26, out);
  return out;
}

LetterSet letters_of(const RegexNode& node) {
  LetterSet s;
  if (node.kind == RegexKind::Letter) s.insert(node.letter);
  if (node.left) s = s | letters_of(*node.left);
  if (node.right) s = s | letters_of(*node.right);
  return s;
}

bool regex_unbounded(const RegexAst& r) {
  const std::size_t sigma = r.alphabet().size();
  // Post-order: each node's letter set is computed once.
  std::function<LetterSet(const RegexNode&, bool&)> walk = [&](const RegexNode& n, bool& hit) {
    LetterSet s;
    if (n.kind == RegexKind::Letter) s.insert(n.letter);
    if (n.left) s = s | walk(*n.left, hit);
    if (n.right) s = s | walk(*n.right, hit);
    if (n.kind == RegexKind::Star && s.size() == sigma) hit = true;
    return s;
  };
  bool hit = false;
  walk(r.root(), hit);
  return hit;
}

RegexAst star_free_reduce(const RegexAst& r) {
  if (regex_unbounded(r)) throw InputError("star-free reduction of an unbounded regex");
  return RegexAst(r.alphabet(), reduce(r.root_ptr(), LetterSet::full(r.alphabet())));
}

Nfa thompson(const RegexAst& r) {
  ThompsonBuilder b;
  const Fragment f = b.build(r.root());
  const std::size_t n = b.num_states();
  return Nfa(r.alphabet(), n, f.start, {f.end}, b.take_edges());
}

std::optional<MaxIndex> max_universality_regex(const RegexAst& r) {
  if (regex_unbounded(r)) return MaxIndex::unbounded();
  auto normalized = normalize(thompson(star_free_reduce(r)));
  if (!std::holds_alternative<NormalizedNfa>(normalized)) return std::nullopt;
  return max_universality_sigma(std::get<NormalizedNfa>(normalized));
}

bool k_esu_regex(const RegexAst& r, std::size_t k) {
  const auto m = max_universality_regex(r);
  return m && m->reaches(k);
}

bool k_esu_regex(std::string_view text, const Alphabet& alphabet, std::size_t k) {
  return k_esu_regex(parse_regex(text, alphabet), k);
}

}  // namespace kuniv
