#include "kuniv/nfa.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "kuniv/errors.hpp"

namespace kuniv {

Nfa::Nfa(Alphabet alphabet, std::size_t num_states, StateId initial, std::vector<StateId> finals,
         std::vector<Transition> transitions)
    : alphabet_(alphabet),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      transitions_(std::move(transitions)) {
  if (alphabet_.size() > kMaxSetLetters) {
    throw CapacityError("automata support at most " + std::to_string(kMaxSetLetters) + " letters");
  }
  if (num_states_ == 0) throw InputError("an NFA needs at least one state");
  if (initial_ >= num_states_) throw InputError("initial state out of range");
  if (finals_.empty()) throw InputError("an NFA needs at least one final state");
  for (StateId f : finals_) {
    if (f >= num_states_) throw InputError("final state " + std::to_string(f) + " out of range");
  }
  std::sort(finals_.begin(), finals_.end());
  finals_.erase(std::unique(finals_.begin(), finals_.end()), finals_.end());

  for (const Transition& t : transitions_) {
    if (t.from >= num_states_ || t.to >= num_states_) {
      throw InputError("transition state out of range");
    }
    if (t.label != kEpsilon && !alphabet_.contains(t.label)) {
      throw InputError("letter out of range: " + std::to_string(t.label));
    }
    has_epsilon_ = has_epsilon_ || t.label == kEpsilon;
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  out_offsets_.assign(num_states_ + 1, 0);
  for (const Transition& t : transitions_) ++out_offsets_[t.from + 1];
  for (std::size_t q = 0; q < num_states_; ++q) out_offsets_[q + 1] += out_offsets_[q];
}

bool Nfa::is_final(StateId q) const {
  return std::binary_search(finals_.begin(), finals_.end(), q);
}

std::span<const Transition> Nfa::out_edges(StateId q) const {
  return std::span<const Transition>(transitions_).subspan(
      out_offsets_[q], out_offsets_[q + 1] - out_offsets_[q]);
}

bool Nfa::is_deterministic() const {
  if (has_epsilon_) return false;
  for (std::size_t i = 1; i < transitions_.size(); ++i) {
    const Transition& a = transitions_[i - 1];
    const Transition& b = transitions_[i];
    if (a.from == b.from && a.label == b.label) return false;
  }
  return true;
}

NormalizedNfa NormalizedNfa::from_normalized(Nfa nfa) {
  if (nfa.finals().size() != 1) throw InputError("normalized NFA needs exactly one final state");
  if (!nfa.out_edges(nfa.finals().front()).empty()) {
    throw InputError("final state of a normalized NFA must have no outgoing transitions");
  }
  auto trimmed = trim(nfa);
  if (!trimmed || trimmed->num_states() != nfa.num_states()) {
    throw InputError("normalized NFA must be trim");
  }
  return NormalizedNfa(std::move(nfa));
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

std::uint64_t parse_number(const std::string& token, std::size_t line_no) {
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a number, got '" + token + "'", line_no);
  }
  try {
    return std::stoull(token);
  } catch (const std::out_of_range&) {
    throw ParseError("line " + std::to_string(line_no) + ": number too large", line_no);
  }
}

}  // namespace

Nfa parse_nfa(std::istream& in) {
  std::optional<std::size_t> sigma;
  std::optional<std::size_t> states;
  std::optional<StateId> initial;
  std::vector<StateId> finals;
  bool saw_final = false;
  bool saw_magic = false;
  bool saw_end = false;
  std::vector<Transition> transitions;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream tokens(strip_comment(raw));
    std::vector<std::string> words;
    for (std::string tok; tokens >> tok;) words.push_back(tok);
    if (words.empty()) continue;
    if (saw_end) throw ParseError("line " + std::to_string(line_no) + ": content after 'end'", line_no);

    const std::string& head = words.front();
    const auto fail = [&](const std::string& msg) -> ParseError {
      return ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
    };
    if (!saw_magic) {
      if (head != "nfa" || words.size() != 1) throw fail("missing header: expected 'nfa'");
      saw_magic = true;
      continue;
    }
    if (head == "sigma" || head == "states" || head == "initial") {
      if (words.size() != 2) throw fail("'" + head + "' takes exactly one value");
      const auto value = parse_number(words[1], line_no);
      if (head == "initial") {
        if (initial) throw fail("duplicate 'initial'");
        initial = static_cast<StateId>(value);
      } else {
        auto& slot = head == "sigma" ? sigma : states;
        if (slot) throw fail("duplicate '" + head + "'");
        slot = static_cast<std::size_t>(value);
      }
      continue;
    }
    if (head == "final") {
      if (words.size() < 2) throw fail("'final' needs at least one state");
      for (std::size_t i = 1; i < words.size(); ++i) {
        finals.push_back(static_cast<StateId>(parse_number(words[i], line_no)));
      }
      saw_final = true;
      continue;
    }
    if (head == "end") {
      if (words.size() != 1) throw fail("'end' takes no values");
      saw_end = true;
      continue;
    }
    if (words.size() != 3) throw fail("expected 'from label to'");
    if (!sigma || !states || !initial || !saw_final) {
      throw fail("missing header fields before transitions");
    }
    const auto from = parse_number(words[0], line_no);
    const auto label = parse_number(words[1], line_no);
    const auto to = parse_number(words[2], line_no);
    if (label > *sigma) throw fail("letter out of range: " + words[1]);
    if (from >= *states || to >= *states) throw fail("state out of range");
    transitions.push_back({static_cast<StateId>(from), static_cast<Letter>(label), static_cast<StateId>(to)});
  }
  if (!saw_magic) throw ParseError("missing header: expected 'nfa'", line_no);
  if (!sigma) throw ParseError("missing header field 'sigma'", line_no);
  if (!states) throw ParseError("missing header field 'states'", line_no);
  if (!initial) throw ParseError("missing header field 'initial'", line_no);
  if (!saw_final) throw ParseError("missing header field 'final'", line_no);
  if (!saw_end) throw ParseError("missing 'end'", line_no);
  if (*initial >= *states) throw ParseError("initial state out of range", line_no);
  for (StateId f : finals) {
    if (f >= *states) throw ParseError("final state out of range", line_no);
  }
  if (*sigma == 0) throw ParseError("sigma must be at least 1", line_no);
  return Nfa(Alphabet(*sigma), *states, *initial, std::move(finals), std::move(transitions));
}

Nfa parse_nfa(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_nfa(in);
}

std::string format_nfa(const Nfa& nfa) {
  std::ostringstream out;
  out << "nfa\n"
      << "sigma " << nfa.alphabet().size() << "\n"
      << "states " << nfa.num_states() << "\n"
      << "initial " << nfa.initial() << "\n"
      << "final";
  for (StateId f : nfa.finals()) out << ' ' << f;
  out << "\n";
  for (const Transition& t : nfa.transitions()) out << t.from << ' ' << t.label << ' ' << t.to << "\n";
  out << "end\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Normalization

namespace {

std::vector<bool> forward_reachable(const Nfa& nfa) {
  std::vector<bool> seen(nfa.num_states(), false);
  std::vector<StateId> stack{nfa.initial()};
  seen[nfa.initial()] = true;
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (const Transition& t : nfa.out_edges(q)) {
      if (!seen[t.to]) {
        seen[t.to] = true;
        stack.push_back(t.to);
      }
    }
  }
  return seen;
}

std::vector<bool> backward_reachable(const Nfa& nfa) {
  const std::size_t n = nfa.num_states();
  std::vector<std::vector<StateId>> preds(n);
  for (const Transition& t : nfa.transitions()) preds[t.to].push_back(t.from);
  std::vector<bool> seen(n, false);
  std::vector<StateId> stack;
  for (StateId f : nfa.finals()) {
    seen[f] = true;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : preds[q]) {
      if (!seen[p]) {
        seen[p] = true;
        stack.push_back(p);
      }
    }
  }
  return seen;
}

}  // namespace

std::optional<Nfa> trim(const Nfa& nfa) {
  const auto fwd = forward_reachable(nfa);
  const auto bwd = backward_reachable(nfa);
  const std::size_t n = nfa.num_states();
  if (!fwd[nfa.initial()] || !bwd[nfa.initial()]) return std::nullopt;

  constexpr StateId kDropped = ~StateId{0};
  std::vector<StateId> rename(n, kDropped);
  StateId next = 0;
  for (std::size_t q = 0; q < n; ++q) {
    if (fwd[q] && bwd[q]) rename[q] = next++;
  }
  std::vector<StateId> finals;
  for (StateId f : nfa.finals()) {
    if (rename[f] != kDropped) finals.push_back(rename[f]);
  }
  std::vector<Transition> transitions;
  for (const Transition& t : nfa.transitions()) {
    if (rename[t.from] != kDropped && rename[t.to] != kDropped) {
      transitions.push_back({rename[t.from], t.label, rename[t.to]});
    }
  }
  return Nfa(nfa.alphabet(), next, rename[nfa.initial()], std::move(finals), std::move(transitions));
}

std::variant<NormalizedNfa, EmptyLanguage> normalize(const Nfa& nfa) {
  const auto fresh = static_cast<StateId>(nfa.num_states());
  std::vector<Transition> transitions(nfa.transitions().begin(), nfa.transitions().end());
  for (StateId f : nfa.finals()) transitions.push_back({f, kEpsilon, fresh});
  Nfa extended(nfa.alphabet(), nfa.num_states() + 1, nfa.initial(), {fresh}, std::move(transitions));
  auto trimmed = trim(extended);
  if (!trimmed) return EmptyLanguage{};
  // Trimming keeps relative order, so the fresh state stays the last id.
  return NormalizedNfa::from_normalized(std::move(*trimmed));
}

std::vector<bool> epsilon_closure(const Nfa& nfa, std::vector<bool> states) {
  std::vector<StateId> stack;
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (states[q]) stack.push_back(static_cast<StateId>(q));
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (const Transition& t : nfa.out_edges(q)) {
      if (t.label != kEpsilon) break;  // ε (label 0) sorts first
      if (!states[t.to]) {
        states[t.to] = true;
        stack.push_back(t.to);
      }
    }
  }
  return states;
}

Nfa remove_epsilon(const NormalizedNfa& normalized) {
  const Nfa& nfa = normalized.nfa();
  const std::size_t n = nfa.num_states();
  std::vector<Transition> transitions;
  std::vector<StateId> finals;
  for (std::size_t q = 0; q < n; ++q) {
    std::vector<bool> start(n, false);
    start[q] = true;
    const auto closure = epsilon_closure(nfa, std::move(start));
    for (std::size_t p = 0; p < n; ++p) {
      if (!closure[p]) continue;
      if (nfa.is_final(static_cast<StateId>(p))) finals.push_back(static_cast<StateId>(q));
      for (const Transition& t : nfa.out_edges(static_cast<StateId>(p))) {
        if (t.label != kEpsilon) transitions.push_back({static_cast<StateId>(q), t.label, t.to});
      }
    }
  }
  Nfa eps_free(nfa.alphabet(), n, nfa.initial(), std::move(finals), std::move(transitions));
  // The language is nonempty, so trimming always succeeds.
  return *trim(eps_free);
}

bool accepts(const Nfa& nfa, const Word& w) {
  if (!(nfa.alphabet() == w.alphabet())) throw InputError("word and automaton use different alphabets");
  std::vector<bool> current(nfa.num_states(), false);
  current[nfa.initial()] = true;
  current = epsilon_closure(nfa, std::move(current));
  for (Letter a : w.letters()) {
    std::vector<bool> next(nfa.num_states(), false);
    bool any = false;
    for (std::size_t q = 0; q < current.size(); ++q) {
      if (!current[q]) continue;
      for (const Transition& t : nfa.out_edges(static_cast<StateId>(q))) {
        if (t.label == a) {
          next[t.to] = true;
          any = true;
        }
      }
    }
    if (!any) return false;
    current = epsilon_closure(nfa, std::move(next));
  }
  for (StateId f : nfa.finals()) {
    if (current[f]) return true;
  }
  return false;
}

}  // namespace kuniv
