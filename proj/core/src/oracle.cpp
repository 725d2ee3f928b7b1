#include "kuniv/oracle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "kuniv/errors.hpp"

namespace kuniv {

namespace {

std::vector<bool> co_accessible(const Nfa& a) {
  std::vector<std::vector<StateId>> pred(a.num_states());
  for (const Transition& t : a.transitions()) pred[t.to].push_back(t.from);
  std::vector<bool> ok(a.num_states(), false);
  std::vector<StateId> stack;
  for (StateId f : a.finals()) {
    ok[f] = true;
    stack.push_back(f);
  }
  while (!stack.empty()) {
    const StateId q = stack.back();
    stack.pop_back();
    for (StateId p : pred[q]) {
      if (!ok[p]) {
        ok[p] = true;
        stack.push_back(p);
      }
    }
  }
  return ok;
}

bool any_final(const Nfa& a, const std::vector<bool>& set) {
  return std::any_of(a.finals().begin(), a.finals().end(), [&](StateId f) { return set[f]; });
}

// ε-closed successor set on letter x, restricted to co-accessible states.
std::vector<bool> advance(const Nfa& a, const std::vector<bool>& set, Letter x,
                          const std::vector<bool>& useful) {
  std::vector<bool> next(a.num_states(), false);
  for (StateId q = 0; q < a.num_states(); ++q) {
    if (!set[q]) continue;
    for (const Transition& t : a.out_edges(q)) {
      if (t.label == x && useful[t.to]) next[t.to] = true;
    }
  }
  next = epsilon_closure(a, std::move(next));
  for (std::size_t q = 0; q < next.size(); ++q) next[q] = next[q] && useful[q];
  return next;
}

std::vector<bool> start_set(const Nfa& a, const std::vector<bool>& useful) {
  std::vector<bool> s(a.num_states(), false);
  s[a.initial()] = true;
  s = epsilon_closure(a, std::move(s));
  for (std::size_t q = 0; q < s.size(); ++q) s[q] = s[q] && useful[q];
  return s;
}

bool empty_set(const std::vector<bool>& s) {
  return std::none_of(s.begin(), s.end(), [](bool b) { return b; });
}

void require_epsilon_free(const Nfa& a) {
  if (a.has_epsilon()) throw InputError("product construction requires an epsilon-free automaton");
}

// Node of the breadth-first search over (state set, arches capped at cap, rest);
// parent and via rebuild the word.
struct SubsetNode {
  std::vector<bool> set;
  std::size_t arches;
  std::uint32_t rest;
  std::size_t parent;
  Letter via;
};

// visit(nodes, i, accepting) sees every node at its first (shortest) depth and
// stops the search by returning false.
template <typename Visit>
void subset_search(const Nfa& a, std::size_t cap, std::size_t max_len, Visit visit) {
  const std::size_t sigma = a.alphabet().size();
  if (sigma > 24) throw CapacityError("bounded word search supports at most 24 letters");
  const std::uint32_t full = (std::uint32_t{1} << sigma) - 1;
  const std::vector<bool> useful = co_accessible(a);
  std::vector<SubsetNode> nodes;
  std::map<std::tuple<std::vector<bool>, std::size_t, std::uint32_t>, std::size_t> index;
  const std::vector<bool> s0 = start_set(a, useful);
  if (empty_set(s0)) return;
  nodes.push_back({s0, 0, 0, 0, 0});
  index.emplace(std::make_tuple(s0, std::size_t{0}, std::uint32_t{0}), 0);
  std::size_t layer_begin = 0;
  for (std::size_t len = 0;; ++len) {
    const std::size_t layer_end = nodes.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      if (!visit(nodes, i, any_final(a, nodes[i].set))) return;
    }
    if (len == max_len || layer_begin == layer_end) return;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (Letter x = 1; x <= sigma; ++x) {
        std::vector<bool> next = advance(a, nodes[i].set, x, useful);
        if (empty_set(next)) continue;
        std::size_t c = nodes[i].arches;
        std::uint32_t r = nodes[i].rest | (std::uint32_t{1} << (x - 1));
        if (r == full) {
          r = 0;
          c = std::min(c + 1, cap);
        }
        auto key = std::make_tuple(next, c, r);
        if (index.count(key)) continue;
        index.emplace(std::move(key), nodes.size());
        nodes.push_back({std::move(next), c, r, i, x});
      }
    }
    layer_begin = layer_end;
  }
}

}  // namespace

std::vector<Word> enumerate_language(const Nfa& a, std::size_t max_len) {
  const std::vector<bool> useful = co_accessible(a);
  std::vector<Word> out;
  std::vector<std::pair<Word, std::vector<bool>>> layer;
  const std::vector<bool> s0 = start_set(a, useful);
  if (empty_set(s0)) return out;
  layer.emplace_back(Word(a.alphabet()), s0);
  for (std::size_t len = 0;; ++len) {
    for (const auto& [w, set] : layer) {
      if (any_final(a, set)) out.push_back(w);
    }
    if (len == max_len) break;
    std::vector<std::pair<Word, std::vector<bool>>> next_layer;
    for (const auto& [w, set] : layer) {
      for (Letter x = 1; x <= a.alphabet().size(); ++x) {
        std::vector<bool> next = advance(a, set, x, useful);
        if (empty_set(next)) continue;
        Word v = w;
        v.push_back(x);
        next_layer.emplace_back(std::move(v), std::move(next));
      }
    }
    if (next_layer.empty()) break;
    layer = std::move(next_layer);
  }
  return out;
}

ProductAutomaton build_product(const Nfa& a, std::size_t cap) {
  require_epsilon_free(a);
  const std::size_t sigma = a.alphabet().size();
  if (sigma > 24) throw CapacityError("product construction supports at most 24 letters");
  const std::uint32_t full = (std::uint32_t{1} << sigma) - 1;
  ProductAutomaton p;
  p.cap = cap;
  auto key = [&](const ProductState& s) {
    return (static_cast<std::uint64_t>(s.q) * (cap + 1) + s.arches) * (std::uint64_t{full} + 1) +
           s.rest;
  };
  std::unordered_map<std::uint64_t, StateId> ids;
  p.states.push_back({a.initial(), 0, 0});
  ids.emplace(key(p.states[0]), 0);
  for (std::size_t i = 0; i < p.states.size(); ++i) {
    const ProductState s = p.states[i];
    for (const Transition& t : a.out_edges(s.q)) {
      ProductState next{t.to, s.arches, s.rest | (std::uint32_t{1} << (t.label - 1))};
      if (next.arches == cap) next.rest = 0;
      if (next.rest == full) {
        next.rest = 0;
        next.arches = std::min(next.arches + 1, cap);
      }
      auto [it, inserted] = ids.emplace(key(next), static_cast<StateId>(p.states.size()));
      if (inserted) p.states.push_back(next);
      p.transitions.push_back({static_cast<StateId>(i), t.label, it->second});
    }
  }
  return p;
}

std::optional<MaxIndex> max_universality_product(const Nfa& epsilon_free) {
  const std::size_t cap = epsilon_free.num_states() + 1;
  const ProductAutomaton p = build_product(epsilon_free, cap);
  std::optional<std::size_t> best;
  for (const ProductState& s : p.states) {
    if (!epsilon_free.is_final(s.q)) continue;
    if (s.arches == cap) return MaxIndex::unbounded();
    best = std::max(best.value_or(0), s.arches);
  }
  if (!best) return std::nullopt;
  return MaxIndex::finite(*best);
}

MaxIndex max_universality_product(const NormalizedNfa& a) {
  // A normalized automaton has a nonempty language.
  return *max_universality_product(remove_epsilon(a));
}

bool usu_decide(const Nfa& epsilon_free, std::size_t k) {
  const ProductAutomaton p = build_product(epsilon_free, k);
  return std::none_of(p.states.begin(), p.states.end(), [&](const ProductState& s) {
    return epsilon_free.is_final(s.q) && s.arches < k;
  });
}

bool usu_decide(const NormalizedNfa& a, std::size_t k) { return usu_decide(remove_epsilon(a), k); }

std::optional<Word> find_universal_word(const Nfa& a, std::size_t k, std::size_t max_len) {
  std::optional<Word> found;
  subset_search(a, k, max_len, [&](const std::vector<SubsetNode>& nodes, std::size_t i, bool acc) {
    if (!acc || nodes[i].arches < k) return true;
    std::vector<Letter> letters;
    for (std::size_t j = i; j != 0; j = nodes[j].parent) letters.push_back(nodes[j].via);
    std::reverse(letters.begin(), letters.end());
    found = Word(a.alphabet(), std::move(letters));
    return false;
  });
  return found;
}

std::optional<std::size_t> max_index_within(const Nfa& a, std::size_t max_len) {
  std::optional<std::size_t> best;
  const std::size_t cap = max_len / a.alphabet().size() + 1;
  subset_search(a, cap, max_len, [&](const std::vector<SubsetNode>& nodes, std::size_t i, bool acc) {
    if (acc) best = std::max(best.value_or(0), nodes[i].arches);
    return true;
  });
  return best;
}

}  // namespace kuniv
