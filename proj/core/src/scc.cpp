#include "kuniv/scc.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <tuple>

namespace kuniv {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Returns the Tarjan completion index of every state's component; Tarjan
// completes components in reverse topological order.
std::vector<std::uint32_t> tarjan(const Nfa& nfa, std::uint32_t& count) {
  const std::size_t n = nfa.num_states();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> comp(n, kUnvisited);
  std::vector<StateId> stack;
  // Explicit DFS frames: (state, position in its out-edge list).
  std::vector<std::pair<StateId, std::size_t>> frames;
  std::uint32_t next_index = 0;
  count = 0;

  auto visit = [&](StateId root) {
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto edges = nfa.out_edges(v);
      if (pos < edges.size()) {
        const StateId w = edges[pos++].to;
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const StateId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const StateId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        StateId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = count;
        } while (w != done);
        ++count;
      }
    }
  };

  visit(nfa.initial());
  for (StateId q = 0; q < n; ++q) {
    if (index[q] == kUnvisited) visit(q);
  }
  return comp;
}

}  // namespace

std::span<const StateId> SccDecomposition::states_of(ComponentId c) const {
  return std::span<const StateId>(members_).subspan(member_offsets_[c],
                                                    member_offsets_[c + 1] - member_offsets_[c]);
}

LabelSet SccDecomposition::connecting_labels(ComponentId i, ComponentId j) const {
  const auto& in = incoming_[j];
  auto it = std::lower_bound(in.begin(), in.end(), i,
                             [](const CrossEdge& e, ComponentId c) { return e.from < c; });
  if (it == in.end() || it->from != i) return {};
  return it->labels;
}

SccDecomposition decompose(const Nfa& nfa) {
  const std::size_t n = nfa.num_states();
  std::uint32_t e = 0;
  const auto completion = tarjan(nfa, e);

  SccDecomposition d;
  d.component_of_.resize(n);
  for (std::size_t q = 0; q < n; ++q) d.component_of_[q] = e - 1 - completion[q];

  d.member_offsets_.assign(e + 1, 0);
  for (std::size_t q = 0; q < n; ++q) ++d.member_offsets_[d.component_of_[q] + 1];
  for (std::size_t c = 0; c < e; ++c) d.member_offsets_[c + 1] += d.member_offsets_[c];
  d.members_.resize(n);
  {
    auto cursor = d.member_offsets_;
    for (std::size_t q = 0; q < n; ++q) d.members_[cursor[d.component_of_[q]]++] = static_cast<StateId>(q);
  }

  d.v_sets_.assign(e, LetterSet{});
  std::vector<std::tuple<ComponentId, ComponentId, Letter>> renamed;  // (to, from, label)
  for (const Transition& t : nfa.transitions()) {
    const ComponentId from = d.component_of_[t.from];
    const ComponentId to = d.component_of_[t.to];
    if (from == to) {
      if (t.label != kEpsilon) d.v_sets_[from].insert(t.label);
    } else {
      renamed.emplace_back(to, from, t.label);
    }
  }
  std::sort(renamed.begin(), renamed.end());
  renamed.erase(std::unique(renamed.begin(), renamed.end()), renamed.end());

  d.incoming_.assign(e, {});
  for (const auto& [to, from, label] : renamed) {
    auto& in = d.incoming_[to];
    if (in.empty() || in.back().from != from) {
      in.push_back({from, {}});
      d.condensation_edges_.emplace_back(from, to);
    }
    if (label == kEpsilon) {
      in.back().labels.epsilon = true;
    } else {
      in.back().labels.letters.insert(label);
    }
  }
  std::sort(d.condensation_edges_.begin(), d.condensation_edges_.end());

  d.topo_order_.resize(e);
  for (ComponentId c = 0; c < e; ++c) d.topo_order_[c] = c;
  return d;
}

bool has_unbounded_universality(const SccDecomposition& d, const Alphabet& alphabet) {
  const LetterSet all = LetterSet::full(alphabet);
  for (ComponentId c = 0; c < d.num_components(); ++c) {
    if (d.v_set(c) == all) return true;
  }
  return false;
}

void dump_scc(std::ostream& out, const SccDecomposition& d) {
  auto letters = [](const LetterSet& s) {
    std::string text = "{";
    bool first = true;
    for (Letter a : s.letters()) {
      if (!first) text += ",";
      text += std::to_string(a);
      first = false;
    }
    return text + "}";
  };
  out << "components " << d.num_components() << "\n";
  for (ComponentId c = 0; c < d.num_components(); ++c) {
    out << "C" << c << " states {";
    bool first = true;
    for (StateId q : d.states_of(c)) {
      out << (first ? "" : ",") << q;
      first = false;
    }
    out << "} V=" << letters(d.v_set(c));
    for (const CrossEdge& in : d.incoming(c)) {
      out << " <-C" << in.from << ":" << letters(in.labels.letters) << (in.labels.epsilon ? "+eps" : "");
    }
    out << "\n";
  }
}

}  // namespace kuniv
