#include "kuniv/states_fpt.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

#include "kuniv/errors.hpp"
#include "kuniv/matching.hpp"

namespace kuniv {

namespace {

// Feasibility of seq[begin..end] (inclusive) given precomputed connecting labels.
bool feasible_range(const std::vector<ComponentId>& comps, const std::vector<LabelSet>& links,
                    std::size_t begin, std::size_t end, const SccDecomposition& d,
                    const LetterSet& sigma) {
  for (std::size_t i = begin; i < end; ++i) {
    if (links[i].empty()) return false;
  }
  LetterSet v;
  for (std::size_t i = begin; i <= end; ++i) v = v | d.v_set(comps[i]);
  if (v == sigma) return true;
  const std::vector<Letter> missing = (sigma - v).letters();
  const std::size_t h = end - begin + 1;
  if (missing.size() > h - 1) return false;

  MatchingInstance inst;
  inst.left_size = h - 1;
  inst.right_size = missing.size();
  inst.adjacency.resize(h - 1);
  for (std::size_t i = 0; i + 1 < h; ++i) {
    const LetterSet& labels = links[begin + i].letters;
    for (std::size_t r = 0; r < missing.size(); ++r) {
      if (labels.contains(missing[r])) inst.adjacency[i].push_back(r);
    }
  }
  return hopcroft_karp(inst).size() == missing.size();
}

struct Prepared {
  std::vector<ComponentId> comps;
  std::vector<LabelSet> links;  // links[i] connects comps[i] to comps[i+1]
};

Prepared prepare(const ComponentSequence& seq, const SccDecomposition& d) {
  Prepared p;
  p.comps.reserve(seq.states.size());
  for (StateId q : seq.states) p.comps.push_back(d.component_of(q));
  for (std::size_t i = 0; i + 1 < p.comps.size(); ++i) {
    if (p.comps[i] >= p.comps[i + 1]) {
      throw InputError("component sequence must have strictly increasing component ids");
    }
    p.links.push_back(d.connecting_labels(p.comps[i], p.comps[i + 1]));
  }
  return p;
}

std::size_t greedy_arches(const Prepared& p, const SccDecomposition& d, const LetterSet& sigma) {
  for (const LabelSet& link : p.links) {
    if (link.empty()) return 0;
  }
  std::size_t arches = 0;
  std::size_t start = 0;
  for (std::size_t end = 1; end < p.comps.size(); ++end) {
    if (feasible_range(p.comps, p.links, start, end, d, sigma)) {
      ++arches;
      start = end;
    }
  }
  return arches;
}

}  // namespace

bool one_arch_feasible(const ComponentSequence& seq, const SccDecomposition& d,
                       const Alphabet& alphabet) {
  if (seq.states.empty()) return false;
  const Prepared p = prepare(seq, d);
  return feasible_range(p.comps, p.links, 0, p.comps.size() - 1, d, LetterSet::full(alphabet));
}

std::size_t max_arches_for_sequence(const ComponentSequence& seq, const SccDecomposition& d,
                                    const Alphabet& alphabet) {
  if (seq.states.empty()) return 0;
  return greedy_arches(prepare(seq, d), d, LetterSet::full(alphabet));
}

MaxIndex max_universality_states(const NormalizedNfa& nfa, const SccDecomposition& d,
                                 const StatesOptions& options) {
  if (has_unbounded_universality(d, nfa.alphabet())) return MaxIndex::unbounded();
  const std::size_t n = nfa.num_states();
  if (n > options.max_states || n > 62) {
    throw CapacityError("states algorithm limited to " + std::to_string(options.max_states) +
                        " states, automaton has " + std::to_string(n));
  }
  const StateId q0 = nfa.nfa().initial();
  const StateId f = nfa.final_state();
  if (q0 == f) return MaxIndex::finite(0);

  std::vector<StateId> interior;
  for (StateId q = 0; q < n; ++q) {
    if (q != q0 && q != f) interior.push_back(q);
  }
  const LetterSet sigma = LetterSet::full(nfa.alphabet());
  const std::uint64_t subsets = std::uint64_t{1} << interior.size();
  const ComponentId c0 = d.component_of(q0);
  const ComponentId cf = d.component_of(f);

  auto scan = [&](std::uint64_t first, std::uint64_t stride) {
    std::size_t best = 0;
    std::vector<std::pair<ComponentId, StateId>> chosen;
    for (std::uint64_t mask = first; mask < subsets; mask += stride) {
      chosen.clear();
      chosen.emplace_back(c0, q0);
      if (cf != c0) chosen.emplace_back(cf, f);
      for (std::size_t b = 0; b < interior.size(); ++b) {
        if (mask >> b & 1) chosen.emplace_back(d.component_of(interior[b]), interior[b]);
      }
      std::sort(chosen.begin(), chosen.end());
      const bool shared = std::adjacent_find(chosen.begin(), chosen.end(), [](auto& x, auto& y) {
                            return x.first == y.first;
                          }) != chosen.end();
      if (shared) continue;
      Prepared p;
      for (const auto& [c, q] : chosen) p.comps.push_back(c);
      for (std::size_t i = 0; i + 1 < p.comps.size(); ++i) {
        p.links.push_back(d.connecting_labels(p.comps[i], p.comps[i + 1]));
      }
      best = std::max(best, greedy_arches(p, d, sigma));
    }
    return best;
  };

  const std::size_t workers = std::max<std::size_t>(1, options.workers);
  if (workers == 1) return MaxIndex::finite(scan(0, 1));
  std::vector<std::size_t> results(workers, 0);
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] { results[w] = scan(w, workers); });
  }
  for (auto& t : threads) t.join();
  return MaxIndex::finite(*std::max_element(results.begin(), results.end()));
}

MaxIndex max_universality_states(const NormalizedNfa& nfa, const StatesOptions& options) {
  return max_universality_states(nfa, decompose(nfa), options);
}

bool k_esu_states(const NormalizedNfa& nfa, std::size_t k, const StatesOptions& options) {
  return max_universality_states(nfa, options).reaches(k);
}

}  // namespace kuniv
