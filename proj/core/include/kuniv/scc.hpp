#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "kuniv/letters.hpp"
#include "kuniv/nfa.hpp"

namespace kuniv {

using ComponentId = std::uint32_t;

// Labels of a bundle of transitions: letters plus an ε flag.
struct LabelSet {
  LetterSet letters;
  bool epsilon = false;

  bool empty() const { return letters.empty() && !epsilon; }
  friend bool operator==(const LabelSet&, const LabelSet&) = default;
};

// All transitions from component `from` into one fixed target component.
struct CrossEdge {
  ComponentId from;
  LabelSet labels;
};

// Strongly connected components of the automaton graph. Component ids are
// assigned in topological order of the condensation: every transition goes
// from a component to itself or to a component with a larger id. For a trim
// automaton the initial state's component is 0; for a normalized automaton
// the final state's component is the last one.
class SccDecomposition {
 public:
  ComponentId component_of(StateId q) const { return component_of_[q]; }
  std::size_t num_components() const noexcept { return v_sets_.size(); }
  std::span<const StateId> states_of(ComponentId c) const;

  // Letters labelling transitions internal to `c` (ε stripped).
  const LetterSet& v_set(ComponentId c) const { return v_sets_[c]; }
  // V_{→j}: for each source component, the labels of transitions into `j`.
  // Sorted by source component.
  std::span<const CrossEdge> incoming(ComponentId j) const { return incoming_[j]; }
  // Labels of transitions from component `i` to component `j` (i != j).
  LabelSet connecting_labels(ComponentId i, ComponentId j) const;

  const std::vector<std::pair<ComponentId, ComponentId>>& condensation_edges() const noexcept {
    return condensation_edges_;
  }
  // Always the identity permutation; kept for callers that iterate it.
  const std::vector<ComponentId>& topo_order() const noexcept { return topo_order_; }

 private:
  friend SccDecomposition decompose(const Nfa& nfa);

  std::vector<ComponentId> component_of_;
  std::vector<std::size_t> member_offsets_;
  std::vector<StateId> members_;
  std::vector<LetterSet> v_sets_;
  std::vector<std::vector<CrossEdge>> incoming_;
  std::vector<std::pair<ComponentId, ComponentId>> condensation_edges_;
  std::vector<ComponentId> topo_order_;
};

// Tarjan's algorithm (iterative), linear in states plus transitions.
SccDecomposition decompose(const Nfa& nfa);
inline SccDecomposition decompose(const NormalizedNfa& nfa) { return decompose(nfa.nfa()); }

// True iff some component's internal labels cover the whole alphabet, i.e.
// the (trim) automaton accepts words of every universality index.
bool has_unbounded_universality(const SccDecomposition& d, const Alphabet& alphabet);

// Human-readable listing of components and their label sets.
void dump_scc(std::ostream& out, const SccDecomposition& d);

}  // namespace kuniv
